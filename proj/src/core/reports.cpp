// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/reports.hpp"

#include <cmath>
#include <cstdio>

#include "core/bounds.hpp"
#include "core/distill.hpp"
#include "core/error.hpp"
#include "core/intrinsic.hpp"
#include "core/numeric.hpp"
#include "core/wiretap.hpp"

namespace secamp {

namespace {

Json estimate(const EnsembleEstimate& e) {
  return Json{{"exact", e.exact},
              {"mean", number(e.mean)},
              {"members", e.members},
              {"stderr", number(e.stderr_)}};
}

Json exponent(const ExponentResult& r) {
  return Json{{"arg", number(r.arg)},
              {"diverges", r.diverges},
              {"hypothesis_met", r.hypothesis_met},
              {"method", r.method},
              {"value", number(r.value)}};
}

Json mode_json(const EnsembleMode& m) {
  if (m.kind == EnsembleMode::Kind::exact) return Json{{"kind", "exact"}};
  return Json{{"kind", "monte_carlo"}, {"samples", m.samples}, {"seed", m.seed}};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double h(double x) {
  double v = 0.0;
  if (x > 0.0) v -= x * std::log(x);
  if (x < 1.0) v -= (1.0 - x) * std::log1p(-x);
  return v;
}

const char* part_name(TypePart p) {
  switch (p) {
    case TypePart::injective:
      return "injective";
    case TypePart::spread:
      return "spread";
    case TypePart::leftover:
      return "leftover";
  }
  return "leftover";
}

}  // namespace

Json entropy_report(const SubDist& p, std::span<const double> orders) {
  Json r{{"size", p.size()},
         {"total", p.total()},
         {"collision_mass", collision_mass(p)},
         {"d1_uniformity", d1_uniformity(p)}};
  const bool normalized = std::fabs(p.total() - 1.0) <= 1e-9;
  if (normalized) {
    r["shannon"] = shannon_entropy(p);
    r["min_entropy"] = number(min_entropy(p));
    r["renyi2"] = renyi_tilde(p, 1.0);
    r["renyi2_derivative"] = renyi_tilde_derivative(p, 1.0);
    r["critical_rate"] = critical_rate(p);
  }
  Json rows = Json::array();
  for (double s : orders) {
    Json row{{"s", s}, {"renyi_tilde", number(renyi_tilde(p, s))}};
    if (normalized) row["renyi_tilde_derivative"] = number(renyi_tilde_derivative(p, s));
    rows.push_back(std::move(row));
  }
  r["orders"] = std::move(rows);
  return r;
}

Json exponent_report(const SubDist& p, std::string_view form, double R) {
  require(std::isfinite(R), "rate must be finite");
  Json r{{"R", R}, {"form", std::string(form)}};
  if (form == "universal") {
    r["result"] = exponent(exponent_universal(p, R));
  } else if (form == "divergence") {
    r["result"] = exponent(exponent_divergence_form(p, R));
  } else if (form == "cramer") {
    r["result"] = exponent(exponent_cramer(p, R));
  } else if (form == "cramer_restricted") {
    r["result"] = exponent(exponent_cramer_restricted(p, R));
  } else if (form == "specialized") {
    r["result"] = exponent(exponent_specialized(p, R));
  } else if (form == "hr") {
    const HrBounds b = hr_bounds(p, R);
    r["result"] = Json{{"lower", b.lower},
                       {"lower_applicable", b.lower_applicable},
                       {"upper", b.upper},
                       {"upper_applicable", b.upper_applicable}};
    r["cramer"] = exponent(exponent_cramer(p, R));
  } else if (form == "lemma") {
    const ConstrainedMinReport l = lemma_l991_check(p, R);
    r["result"] = Json{{"branch_high", l.branch_high},
                       {"discrepancy", number(l.discrepancy)},
                       {"identity_range", l.identity_range},
                       {"lhs", number(l.lhs)},
                       {"rhs_collision", l.rhs_collision},
                       {"rhs_restricted", l.rhs_restricted},
                       {"rhs_unrestricted", number(l.rhs_unrestricted)}};
  } else {
    fail(ErrorCode::invalid_argument, "unknown exponent form '" + std::string(form) + "'");
  }
  if (form != "hr" && form != "lemma") r["critical_rate"] = critical_rate(p);
  return r;
}

Json cond_exponent_report(const JointDist& j, double R) {
  require(std::isfinite(R), "rate must be finite");
  return Json{{"R", R},
              {"conditional_entropy", conditional_entropy(j)},
              {"form", "cond"},
              {"no_smoothing", exponent(exponent_cond_no_smoothing(j, R))},
              {"phi", exponent(exponent_cond_phi(j, R))},
              {"pinsker", exponent(exponent_cond_pinsker(j, R))}};
}

Json pa_report(const SubDist& p, const FamilySpec& spec, const EnsembleMode& mode) {
  const auto fam = make_family(spec);
  require(fam->input_size() == p.size(),
          "hash family input size " + std::to_string(fam->input_size()) +
              " does not match the distribution size " + std::to_string(p.size()));
  const std::size_t M = fam->output_size();
  const Thm1Curve c = bound_thm1(p, M);
  Json r{{"family", fam->name()},
         {"input_size", fam->input_size()},
         {"M", M},
         {"mode", mode_json(mode)},
         {"expected_d1", estimate(expected_d1(p, *fam, mode))},
         {"expected_collision_mass", estimate(expected_collision_mass(p, *fam, mode))},
         {"leftover_hash_rhs", leftover_hash_rhs(p, M)},
         {"bound_no_smoothing", bound_no_smoothing(p, M)},
         {"bound_smoothed", Json{{"at_s1", c.at_s1}, {"min", c.min_value}, {"min_s", c.min_s}}}};
  if (M >= 2 && std::fabs(p.total() - 1.0) <= 1e-9) {
    const BestOmega b = best_theorem2_lower_bound(p, M);
    r["lower_bound"] = Json{{"omega", b.omega}, {"value", b.value}};
  }
  return r;
}

Json wiretap_report(const Channel& wb, const Channel& we, const SubDist* p,
                    std::size_t M, std::size_t L, std::size_t n,
                    const EnsembleMode& mode) {
  require(n >= 1, "n must be >= 1");
  require(wb.inputs() == we.inputs(),
          "Bob's and Eve's channels must share the input alphabet");
  const Channel bn = wb.power(n), en = we.power(n);
  SubDist pn = SubDist::uniform(bn.inputs());
  if (p) {
    require(p->size() == wb.inputs(), "input distribution does not match the channels");
    pn = iid_extend(*p, n);
  }
  const auto fam = default_code_family(M, L);
  const WiretapEnsembleReport e = random_code_ensemble(bn, en, pn, M, L, *fam, mode);
  Json sel{{"found", e.selected.found}};
  if (e.selected.found)
    sel.update(Json{{"codebook", e.selected.codebook},
                    {"d1", e.selected.d1},
                    {"eps_b", e.selected.eps_b},
                    {"hash", e.selected.table}});
  return Json{{"M", M},
              {"L", L},
              {"n", n},
              {"family", fam->name()},
              {"mode", mode_json(mode)},
              {"conditions_checked", e.conditions_checked},
              {"eps_b", estimate(e.eps_b)},
              {"d1", estimate(e.d1)},
              {"bound_eps", e.bound_eps},
              {"bound_eps_t", e.bound_eps_t},
              {"bound_d1", e.bound_d1},
              {"bound_d1_t", e.bound_d1_t},
              {"selected", std::move(sel)}};
}

Json intrinsic_report(const SubDist& p, std::uint32_t n, std::size_t M) {
  const SpecializedMap map = build_specialized(p, n, M);
  const SpecializedBound b = bound_specialized(p, n, M);
  Json parts = Json::object();
  for (const char* name : {"injective", "spread", "leftover"})
    parts[name] = Json{{"cells", 0}, {"mass", 0.0}, {"types", 0}};
  for (const auto& t : map.types) {
    Json& slot = parts[part_name(t.part)];
    slot["types"] = slot["types"].get<std::uint64_t>() + 1;
    slot["mass"] = slot["mass"].get<double>() + t.probability;
    if (t.part != TypePart::leftover)
      slot["cells"] = slot["cells"].get<std::uint64_t>() + t.cells;
  }
  const SubDist pn = iid_extend(p, n);
  return Json{{"n", n},
              {"M", M},
              {"d1_exact", map.d1},
              {"cells_used", map.cells_used},
              {"bound_991", Json{{"heavy_mass", b.heavy_mass},
                                 {"type_count_term", b.type_count_term},
                                 {"type_sum", b.type_sum},
                                 {"total", b.total}}},
              {"lemdi_bound", lemdi_lower_bound(pn, M)},
              {"partition_summary", std::move(parts)}};
}

Json distill_report(const JointDist& pab, const JointDist& pae, std::size_t M,
                    std::size_t L, std::size_t n, const EnsembleMode& mode) {
  const CorrelationTriple tri(pab, pae);
  const DistillReport d = run_distillation(tri, M, L, n, mode);
  const auto& e = d.ensemble;
  return Json{{"M", M},
              {"L", L},
              {"n", n},
              {"mode", mode_json(mode)},
              {"eps_b", estimate(e.eps_b)},
              {"d1", estimate(e.d1)},
              {"eps_display", d.eps_display},
              {"d1_display", d.d1_display},
              {"ensemble_within", d.ensemble_within},
              {"selected_within", d.selected_within},
              {"selected", Json{{"d1", e.selected.d1},
                                {"eps_b", e.selected.eps_b},
                                {"found", e.selected.found}}},
              {"rate_channels", d.rate_channels},
              {"rate_entropies", d.rate_entropies},
              {"bob_identity_gap", d.bob_identity_gap},
              {"additivity_gap", d.additivity_gap}};
}

Json hash_check_report(const FamilySpec& spec) {
  const auto fam = make_family(spec);
  const Universal2Report u = check_universal2(*fam);
  const BalanceReport b = check_balanced(*fam);
  const StrongUniversal2Report s = check_strongly_universal2(*fam);
  Json bal{{"pass", b.pass}};
  if (b.first_unbalanced_seed) bal["first_unbalanced_seed"] = *b.first_unbalanced_seed;
  return Json{{"family", fam->name()},
              {"input_size", fam->input_size()},
              {"output_size", fam->output_size()},
              {"seeds", *fam->seed_count()},
              {"universal2", Json{{"max_collision", u.max_collision},
                                  {"pass", u.pass},
                                  {"threshold", u.threshold}}},
              {"balanced", std::move(bal)},
              {"strongly_universal2", Json{{"max_marginal_deviation", s.max_marginal_deviation},
                                           {"max_pair_deviation", s.max_pair_deviation},
                                           {"pairwise_independent", s.pairwise_independent},
                                           {"pass", s.pass},
                                           {"uniform_outputs", s.uniform_outputs}}}};
}

Channel example_channel(double a) {
  require(a >= 0.0 && 9.0 * a <= 1.0, "example channel needs 0 <= a <= 1/9");
  return Channel(2, 2, {a, 1.0 - a, 1.0 - 9.0 * a, 9.0 * a});
}

double example_closed_form_information(double a) {
  return h(0.5 - 5.0 * a) - (h(a) + h(9.0 * a)) / 2.0;
}

FigureData figure_data(int id, std::size_t points) {
  require(points >= 2 && points <= 100'000, "figure points must lie in [2, 100000]");
  FigureData f;
  f.id = id;
  const SubDist p = SubDist::bernoulli(0.2);
  const double H = shannon_entropy(p);
  auto add = [&](double x, const std::string& c, double v) { f.rows.push_back({x, c, v}); };
  if (id == 2) {
    const double window = H - std::log(3.0) / 24.0;
    f.header = {"source Bernoulli(0.2), x = R' (nats)",
                "h(0.2) = " + fmt6(H),
                "H2'(A) = " + fmt6(renyi_tilde_derivative(p, 1.0)),
                "H(A) - log(3)/24 = " + fmt6(window),
                "hr_upper applies for x >= " + fmt6(window)};
    f.curves = {"hr_upper", "restricted_cramer", "hr_lower"};
    for (double x : linspace(0.0, H, points)) {
      const HrBounds b = hr_bounds(p, x);
      add(x, "hr_upper", b.upper);
      add(x, "restricted_cramer", exponent_cramer_restricted(p, x).value);
      add(x, "hr_lower", b.lower);
    }
  } else if (id == 3) {
    f.header = {"source Bernoulli(0.2), x = R (nats)",
                "h(0.2) = " + fmt6(H),
                "2 H2'(A) - H2(A) = " + fmt6(critical_rate(p))};
    f.curves = {"universal", "pinsker", "no_smoothing"};
    const double h2 = renyi_tilde(p, 1.0);
    for (double x : linspace(0.0, H, points)) {
      add(x, "universal", exponent_universal(p, x).value);
      add(x, "pinsker",
          maximize_scalar([&](double s) { return (renyi_tilde(p, s) - s * x) / 2.0; }, 0.0, 1.0)
              .value);
      add(x, "no_smoothing", (h2 - x) / 2.0);
    }
  } else if (id == 4) {
    const double a = 0.05;
    const Channel w = example_channel(a);
    const SubDist u = SubDist::uniform(2);
    f.header = {"channel W_0 = (a, 1-a), W_1 = (1-9a, 9a), a = 0.05, uniform input, x = R (nats)",
                "I(p,W) closed form h(1/2-5a) - (h(a)+h(9a))/2 = " +
                    fmt6(example_closed_form_information(a)),
                "I(p,W) from the matrix = " + fmt6(mutual_information(u, w))};
    f.curves = {"e_phi", "e_psi", "psi_pinsker"};
    for (double x : linspace(0.0, std::log(2.0), points)) {
      add(x, "e_phi", e_phi(x, w, u).value);
      add(x, "e_psi", e_psi(x, w, u).value);
      add(x, "psi_pinsker", e_psi_pinsker(x, w, u).value);
    }
  } else {
    fail(ErrorCode::invalid_argument, "figure id must be 2, 3 or 4");
  }
  return f;
}

std::string figure_csv(const FigureData& f) {
  std::string out;
  out += "# figure " + std::to_string(f.id) + "\n";
  for (const auto& line : f.header) out += "# " + line + "\n";
  out += "x,curve_name,value\n";
  for (const auto& r : f.rows) out += fmt(r.x) + "," + r.curve + "," + fmt(r.value) + "\n";
  return out;
}

Json figure_json(const FigureData& f) {
  Json rows = Json::array();
  for (const auto& r : f.rows)
    rows.push_back(Json{{"curve_name", r.curve}, {"value", number(r.value)}, {"x", r.x}});
  return Json{{"curves", f.curves}, {"header", f.header}, {"id", f.id}, {"rows", std::move(rows)}};
}

}  // namespace secamp
