// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "core/error.hpp"
#include "core/numeric.hpp"
#include "core/privacy_amp.hpp"
#include "core/types.hpp"

namespace secamp {

double lemdi_lower_bound(const SubDist& p, std::size_t M) {
  require(M >= 1, "M must be >= 1");
  const double threshold = 2.0 / static_cast<double>(M);
  CompensatedSum s;
  for (double m : p.mass())
    if (m >= threshold) s.add(m);
  return s.value();
}

ExhaustiveMinimum exhaustive_min_d1(const SubDist& p, std::size_t M) {
  const FullyRandomFamily all(p.size(), M);
  const std::uint64_t count = all.require_enumerable("exhaustive minimum");
  require(static_cast<double>(count) * static_cast<double>(p.size()) <=
              kExactEvaluationLimit,
          "too many functions to enumerate", ErrorCode::size_limit);
  ExhaustiveMinimum out;
  out.functions = count;
  out.min_d1 = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    HashTable t = all.table(seed);
    const double v = d1_hashed(p, t, M);
    if (v < out.min_d1) {
      out.min_d1 = v;
      out.argmin = std::move(t);
    }
  }
  return out;
}

namespace {

double big_to_double(const BigInt& x) { return x.convert_to<double>(); }

// Classifies types and reserves cells in type-lexicographic order.
std::vector<TypeAssignment> classify(const SubDist& p, std::uint32_t n,
                                     std::size_t M) {
  const double logM = std::log(static_cast<double>(M));
  std::vector<TypeAssignment> out;
  std::size_t next = 0;
  for (const TypeClass& tc : enumerate_types(p.size(), n)) {
    TypeAssignment ta;
    ta.counts = tc.counts();
    ta.class_size = big_to_double(tc.class_size());
    ta.probability = tc.class_probability(p);
    ta.log_string_probability = tc.log_string_probability(p);
    // e^{n(D+H)} <= M, i.e. every string has mass >= 1/M.
    if (ta.log_string_probability + logM >= -1e-12) {
      ta.part = TypePart::injective;
      ta.cells = static_cast<std::uint64_t>(ta.class_size);
    } else {
      const double nq = std::floor(static_cast<double>(M) * ta.probability);
      if (nq >= 1.0) {
        ta.part = TypePart::spread;
        ta.cells = static_cast<std::uint64_t>(nq);
      }
    }
    if (ta.part != TypePart::leftover) {
      ta.first_cell = next;
      next += ta.cells;
    }
    out.push_back(std::move(ta));
  }
  require(next <= M, "type partition needs more cells than M",
          ErrorCode::internal);
  return out;
}

}  // namespace

SpecializedMap build_specialized(const SubDist& p, std::uint32_t n,
                                 std::size_t M) {
  require(std::fabs(p.total() - 1.0) <= 1e-9,
          "distribution must have total mass 1");
  require(n >= 1, "n must be >= 1");
  require(M >= 1, "M must be >= 1");
  require(M <= kDefaultCellLimit, "M exceeds the cell limit",
          ErrorCode::size_limit);
  const std::size_t strings = checked_power(p.size(), n, kDefaultCellLimit, "specialized map");

  SpecializedMap map;
  map.n = n;
  map.M = M;
  map.types = classify(p, n, M);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < map.types.size(); ++i) {
    index.emplace(map.types[i].counts, i);
    if (map.types[i].part != TypePart::leftover)
      map.cells_used += map.types[i].cells;
  }

  std::vector<std::uint64_t> seen(map.types.size(), 0);
  map.table.assign(strings, 0);
  for (std::size_t x = 0; x < strings; ++x) {
    const std::size_t ti = index.at(string_counts(x, p.size(), n));
    const TypeAssignment& ta = map.types[ti];
    const std::uint64_t r = seen[ti]++;
    switch (ta.part) {
      case TypePart::injective:
        map.table[x] = ta.first_cell + r;
        break;
      case TypePart::spread:
        map.table[x] = ta.first_cell + r % ta.cells;
        break;
      case TypePart::leftover:
        map.table[x] = 0;
        break;
    }
  }
  map.d1 = d1_hashed(iid_extend(p, n), map.table, M);
  return map;
}

SpecializedBound bound_specialized(const SubDist& p, std::uint32_t n, std::size_t M) {
  require(n >= 1, "n must be >= 1");
  require(M >= 1, "M must be >= 1");
  const double logM = std::log(static_cast<double>(M));
  const double Md = static_cast<double>(M);
  SpecializedBound b;
  CompensatedSum heavy, sum;
  std::size_t types = 0;
  for (const TypeClass& tc : enumerate_types(p.size(), n)) {
    ++types;
    const double lsp = tc.log_string_probability(p);
    const double prob = tc.class_probability(p);
    if (lsp + logM >= -1e-12) heavy.add(prob);
    if (prob > 0.0) sum.add(Md * prob * std::exp(lsp));
  }
  b.heavy_mass = heavy.value();
  b.type_sum = sum.value();
  b.type_count_term = static_cast<double>(types) / Md;
  b.total = 2.0 * (b.heavy_mass + b.type_sum + b.type_count_term);
  return b;
}

ExponentResult exponent_specialized(const SubDist& p, double R) {
  ExponentResult r = exponent_cramer_restricted(p, R);
  r.hypothesis_met = renyi_tilde_derivative(p, 1.0) <= R;
  return r;
}

namespace {

// H(Q) + 2 D(Q||P) - R = sum Q log Q - 2 sum Q log P - R.
double constrained_objective(const std::vector<double>& q, const SubDist& p, double R) {
  CompensatedSum s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    s.add(q[i] * (std::log(q[i]) - 2.0 * std::log(p[i])));
  }
  return s.value() - R;
}

double cross_entropy(const std::vector<double>& q, const SubDist& p) {
  CompensatedSum s;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] > 0.0) s.add(-q[i] * std::log(p[i]));
  return s.value();
}

// min of the convex objective over {Q : -sum Q log P >= R}. The
// unconstrained minimizer is P_2; otherwise the constraint binds and the
// minimum lies on the hyperplane -sum Q log P = R.
double constrained_lhs(const SubDist& p, double R) {
  const std::size_t k = p.size();
  const SubDist p2 = tilt(p, 1.0);
  std::vector<double> q2(p2.mass().begin(), p2.mass().end());
  if (cross_entropy(q2, p) >= R) return constrained_objective(q2, p, R);

  std::vector<double> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = -std::log(p[i]);
  const double wmax = *std::max_element(w.begin(), w.end());
  if (R > wmax + 1e-15) return std::numeric_limits<double>::infinity();

  if (k == 2) {
    // q w0 + (1-q) w1 = R.
    if (std::fabs(w[0] - w[1]) < 1e-300) return constrained_objective(q2, p, R);
    const double q = std::clamp((R - w[1]) / (w[0] - w[1]), 0.0, 1.0);
    return constrained_objective({q, 1.0 - q}, p, R);
  }
  // Ternary: the hyperplane meets the simplex in a segment; parametrize it
  // by its two endpoints found on the simplex edges.
  std::vector<std::vector<double>> ends;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      // Edge between vertices i and j: lambda w_i + (1-lambda) w_j = R.
      const double d = w[i] - w[j];
      double lam;
      if (std::fabs(d) < 1e-300) {
        if (std::fabs(w[i] - R) > 1e-15) continue;
        lam = 1.0;
      } else {
        lam = (R - w[j]) / d;
      }
      if (lam < -1e-15 || lam > 1.0 + 1e-15) continue;
      lam = std::clamp(lam, 0.0, 1.0);
      std::vector<double> q(3, 0.0);
      q[i] = lam;
      q[j] = 1.0 - lam;
      ends.push_back(std::move(q));
    }
  require(!ends.empty(), "empty constraint set", ErrorCode::internal);
  // A vertex on the hyperplane is found from two edges; take the farthest pair.
  std::size_t ia = 0, ib = 0;
  double far = -1.0;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i; j < ends.size(); ++j) {
      double d = 0.0;
      for (std::size_t c = 0; c < 3; ++c) d += std::fabs(ends[i][c] - ends[j][c]);
      if (d > far) {
        far = d;
        ia = i;
        ib = j;
      }
    }
  const auto& a = ends[ia];
  const auto& b = ends[ib];
  auto on_segment = [&](double u) {
    std::vector<double> q(3);
    for (std::size_t i = 0; i < 3; ++i) q[i] = std::max(0.0, (1 - u) * a[i] + u * b[i]);
    return q;
  };
  const auto o = minimize_scalar(
      [&](double u) { return constrained_objective(on_segment(u), p, R); }, 0.0, 1.0);
  return o.value;
}

}  // namespace

ConstrainedMinReport lemma_l991_check(const SubDist& p, double R) {
  require(p.size() == 2 || p.size() == 3,
          "the constrained minimum check supports binary and ternary sources only",
          ErrorCode::unsupported);
  require(std::fabs(p.total() - 1.0) <= 1e-9,
          "distribution must have total mass 1");
  for (double m : p.mass())
    require(m > 0.0, "the constrained minimum check needs full support", ErrorCode::domain);
  ConstrainedMinReport r;
  r.R = R;
  r.branch_high = renyi_tilde_derivative(p, 1.0) <= R;
  r.identity_range = R <= shannon_entropy(p) + 1e-12;
  r.lhs = constrained_lhs(p, R);
  const ExponentResult un = exponent_cramer(p, R);
  r.rhs_unrestricted = un.diverges ? std::numeric_limits<double>::infinity()
                                   : un.value;
  r.rhs_restricted = exponent_cramer_restricted(p, R).value;
  r.rhs_collision = renyi_tilde(p, 1.0) - R;
  if (r.branch_high) {
    r.discrepancy = std::max(std::fabs(r.lhs - r.rhs_unrestricted),
                             std::fabs(r.lhs - r.rhs_restricted));
  } else {
    r.discrepancy = std::max(std::fabs(r.lhs - r.rhs_collision),
                             std::fabs(r.lhs - r.rhs_restricted));
  }
  return r;
}

}  // namespace secamp
