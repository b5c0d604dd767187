// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "core/wiretap.hpp"
#include "support/generators.hpp"

using namespace secamp;
using doctest::Approx;

namespace {

double h(double x) {
  double v = 0.0;
  if (x > 0) v -= x * std::log(x);
  if (x < 1) v -= (1 - x) * std::log(1 - x);
  return v;
}

Channel example_channel(double a) {
  return Channel(2, 2, {a, 1 - a, 1 - 9 * a, 9 * a});
}

Channel bsc(double e) { return Channel(2, 2, {1 - e, e, e, 1 - e}); }

// Direct double sum for phi.
double phi_direct(const Channel& w, const std::vector<double>& p, double t) {
  double s = 0.0;
  for (std::size_t y = 0; y < w.outputs(); ++y) {
    double in = 0.0;
    for (std::size_t x = 0; x < w.inputs(); ++x)
      in += p[x] * std::pow(w(x, y), 1 / (1 - t));
    s += std::pow(in, 1 - t);
  }
  return std::log(s);
}

double mutual_info_direct(const Channel& w, const std::vector<double>& p) {
  double v = 0.0;
  for (std::size_t y = 0; y < w.outputs(); ++y) {
    double wp = 0.0;
    for (std::size_t x = 0; x < w.inputs(); ++x) wp += p[x] * w(x, y);
    for (std::size_t x = 0; x < w.inputs(); ++x)
      if (p[x] > 0 && w(x, y) > 0) v += p[x] * w(x, y) * std::log(w(x, y) / wp);
  }
  return v;
}

// n uses of a binary symmetric channel, inputs and outputs as bit strings.
Channel bsc_power(double e, unsigned n) {
  const std::size_t N = std::size_t{1} << n;
  std::vector<double> m(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const int d = __builtin_popcountll(x ^ y);
      m[x * N + y] = std::pow(e, d) * std::pow(1 - e, static_cast<int>(n) - d);
    }
  return Channel(N, N, m);
}

const SubDist kUniform2 = SubDist::uniform(2);

}  // namespace

TEST_CASE("phi and psi at the origin and their slope") {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const Channel w = testing::random_channel(rng, 2 + rng.below(3), 2 + rng.below(3));
    const SubDist p = testing::random_dist(rng, w.inputs());
    CHECK(phi_channel(w, p, 0.0) == Approx(0.0).epsilon(1e-14));
    CHECK(psi_channel(w, p, 0.0) == Approx(0.0).epsilon(1e-14));
    const double I = mutual_info_direct(w, {p.mass().begin(), p.mass().end()});
    CHECK(mutual_information(p, w) == Approx(I).epsilon(1e-12));
    CHECK(central_difference([&](double t) { return phi_channel(w, p, t); }, 0.0) ==
          Approx(I).epsilon(1e-6));
    CHECK(central_difference([&](double t) { return psi_channel(w, p, t); }, 0.0) ==
          Approx(I).epsilon(1e-6));
    for (double t : {-0.5, 0.2, 0.5})
      CHECK(phi_channel(w, p, t) ==
            Approx(phi_direct(w, {p.mass().begin(), p.mass().end()}, t)).epsilon(1e-12));
  }
}

TEST_CASE("example channel mutual information") {
  const double a = 0.05;
  // Caption formula.
  CHECK(h(0.5 - 5 * a) - (h(a) + h(9 * a)) / 2 == Approx(0.119).epsilon(1e-3));
  // The matrix itself mixes to 1/2 - 4a.
  const Channel w = example_channel(a);
  CHECK(output_distribution(w, kUniform2)[0] == Approx(0.5 - 4 * a));
  CHECK(mutual_information(kUniform2, w) ==
        Approx(h(0.5 - 4 * a) - (h(a) + h(9 * a)) / 2));
}

TEST_CASE("additive channel identities") {
  const Channel w = Channel::additive(AdditiveGroup::cyclic(2), SubDist::bernoulli(0.2));
  CHECK(w(0, 0) == Approx(0.2));
  CHECK(w(1, 0) == Approx(0.8));
  const double direct = std::exp(phi_direct(w, {0.5, 0.5}, 0.5));
  CHECK(direct == Approx(1.16619).epsilon(1e-5));
  CHECK(direct == Approx(std::sqrt(2.0) * std::exp(-0.5 * renyi_tilde(SubDist::bernoulli(0.2), 1.0))));
  const auto r = additive_identities(w, 0.5);
  CHECK(r.via_phi == Approx(1.16619).epsilon(1e-5));
  CHECK(r.via_psi == Approx(1.16619).epsilon(1e-5));
  CHECK(r.closed == Approx(1.16619).epsilon(1e-5));
  CHECK(r.discrepancy <= 1e-10);

  const Channel clean =
      Channel::additive(AdditiveGroup::cyclic(3), SubDist({1.0, 0.0, 0.0}));
  for (double t : {0.1, 0.3, 0.5}) {
    const auto c = additive_identities(clean, t);
    CHECK(c.via_phi == Approx(std::pow(3.0, t)));
    CHECK(c.discrepancy <= 1e-10);
  }

  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const AdditiveGroup g({2, 3});
    const Channel a = Channel::additive(g, testing::random_dist(rng, 6));
    for (double t : linspace(0.0, 0.5, 6)) CHECK(additive_identities(a, t).discrepancy <= 1e-10);
    const SubDist u = SubDist::uniform(6);
    for (double R : {0.5, 1.0, 1.7})
      CHECK(e_phi(R, a, u).value == Approx(e_psi(R, a, u).value).epsilon(1e-9));
  }
  CHECK_THROWS(additive_identities(example_channel(0.05), 0.3));
}

TEST_CASE("general additive channels follow the gallager form") {
  // W_x(z, z') = P(z - x, z').
  const JointDist pxz(2, 2, {0.5, 0.1, 0.15, 0.25});
  const Channel w = Channel::general_additive(AdditiveGroup::cyclic(2), pxz);
  CHECK(w(1, 0 * 2 + 1) == Approx(pxz(1, 1)));
  CHECK(w(1, 1 * 2 + 0) == Approx(pxz(0, 0)));
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const JointDist j = testing::random_joint(rng, 3, 2);
    const Channel g = Channel::general_additive(AdditiveGroup::cyclic(3), j);
    for (double t : linspace(0.05, 0.5, 5)) {
      const auto r = additive_identities(g, t);
      CHECK(r.gallager_discrepancy <= 1e-10);
      CHECK(r.via_psi >= r.via_phi - 1e-12);
    }
  }
  // The ordinary conditional form is a different quantity: a side variable
  // correlated with the noise separates the three values.
  const JointDist skew(2, 2, {0.6, 0.0, 0.1, 0.3});
  const auto r = additive_identities(
      Channel::general_additive(AdditiveGroup::cyclic(2), skew), 0.5);
  CHECK(r.via_psi == Approx(1.2873006087).epsilon(1e-9));
  CHECK(r.via_phi == Approx(1.2844965954).epsilon(1e-9));
  CHECK(r.discrepancy > 1e-3);
  CHECK(r.gallager_discrepancy <= 1e-10);
  // Independent side information collapses all forms together.
  const JointDist ind = JointDist::independent(SubDist({0.7, 0.3}), SubDist({0.4, 0.6}));
  const auto q = additive_identities(Channel::general_additive(AdditiveGroup::cyclic(2), ind), 0.4);
  CHECK(q.discrepancy <= 1e-10);
}

TEST_CASE("exponent ordering on the example channel") {
  const Channel w = example_channel(0.05);
  const double I = mutual_information(kUniform2, w);
  CHECK(e_phi(I, w, kUniform2).value == Approx(0.0).epsilon(1e-9));
  CHECK(e_psi(I, w, kUniform2).value == Approx(0.0).epsilon(1e-9));
  for (double R : linspace(I, std::log(2.0), 30)) {
    const double a = e_phi(R, w, kUniform2).value;
    const double b = e_psi(R, w, kUniform2).value;
    const double c = e_psi_pinsker(R, w, kUniform2).value;
    CHECK(a >= b - 1e-12);
    CHECK(b >= c - 1e-12);
  }
  CHECK(e_phi(0.5, w, kUniform2).value > 0.0);
  const auto ts = linspace(0.0, 0.5, 21);
  const auto hold = holder_ordering(w, kUniform2, ts);
  CHECK(hold.holds);
  CHECK(std::exp(0.5 * psi_channel(w, kUniform2, 1.0)) >
        std::exp(phi_channel(w, kUniform2, 0.5)) + 1e-4);
  const auto eq = holder_ordering(
      Channel::additive(AdditiveGroup::cyclic(2), SubDist::bernoulli(0.2)), kUniform2, ts);
  CHECK(eq.holds);
  CHECK(std::fabs(eq.min_gap) <= 1e-12);
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Channel r = testing::random_channel(rng, 3, 3);
    CHECK(holder_ordering(r, testing::random_dist(rng, 3), ts).holds);
  }
}

TEST_CASE("phi is concave in the input distribution") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Channel w = testing::random_channel(rng, 3, 3);
    const SubDist p1 = testing::random_dist(rng, 3), p2 = testing::random_dist(rng, 3);
    const double lam = rng.uniform01();
    std::vector<double> mix(3);
    for (int i = 0; i < 3; ++i) mix[i] = lam * p1[i] + (1 - lam) * p2[i];
    for (double t : {0.2, 0.5, 0.9}) {
      const double l = std::exp(phi_channel(w, SubDist(mix), t));
      const double r = lam * std::exp(phi_channel(w, p1, t)) +
                       (1 - lam) * std::exp(phi_channel(w, p2, t));
      CHECK(l >= r - 1e-12);
    }
  }
}

TEST_CASE("codeword joint bookkeeping") {
  // phi of the uniform-codeword joint equals phi(t|W^E,p) / (ML)^t.
  Rng rng(17);
  const Channel we = testing::random_channel(rng, 3, 4);
  const std::vector<std::size_t> book = {0, 2, 2, 1};
  std::vector<double> joint;
  std::vector<double> rows;
  for (std::size_t c : book)
    for (std::size_t e = 0; e < 4; ++e) {
      joint.push_back(we(c, e) / 4.0);
      rows.push_back(we(c, e));
    }
  const JointDist pce(4, 4, joint);
  const Channel wc(4, 4, rows);
  for (double t : {0.1, 0.3, 0.5})
    CHECK(std::exp(phi_cond(pce, t)) ==
          Approx(std::exp(phi_channel(wc, SubDist::uniform(4), t)) / std::pow(4.0, t)));
}

TEST_CASE("code evaluation") {
  const Channel id(2, 2, {1, 0, 0, 1});
  WiretapCode c;
  c.M = 2;
  c.encoders = {{1, 0}, {0, 1}};
  c.decoder = {0, 1};
  CHECK(error_prob(c, id) == 0.0);
  CHECK(eve_distinguishability(c, id) == Approx(1.0));
  WiretapCode same = c;
  same.encoders = {{0.5, 0.5}, {0.5, 0.5}};
  CHECK(eve_distinguishability(same, bsc(0.3)) == Approx(0.0));
  WiretapCode one;
  one.M = 1;
  one.encoders = {{0.3, 0.7}};
  one.decoder = {0, 0};
  CHECK(error_prob(one, bsc(0.3)) == 0.0);
  CHECK(eve_distinguishability(one, bsc(0.3)) == 0.0);
  WiretapCode bad = c;
  bad.decoder = {0, 2};
  CHECK_THROWS(error_prob(bad, id));
}

TEST_CASE("ml decoding error against full enumeration") {
  const Channel w = bsc_power(0.1, 3);
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> book(2 + rng.below(3));
    for (auto& x : book) x = rng.below(8);
    // Oracle: for each message and output, success iff the message index is
    // the first argmax of the likelihood.
    double err = 0.0;
    for (std::size_t i = 0; i < book.size(); ++i)
      for (std::size_t y = 0; y < 8; ++y) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < book.size(); ++j)
          if (w(book[j], y) > w(book[best], y)) best = j;
        if (best != i) err += w(book[i], y);
      }
    err /= static_cast<double>(book.size());
    HashTable id(book.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    const WiretapCode code = hashed_code(book, id, book.size(), w);
    CHECK(error_prob(code, w) == Approx(err).epsilon(1e-12));
  }
  // Outputs no codeword reaches are rejected.
  const Channel erase(2, 3, {0.5, 0.5, 0.0, 0.0, 0.5, 0.5});
  const auto dec = ml_decoder({0, 0}, erase);
  CHECK(dec[0] == 0);
  CHECK(dec[2] == WiretapCode::kReject);
}

TEST_CASE("random coding ensemble obeys both displays") {
  struct Case {
    Channel wb, we;
    SubDist p;
    std::size_t M, L;
  };
  Rng rng(31);
  std::vector<Case> cases = {
      {bsc(0.1), bsc(0.3), kUniform2, 2, 2},
      {bsc(0.05), bsc(0.4), SubDist({0.6, 0.4}), 2, 2},
      {example_channel(0.05), bsc(0.2), kUniform2, 2, 2},
      {bsc(0.1), bsc(0.25), kUniform2, 4, 2},
      {bsc(0.1), bsc(0.25), kUniform2, 2, 4},
  };
  for (int k = 0; k < 4; ++k) {
    const Channel b = testing::random_channel(rng, 2 + (k % 2), 3);
    const Channel e = testing::random_channel(rng, 2 + (k % 2), 2);
    cases.push_back({b, e, testing::random_dist(rng, b.inputs()), 2, 2});
  }
  for (const auto& c : cases) {
    const auto fam = default_code_family(c.M, c.L);
    const auto r = random_code_ensemble(c.wb, c.we, c.p, c.M, c.L, *fam,
                                        EnsembleMode::exact());
    CHECK(r.conditions_checked);
    CHECK(r.eps_b.exact);
    CHECK(r.eps_b.mean <= r.bound_eps + 1e-12);
    CHECK(r.d1.mean <= r.bound_d1 + 1e-12);
    REQUIRE(r.selected.found);
    CHECK(r.selected.eps_b <= 2 * r.bound_eps + 1e-12);
    CHECK(r.selected.d1 <= 2 * r.bound_d1 + 1e-12);
    // Re-evaluating the selected member reproduces its figures.
    const WiretapCode code = hashed_code(r.selected.codebook, r.selected.table, c.M, c.wb);
    CHECK(error_prob(code, c.wb) == Approx(r.selected.eps_b));
    CHECK(eve_distinguishability(code, c.we) == Approx(r.selected.d1));
  }
}

TEST_CASE("ensemble average oracle") {
  // Weighted average over every codebook and seed, computed here.
  const Channel wb = bsc(0.1), we = bsc(0.3);
  const SubDist p({0.7, 0.3});
  const auto fam = default_code_family(2, 2);
  double eps = 0.0, d1 = 0.0, wsum = 0.0;
  const auto seeds = *fam->seed_count();
  for (std::size_t b = 0; b < 16; ++b) {
    std::vector<std::size_t> book(4);
    double w = 1.0;
    for (int k = 0; k < 4; ++k) {
      book[k] = (b >> (3 - k)) & 1;
      w *= p[book[k]];
    }
    for (std::uint64_t s = 0; s < seeds; ++s) {
      const WiretapCode code = hashed_code(book, fam->table(s), 2, wb);
      eps += w * error_prob(code, wb) / seeds;
      d1 += w * eve_distinguishability(code, we) / seeds;
      wsum += w / seeds;
    }
  }
  CHECK(wsum == Approx(1.0));
  const auto r = random_code_ensemble(wb, we, p, 2, 2, *fam, EnsembleMode::exact());
  CHECK(r.eps_b.mean == Approx(eps).epsilon(1e-12));
  CHECK(r.d1.mean == Approx(d1).epsilon(1e-12));
  const auto mc = random_code_ensemble(wb, we, p, 2, 2, *fam, EnsembleMode::monte_carlo(5, 4000));
  CHECK(std::fabs(mc.eps_b.mean - eps) <= 4 * mc.eps_b.stderr_ + 1e-12);
  CHECK(std::fabs(mc.d1.mean - d1) <= 4 * mc.d1.stderr_ + 1e-12);
}

TEST_CASE("degenerate message and sacrifice counts") {
  const Channel wb = bsc(0.1), we = bsc(0.3);
  const auto one = random_code_ensemble(wb, we, kUniform2, 1, 4, *default_code_family(1, 4),
                                        EnsembleMode::exact());
  CHECK(one.d1.mean == 0.0);
  CHECK(one.eps_b.mean == 0.0);
  const auto nol = random_code_ensemble(wb, we, kUniform2, 4, 1, *default_code_family(4, 1),
                                        EnsembleMode::exact());
  CHECK(nol.bound_d1 == Approx(3.0).epsilon(1e-9));
  CHECK(nol.d1.mean <= nol.bound_d1);
}

TEST_CASE("coset codes") {
  const LinearCode c1 = LinearCode::full(2, 2);
  CHECK(c1.size() == 4);
  const AdditiveGroup g({2, 2});
  const Channel we = Channel::additive(g, iid_extend(SubDist::bernoulli(0.2), 2));
  const Channel wb = Channel::additive(g, iid_extend(SubDist::bernoulli(0.05), 2));
  const auto r = coset_ensemble(c1, 1, wb, we, EnsembleMode::exact());
  CHECK(r.M == 2);
  CHECK(r.L == 2);
  CHECK(r.condition4.pass);
  CHECK(r.condition4.threshold == Approx(0.5));
  CHECK(r.d1.mean <= r.bound_d1 + 1e-12);
  REQUIRE(r.bound_structured.has_value());
  CHECK(r.d1.mean <= *r.bound_structured + 1e-12);
  // Every t on a grid, not only the optimum.
  const SubDist u = SubDist::uniform(4);
  for (double t : linspace(0.0, 0.5, 11))
    CHECK(r.d1.mean <= 3 * std::exp(phi_channel(we, u, t)) / std::pow(2.0, t) + 1e-12);

  const ToeplitzFamily fam(2, 2, 1);
  for (std::uint64_t s = 0; s < 2; ++s) {
    const auto c2 = sample_subcode(c1, fam, s);
    CHECK(c2.size() == 2);
    CHECK(c2.front() == 0);
  }
  // Point-mass encoders when every codeword is its own coset.
  HashTable id = {0, 1, 2, 3};
  const WiretapCode pts = hashed_code(c1.codewords(), id, 4, wb);
  for (const auto& q : pts.encoders) {
    int support = 0;
    for (double v : q) support += v > 0;
    CHECK(support == 1);
  }
  // One coset: M = 1 and nothing leaks.
  const WiretapCode all = hashed_code(c1.codewords(), HashTable(4, 0), 1, wb);
  CHECK(eve_distinguishability(all, we) == 0.0);
}

TEST_CASE("linear code checks") {
  const LinearCode c(3, 3, {{1, 0, 2}, {0, 1, 1}});
  CHECK(c.size() == 9);
  CHECK(c.dimension() == 2);
  CHECK(c.codeword(0) == 0);
  CHECK_THROWS(LinearCode(2, 2, {{1, 1}, {1, 1}}));
  CHECK_THROWS(LinearCode(2, 2, {{1, 2}}));
  const ToeplitzFamily f(3, 2, 1);
  const auto r = check_condition4(c, f);
  CHECK(r.pass);
  const auto ens = coset_ensemble(c, 1, Channel::additive(AdditiveGroup({3, 3, 3}),
                                                            iid_extend(SubDist({0.8, 0.1, 0.1}), 3)),
                                  Channel::additive(AdditiveGroup({3, 3, 3}),
                                                    iid_extend(SubDist({0.5, 0.3, 0.2}), 3)),
                                  EnsembleMode::exact());
  CHECK(ens.d1.mean <= ens.bound_d1 + 1e-12);
}
