// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "core/distill.hpp"
#include "support/generators.hpp"

using namespace secamp;
using doctest::Approx;

namespace {

// Noisy copy of a uniform bit: P(a, b) = (1 - e)/2 on the diagonal.
JointDist noisy_copy(double e) {
  return JointDist(2, 2, {(1 - e) / 2, e / 2, e / 2, (1 - e) / 2});
}

// Eve learns a through an erasure: outputs {0, 1, ?}.
JointDist erased(double r) {
  return JointDist(2, 3, {(1 - r) / 2, 0.0, r / 2, 0.0, (1 - r) / 2, r / 2});
}

// 2 min_s of the eps display, on a grid.
double eps_display_grid(const JointDist& pab, std::size_t M, std::size_t L,
                        std::size_t n, double s) {
  const double A = static_cast<double>(pab.size_a());
  const double nd = static_cast<double>(n);
  return 2 * std::pow(static_cast<double>(M * L), s) * std::pow(A, -nd * s) *
         std::exp(-nd * (1 + s) * cond_renyi_tilde_gallager(pab, 1 / (1 + s)));
}

double d1_display_grid(const JointDist& pae, std::size_t L, std::size_t n,
                       double t) {
  const double A = static_cast<double>(pae.size_a());
  const double nd = static_cast<double>(n);
  return 6 * std::pow(A, nd * t) *
         std::exp(-nd * (1 - t) * cond_renyi_tilde_gallager(pae, 1 / (1 - t))) /
         std::pow(static_cast<double>(L), t);
}

}  // namespace

TEST_CASE("channels from a two-symbol joint") {
  const JointDist pab(2, 2, {0.4, 0.1, 0.2, 0.3});
  const JointDist pae(2, 2, {0.25, 0.25, 0.1, 0.4});
  const auto [wb, we] = channels_from_joint(CorrelationTriple(pab, pae));
  REQUIRE(wb.inputs() == 2);
  REQUIRE(wb.outputs() == 4);
  // Rows written out by hand; columns (x', b) = 00, 01, 10, 11.
  const std::vector<double> b0 = {0.4, 0.1, 0.2, 0.3};
  const std::vector<double> b1 = {0.2, 0.3, 0.4, 0.1};
  for (std::size_t y = 0; y < 4; ++y) {
    CHECK(wb(0, y) == Approx(b0[y]));
    CHECK(wb(1, y) == Approx(b1[y]));
  }
  CHECK(we(1, 0) == Approx(0.1));
  CHECK(we(1, 3) == Approx(0.25));
  CHECK(wb.kind() == Channel::Kind::general_additive);
  CHECK(we.kind() == Channel::Kind::general_additive);

  // On Z_3 the difference is no longer symmetric.
  Rng rng(4);
  const JointDist j3 = testing::random_joint(rng, 3, 2);
  const auto [w3, unused] = channels_from_joint(CorrelationTriple(j3, j3));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t xp = 0; xp < 3; ++xp)
      for (std::size_t b = 0; b < 2; ++b)
        CHECK(w3(x, xp * 2 + b) == Approx(j3((x + 3 - xp) % 3, b)));
}

TEST_CASE("triple validation") {
  const JointDist pab(2, 2, {0.4, 0.1, 0.2, 0.3});
  const JointDist other(2, 2, {0.3, 0.3, 0.2, 0.2});
  CHECK_THROWS(CorrelationTriple(pab, other));
  CHECK_THROWS(CorrelationTriple(pab, pab, AdditiveGroup::cyclic(3)));
  const JointDist four(4, 1, {0.25, 0.25, 0.25, 0.25});
  CHECK_NOTHROW(CorrelationTriple(four, four, AdditiveGroup({2, 2})));
}

TEST_CASE("perfect correlation with an independent eavesdropper") {
  const JointDist same(2, 2, {0.5, 0.0, 0.0, 0.5});
  const JointDist ind = JointDist::independent(SubDist::uniform(2), SubDist({0.3, 0.7}));
  const CorrelationTriple tri(same, ind);
  const auto [wb, we] = channels_from_joint(tri);
  // Bob sees x' and b = x - x'.
  for (std::size_t x = 0; x < 2; ++x) {
    int support = 0;
    for (std::size_t y = 0; y < 4; ++y) support += wb(x, y) > 0;
    CHECK(support == 2);
  }
  for (double s : {0.1, 0.5, 1.0})
    CHECK(cond_renyi_tilde(ind, s) == Approx(renyi_tilde(SubDist::uniform(2), s)));
  const auto r = run_distillation(tri, 2, 1, 1, EnsembleMode::exact());
  CHECK(r.rate_entropies == Approx(std::log(2.0)));
  CHECK(r.rate_channels == Approx(std::log(2.0)));
  CHECK(r.ensemble.d1.mean == Approx(0.0).epsilon(1e-12));
  // The injective code built on distinct codewords is error free.
  const WiretapCode code = hashed_code({0, 1}, HashTable{0, 1}, 2, wb);
  CHECK(error_prob(code, wb) == 0.0);
  CHECK(eve_distinguishability(code, we) == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("single letter distillation stays within the displays") {
  for (double e : {0.05, 0.1, 0.2})
    for (double rr : {0.3, 0.6, 0.9}) {
      const CorrelationTriple tri(noisy_copy(e), erased(rr));
      for (auto [M, L] : {std::pair<std::size_t, std::size_t>{2, 2}, {1, 4}, {4, 1}}) {
        const auto r = run_distillation(tri, M, L, 1, EnsembleMode::exact());
        CHECK(r.rate_channels == Approx(r.rate_entropies).epsilon(1e-12));
        CHECK(r.bob_identity_gap <= 1e-12);
        CHECK(r.ensemble_within);
        CHECK(r.selected_within);
        for (double s : linspace(0.0, 1.0, 11))
          CHECK(r.ensemble.eps_b.mean <= eps_display_grid(tri.pab, M, L, 1, s) / 2 + 1e-12);
        for (double t : linspace(0.0, 0.5, 11))
          CHECK(r.ensemble.d1.mean <= d1_display_grid(tri.pae, L, 1, t) / 2 + 1e-12);
        CHECK(r.eps_display <= eps_display_grid(tri.pab, M, L, 1, 0.3) + 1e-12);
        CHECK(r.d1_display <= d1_display_grid(tri.pae, L, 1, 0.2) + 1e-12);
      }
    }
}

TEST_CASE("two letter distillation") {
  const CorrelationTriple tri(noisy_copy(0.1), erased(0.5));
  const auto r = run_distillation(tri, 2, 2, 2, EnsembleMode::exact());
  CHECK(r.n == 2);
  CHECK(r.additivity_gap <= 1e-12);
  CHECK(r.ensemble_within);
  CHECK(r.selected_within);
  for (double s : linspace(0.0, 1.0, 11))
    CHECK(r.ensemble.eps_b.mean <= eps_display_grid(tri.pab, 2, 2, 2, s) / 2 + 1e-12);
  for (double t : linspace(0.0, 0.5, 11))
    CHECK(r.ensemble.d1.mean <= d1_display_grid(tri.pae, 2, 2, t) / 2 + 1e-12);
  const auto big = tri.power(2);
  CHECK(big.group.size() == 4);
  for (double s : {0.2, 0.7})
    CHECK(cond_renyi_tilde(big.pae, s) == Approx(2 * cond_renyi_tilde(tri.pae, s)));
}

TEST_CASE("reduced eavesdropper channel satisfies the gallager identity") {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const JointDist pab = testing::random_joint(rng, 3, 2);
    const SubDist pa = pab.marginal_a();
    // Eve's joint with the same A-marginal.
    std::vector<double> m;
    for (std::size_t a = 0; a < 3; ++a) {
      const auto w = testing::random_simplex(rng, 3, pa[a]);
      m.insert(m.end(), w.begin(), w.end());
    }
    double s = 0.0;
    for (double v : m) s += v;
    for (double& v : m) v /= s;
    const CorrelationTriple tri(pab, JointDist(3, 3, m));
    const auto [wb, we] = channels_from_joint(tri);
    for (double t : {0.1, 0.3, 0.5}) {
      const double lhs = std::exp(phi_channel(we, SubDist::uniform(3), t));
      const double rhs = std::pow(3.0, t) *
                         std::exp(-(1 - t) * cond_renyi_tilde_gallager(tri.pae, 1 / (1 - t)));
      CHECK(lhs == Approx(rhs).epsilon(1e-12));
      CHECK(additive_identities(we, t).gallager_discrepancy <= 1e-10);
    }
    const auto r = run_distillation(tri, 1, 3, 1, EnsembleMode::exact());
    CHECK(r.bob_identity_gap <= 1e-12);
    CHECK(r.rate_channels == Approx(r.rate_entropies).epsilon(1e-12));
  }
}
