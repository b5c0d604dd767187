// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "core/bounds.hpp"
#include "core/error.hpp"
#include "core/privacy_amp.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace secamp;
using doctest::Approx;
using namespace secamp::testing;

namespace {

const SubDist kHalfQuarter({0.5, 0.25, 0.25});

}  // namespace

TEST_CASE("d1 of a fixed function") {
  const std::vector<std::size_t> f = {0, 0, 1};
  CHECK(d1_hashed(kHalfQuarter, f, 2) == Approx(0.5));
  CHECK(d1_hashed(kHalfQuarter, std::vector<std::size_t>{0, 0, 0}, 1) == 0.0);
  CHECK(d1_hashed(SubDist::uniform(3), std::vector<std::size_t>{2, 0, 1}, 3) ==
        Approx(0.0));
  CHECK(pushforward(kHalfQuarter, f, 2).total() == Approx(1.0));
  CHECK_THROWS(d1_hashed(kHalfQuarter, std::vector<std::size_t>{0, 0, 2}, 2));
  CHECK_THROWS(d1_hashed(kHalfQuarter, std::vector<std::size_t>{0, 0}, 2));
}

TEST_CASE("expected d1 hand oracle") {
  const auto e = expected_d1(kHalfQuarter, FullyRandomFamily(3, 2));
  CHECK(e.exact);
  CHECK(e.members == 8);
  CHECK(e.mean == Approx(0.5));
  CHECK(e.mean == Approx(oracle_fully_random({0.5, 0.25, 0.25}, 2)));
  // Uniform source through Toeplitz maps is exactly uniform.
  CHECK(expected_d1(SubDist::uniform(8), ToeplitzFamily(2, 3, 2)).mean ==
        Approx(0.0));
}

TEST_CASE("expected d1 matches the enumeration oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const std::size_t M = 1 + rng.below(3);
    const SubDist p = trial % 2 ? testing::random_subdist(rng, n)
                                : testing::random_dist(rng, n);
    std::vector<double> v(p.mass().begin(), p.mass().end());
    CHECK(expected_d1(p, FullyRandomFamily(n, M)).mean ==
          Approx(oracle_fully_random(v, M)).epsilon(1e-12));
  }
}

TEST_CASE("ensemble upper bounds and the leftover hash bound") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const bool toeplitz = trial % 3 == 0;
    std::unique_ptr<HashFamily> fam;
    if (toeplitz)
      fam = std::make_unique<ToeplitzFamily>(2, 3, 1 + rng.below(2));
    else
      fam = std::make_unique<FullyRandomFamily>(2 + rng.below(4), 2 + rng.below(2));
    const SubDist p = trial % 4 == 1 ? testing::random_subdist(rng, fam->input_size())
                                     : testing::random_dist(rng, fam->input_size());
    const std::size_t M = fam->output_size();
    const double e = expected_d1(p, *fam).mean;
    for (double s : linspace(0.0, 1.0, 11))
      CHECK(e <= bound_thm1_at(p, M, s) + 1e-12);
    CHECK(e <= bound_no_smoothing(p, M) + 1e-12);
    CHECK(expected_collision_mass(p, *fam).mean <= leftover_hash_rhs(p, M) + 1e-12);
  }
}

TEST_CASE("subset lower bound") {
  const std::vector<std::size_t> a = {0};
  CHECK(theorem2_lower_bound(kHalfQuarter, 2, a) == Approx(0.125));
  CHECK(theorem2_lower_bound(kHalfQuarter, 2, std::vector<std::size_t>{}) == 0.0);
  CHECK_THROWS(theorem2_lower_bound(kHalfQuarter, 2, std::vector<std::size_t>{0, 1}));
  const auto best = best_theorem2_lower_bound(kHalfQuarter, 2);
  CHECK(best.value == Approx(0.125));
  CHECK(best.omega == std::vector<std::size_t>{0});
  // The bound shrinks as |Omega| approaches M.
  const SubDist u = SubDist::uniform(10);
  const std::vector<std::size_t> nine = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(theorem2_lower_bound(u, 10, nine) == Approx(0.01 * 0.9));
}

TEST_CASE("subset lower bound holds for all subsets") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const std::size_t M = 1 + rng.below(3);
    const SubDist p = testing::random_dist(rng, n);
    const double e = expected_d1(p, FullyRandomFamily(n, M)).mean;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> omega;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) omega.push_back(i);
      if (omega.size() >= M) continue;
      CHECK(e >= theorem2_lower_bound(p, M, omega) - 1e-12);
    }
  }
}

TEST_CASE("monte carlo agrees with exact") {
  Rng rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const SubDist p = testing::random_dist(rng, 4);
    const FullyRandomFamily f(4, 2);
    const auto ex = expected_d1(p, f);
    const auto mc = expected_d1(p, f, EnsembleMode::monte_carlo(trial, 4000));
    CHECK_FALSE(mc.exact);
    CHECK(std::fabs(mc.mean - ex.mean) <= 3 * mc.stderr_ + 1e-12);
    const auto again = expected_d1(p, f, EnsembleMode::monte_carlo(trial, 4000));
    CHECK(again.mean == mc.mean);
  }
}

TEST_CASE("exact mode refuses huge ensembles") {
  const FullyRandomFamily f(30, 2);
  try {
    expected_d1(SubDist::uniform(30), f);
    FAIL("expected a size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit);
  }
  const auto mc = expected_d1(SubDist::uniform(30), f, EnsembleMode::monte_carlo(1, 100));
  CHECK(mc.mean >= 0.0);
}

TEST_CASE("conditional distinguishability") {
  // E = A, uniform on two symbols, identity hash.
  const JointDist same(2, 2, {0.5, 0.0, 0.0, 0.5});
  const std::vector<std::size_t> id = {0, 1};
  CHECK(d1_conditional(same, id, 2) == Approx(1.0));
  // Independent A and E with a uniform image.
  const JointDist indep = JointDist::independent(SubDist::uniform(2), SubDist({0.3, 0.7}));
  CHECK(d1_conditional(indep, id, 2) == Approx(0.0));
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const JointDist j = testing::random_joint(rng, 3, 2);
    std::vector<std::size_t> f(3);
    for (auto& v : f) v = rng.below(2);
    CHECK(d1_prime_conditional(j, f, 2) <= 2.0 * d1_conditional(j, f, 2) + 1e-12);
  }
}

TEST_CASE("conditional ensemble obeys the phi bound") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t na = 2 + rng.below(3);
    const JointDist j = testing::random_joint(rng, na, 2 + rng.below(2));
    const FullyRandomFamily f(na, 2);
    const double e = expected_d1_conditional(j, f).mean;
    for (double t : linspace(0.0, 0.5, 11))
      CHECK(e <= 3.0 * std::pow(2.0, t) * std::exp(phi_cond(j, t)) + 1e-12);
  }
  // Independent E reduces to the unconditional average.
  const SubDist pa({0.6, 0.3, 0.1});
  const JointDist indep = JointDist::independent(pa, SubDist({0.5, 0.5}));
  CHECK(expected_d1_conditional(indep, FullyRandomFamily(3, 2)).mean ==
        Approx(expected_d1(pa, FullyRandomFamily(3, 2)).mean));
}
