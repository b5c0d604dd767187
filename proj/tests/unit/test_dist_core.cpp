// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/distribution.hpp"
#include "core/error.hpp"
#include "core/types.hpp"
#include "support/generators.hpp"

using namespace secamp;
using doctest::Approx;

namespace {

const SubDist kHalfQuarter({0.5, 0.25, 0.25});

}  // namespace

TEST_CASE("l1 and l2 distances") {
  CHECK(l1_distance(kHalfQuarter, kHalfQuarter) == 0.0);
  CHECK(l1_distance(SubDist({1, 0}), SubDist({0, 1})) == Approx(2.0));
  CHECK(l1_distance(kHalfQuarter, SubDist::uniform(3)) == Approx(1.0 / 3));
  CHECK(l2_distance(SubDist({1, 0}), SubDist({0, 1})) == Approx(std::sqrt(2.0)));
  const double d = l2_distance(kHalfQuarter, SubDist::uniform(3));
  CHECK(d * d == Approx(0.0416667).epsilon(1e-6));
  CHECK_THROWS_AS(l1_distance(kHalfQuarter, SubDist::uniform(2)), Error);
}

TEST_CASE("d1 uniformity") {
  CHECK(d1_uniformity(SubDist::uniform(4)) == Approx(0.0));
  CHECK(d1_uniformity(SubDist({1, 0})) == Approx(1.0));
  CHECK(d1_uniformity(kHalfQuarter) == Approx(1.0 / 3));
}

TEST_CASE("renyi entropies") {
  const SubDist b = SubDist::bernoulli(0.2);
  CHECK(renyi_tilde(SubDist::uniform(5), 0.7) == Approx(0.7 * std::log(5.0)));
  CHECK(renyi_tilde(b, 1.0) == Approx(-std::log(0.68)));
  CHECK(renyi_tilde(b, 1.0) == Approx(0.385662).epsilon(1e-6));
  CHECK(shannon_entropy(b) == Approx(0.500402).epsilon(1e-6));
  CHECK(renyi(b, 1e-7) == Approx(0.500402).epsilon(1e-5));
  CHECK(renyi_tilde_derivative(b, 1.0) == Approx(0.30469).epsilon(1e-5));
  CHECK(renyi_tilde_derivative(SubDist::bernoulli(0.5), 0.37) ==
        Approx(std::log(2.0)));
  CHECK(renyi_tilde_derivative(SubDist::uniform(7), 2.0) == Approx(std::log(7.0)));
  CHECK_THROWS(renyi_tilde(b, -1.0));
  CHECK_THROWS(renyi_tilde(SubDist({0.0, 0.0}), 0.5));
  // Large orders stay finite.
  CHECK(renyi_tilde(b, 5000.0) == Approx(-5001.0 * std::log(0.8)));
}

TEST_CASE("derivative matches finite differences and concavity") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const SubDist p = testing::random_sparse_dist(rng, 2 + rng.below(5));
    for (double s : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      const double fd = central_difference(
          [&](double x) { return renyi_tilde(p, x); }, s);
      CHECK(renyi_tilde_derivative(p, s) == Approx(fd).epsilon(1e-6));
      const double h = 1e-2;
      const double c = renyi_tilde(p, s + h) + renyi_tilde(p, s + 3 * h) -
                       2 * renyi_tilde(p, s + 2 * h);
      CHECK(c <= 1e-9);
    }
  }
}

TEST_CASE("kl divergence") {
  const SubDist b2 = SubDist::bernoulli(0.2);
  CHECK(kl_divergence(b2, b2) == Approx(0.0));
  CHECK(kl_divergence(SubDist::bernoulli(0.5), b2) == Approx(0.223144).epsilon(1e-6));
  CHECK(kl_divergence(SubDist({0, 0, 1}), SubDist::uniform(3)) ==
        Approx(std::log(3.0)));
  CHECK(std::isinf(kl_divergence(SubDist({0.5, 0.5}), SubDist({1.0, 0.0}))));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 2 + rng.below(5);
    const SubDist q = testing::random_dist(rng, k), p = testing::random_dist(rng, k);
    const double l1 = l1_distance(q, p);
    CHECK(kl_divergence(q, p) >= 0.5 * l1 * l1 - 1e-12);
  }
}

TEST_CASE("tilt") {
  const SubDist t = tilt(SubDist::bernoulli(0.2), 1.0);
  CHECK(t[0] == Approx(0.04 / 0.68));
  CHECK(t[1] == Approx(0.64 / 0.68));
  CHECK(tilt(kHalfQuarter, 0.0)[0] == 0.5);
  const SubDist u = tilt(SubDist::uniform(3), 3.0);
  CHECK(u[2] == Approx(1.0 / 3));
}

TEST_CASE("smooth truncation") {
  // Threshold e^{-R'}: a very negative R' removes nothing, a very large one
  // removes the whole support.
  const auto none = smooth_truncate(kHalfQuarter, -100.0);
  CHECK(none.tail == 0.0);
  CHECK(none.kept.total() == Approx(1.0));
  const auto all = smooth_truncate(kHalfQuarter, 100.0);
  CHECK(all.tail == Approx(1.0));
  CHECK(all.kept.total() == 0.0);
  const auto zero = smooth_truncate(kHalfQuarter, 0.0);
  CHECK(zero.tail == 0.0);
  const auto t = smooth_truncate(kHalfQuarter, std::log(3.0));
  CHECK(t.tail == Approx(0.5));
  CHECK(t.kept.total() == Approx(0.5));
  CHECK(l1_distance(kHalfQuarter, t.kept) == Approx(t.tail));
}

TEST_CASE("collision identity for the l2 distance") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const SubDist p = testing::random_subdist(rng, 1 + rng.below(8));
    const double d = l2_distance(p, SubDist::uniform(p.size(), p.total()));
    const double rhs = std::exp(-renyi_tilde(p, 1.0)) -
                       p.total() * p.total() / static_cast<double>(p.size());
    CHECK(std::fabs(d * d - rhs) <= 1e-12);
  }
}

TEST_CASE("iid extension") {
  const SubDist e = iid_extend(SubDist::bernoulli(0.2), 2);
  REQUIRE(e.size() == 4);
  CHECK(e[0] == Approx(0.04));
  CHECK(e[1] == Approx(0.16));
  CHECK(e[2] == Approx(0.16));
  CHECK(e[3] == Approx(0.64));
  CHECK(iid_extend(SubDist::uniform(2), 3)[5] == Approx(0.125));
  CHECK(iid_extend(kHalfQuarter, 1)[0] == 0.5);
  try {
    iid_extend(SubDist::uniform(2), 40);
    FAIL("expected a size limit error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit);
  }
}

TEST_CASE("type classes") {
  const auto t = enumerate_types(2, 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0].counts() == std::vector<std::uint32_t>{0, 2});
  CHECK(t[1].counts() == std::vector<std::uint32_t>{1, 1});
  CHECK(t[2].counts() == std::vector<std::uint32_t>{2, 0});
  CHECK(TypeClass({1, 3}).class_size() == 4);
  CHECK(TypeClass({1, 1}).class_probability(SubDist::bernoulli(0.2)) ==
        Approx(0.32));
  CHECK(enumerate_types(4, 5).size() == 56);
  CHECK(type_count(4, 5) == 56);
}

TEST_CASE("type masses sum to one exactly") {
  using boost::multiprecision::cpp_rational;
  // P = (1/5, 3/10, 1/2) as exact rationals.
  const std::vector<cpp_rational> p = {cpp_rational(1, 5), cpp_rational(3, 10),
                                       cpp_rational(1, 2)};
  for (std::uint32_t n = 1; n <= 7; ++n) {
    cpp_rational total = 0;
    for (const auto& tc : enumerate_types(3, n)) {
      cpp_rational term = cpp_rational(tc.class_size());
      for (std::size_t i = 0; i < 3; ++i)
        for (std::uint32_t c = 0; c < tc.counts()[i]; ++c) term *= p[i];
      total += term;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("joint distributions") {
  const JointDist j(2, 2, {0.4, 0.1, 0.2, 0.3});
  CHECK(j.marginal_a()[0] == Approx(0.5));
  CHECK(j.marginal_e()[1] == Approx(0.4));
  CHECK(conditional_entropy(j) ==
        Approx(joint_entropy(j) - shannon_entropy(j.marginal_e())));
  const JointDist j2 = j.iid_extend(2);
  CHECK(j2(1 * 2 + 0, 0 * 2 + 1) == Approx(0.2 * 0.1));
  CHECK_THROWS(JointDist(2, 2, {0.4, 0.1, 0.2, 0.2}));
}
