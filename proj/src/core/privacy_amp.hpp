// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "core/distribution.hpp"
#include "core/hash_family.hpp"

namespace secamp {

// Ensemble averages are exact (every seed, equally weighted) or Monte Carlo.
struct EnsembleMode {
  enum class Kind { exact, monte_carlo };
  Kind kind = Kind::exact;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;

  static EnsembleMode exact() { return {}; }
  static EnsembleMode monte_carlo(std::uint64_t seed, std::uint64_t samples) {
    return {Kind::monte_carlo, seed, samples};
  }
};

struct EnsembleEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // zero in exact mode
  std::uint64_t members = 0;
  bool exact = true;
};

// Exact mode is refused beyond this many (seed, symbol) evaluations.
inline constexpr double kExactEvaluationLimit = 1e7;

// Average of value(table) over the family. Monte Carlo draws are made
// sequentially from one stream so results depend only on (seed, samples).
EnsembleEstimate ensemble_average(
    const HashFamily& family, const EnsembleMode& mode,
    const std::function<double(const HashTable&)>& value,
    double per_member_cost = 1.0);

// P^{f(A)} on {0..M-1}.
SubDist pushforward(const SubDist& p, std::span<const std::size_t> f,
                    std::size_t M);

double d1_hashed(const SubDist& p, std::span<const std::size_t> f,
                 std::size_t M);

EnsembleEstimate expected_d1(const SubDist& p, const HashFamily& family,
                             const EnsembleMode& mode = EnsembleMode::exact());

// Average collision mass E exp(-H_2(f(A))), the left side of the leftover
// hash inequality.
EnsembleEstimate expected_collision_mass(
    const SubDist& p, const HashFamily& family,
    const EnsembleMode& mode = EnsembleMode::exact());

// d1(P^{f(A),E}, uniform_M x P^E).
double d1_conditional(const JointDist& j, std::span<const std::size_t> f,
                      std::size_t M);
// d1(P^{f(A),E}, P^{f(A)} x P^E).
double d1_prime_conditional(const JointDist& j, std::span<const std::size_t> f,
                            std::size_t M);

EnsembleEstimate expected_d1_conditional(
    const JointDist& j, const HashFamily& family,
    const EnsembleMode& mode = EnsembleMode::exact());

// (1 - |Omega|/M)^2 P(Omega); requires |Omega| < M.
double theorem2_lower_bound(const SubDist& p, std::size_t M,
                            std::span<const std::size_t> omega);

struct BestOmega {
  double value = 0.0;
  std::vector<std::size_t> omega;
};
// Maximizes the lower bound over Omega: for a fixed size the heaviest
// symbols are optimal, so only |Omega| = 0..M-1 are scanned.
BestOmega best_theorem2_lower_bound(const SubDist& p, std::size_t M);

}  // namespace secamp
