// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/bounds.hpp"
#include "core/distribution.hpp"
#include "core/hash_family.hpp"

namespace secamp {

// P{a : P(a) >= 2/M}; no function into M cells does better in d1.
double lemdi_lower_bound(const SubDist& p, std::size_t M);

// min over every function A -> {0..M-1} of d1(P^{f(A)}), by brute force.
struct ExhaustiveMinimum {
  double min_d1 = 0.0;
  HashTable argmin;
  std::uint64_t functions = 0;
};
ExhaustiveMinimum exhaustive_min_d1(const SubDist& p, std::size_t M);

enum class TypePart { injective = 1, spread = 2, leftover = 3 };

struct TypeAssignment {
  std::vector<std::uint32_t> counts;
  TypePart part = TypePart::leftover;
  double class_size = 0.0;
  double probability = 0.0;           // P^n(T(Q))
  double log_string_probability = 0.0;
  std::uint64_t cells = 0;            // |T(Q)| for part 1, n_Q for part 2
  std::size_t first_cell = 0;
};

// The type-class map f_n : A^n -> {0..M-1}.
struct SpecializedMap {
  std::uint32_t n = 0;
  std::size_t M = 0;
  HashTable table;                    // indexed by big-endian string index
  std::vector<TypeAssignment> types;  // lexicographic type order
  std::uint64_t cells_used = 0;       // sum |T^1| + sum n_Q
  double d1 = 0.0;
};
SpecializedMap build_specialized(const SubDist& p, std::uint32_t n,
                                 std::size_t M);

struct SpecializedBound {
  double heavy_mass = 0.0;   // P^n{P^n(a) >= 1/M}
  double type_sum = 0.0;     // sum_Q M P^n(T(Q)) exp(-n(D+H))
  double type_count_term = 0.0;  // |T_n|/M
  double total = 0.0;        // 2 (heavy_mass + type_sum + type_count_term)
};
SpecializedBound bound_specialized(const SubDist& p, std::uint32_t n, std::size_t M);

// max_{0<=s<=1} H~_{1+s} - sR; hypothesis_met iff H~'_2 <= R.
ExponentResult exponent_specialized(const SubDist& p, double R);

struct ConstrainedMinReport {
  double R = 0.0;
  bool branch_high = false;    // H~'_2 <= R
  bool identity_range = false; // R <= H(A), where the first branch is claimed
  double lhs = 0.0;            // min over Q of H(Q) + 2D(Q||P) - R
  double rhs_unrestricted = 0.0;  // max_{s>=0} H~_{1+s} - sR
  double rhs_restricted = 0.0;    // max_{0<=s<=1}
  double rhs_collision = 0.0;     // H~_2 - R
  double discrepancy = 0.0;       // max deviation among the forms claimed
};
// Binary or ternary P only.
ConstrainedMinReport lemma_l991_check(const SubDist& p, double R);

}  // namespace secamp
