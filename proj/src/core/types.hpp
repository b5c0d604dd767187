// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/distribution.hpp"

namespace secamp {

using BigInt = boost::multiprecision::cpp_int;

// A type class T(Q): all length-n strings whose symbol counts equal `counts`.
class TypeClass {
 public:
  explicit TypeClass(std::vector<std::uint32_t> counts);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  std::size_t alphabet_size() const noexcept { return counts_.size(); }

  // Empirical distribution Q = counts / n.
  SubDist empirical() const;
  // |T(Q)|, the multinomial coefficient.
  BigInt class_size() const;
  double log_class_size() const;
  // log P^n(x) for any x in T(Q), i.e. -n (D(Q||P) + H(Q)).
  double log_string_probability(const SubDist& p) const;
  // P^n(T(Q)) = |T(Q)| exp(-n (D(Q||P) + H(Q))).
  double class_probability(const SubDist& p) const;

  bool operator==(const TypeClass&) const = default;

 private:
  std::vector<std::uint32_t> counts_;
  std::uint32_t n_ = 0;
};

// All compositions of n into `alphabet_size` parts, in ascending
// lexicographic order of the count vectors.
std::vector<TypeClass> enumerate_types(std::size_t alphabet_size,
                                       std::uint32_t n);

// |T_n| = C(n + k - 1, k - 1).
BigInt type_count(std::size_t alphabet_size, std::uint32_t n);

// Counts of the string with big-endian index `index` over an alphabet of
// size k.
std::vector<std::uint32_t> string_counts(std::size_t index,
                                         std::size_t alphabet_size,
                                         std::uint32_t n);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace secamp
