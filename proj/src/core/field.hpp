// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace secamp {

// Small finite field F_q: q prime (modular arithmetic) or q = 4 (tables over
// F_2[x]/(x^2 + x + 1), element b1*x + b0 stored as 2*b1 + b0).
class FiniteField {
 public:
  explicit FiniteField(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return sub_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return sub(0, a); }

  static bool supported(unsigned q);

 private:
  unsigned q_;
  std::vector<std::uint8_t> add_, sub_, mul_;
};

// Big-endian digit expansion of index over base q, length len.
std::vector<unsigned> to_digits(std::uint64_t index, unsigned q, unsigned len);
std::uint64_t from_digits(const std::vector<unsigned>& digits, unsigned q);

}  // namespace secamp
