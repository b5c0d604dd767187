// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/field.hpp"

#include <string>

#include "core/error.hpp"

namespace secamp {

namespace {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

bool FiniteField::supported(unsigned q) {
  return q == 4 || (is_prime(q) && q <= 251);
}

FiniteField::FiniteField(unsigned q) : q_(q) {
  require(supported(q), "unsupported field order " + std::to_string(q) +
                            " (primes up to 251 and 4 are supported)",
          ErrorCode::unsupported);
  add_.resize(q * q);
  sub_.resize(q * q);
  mul_.resize(q * q);
  if (q == 4) {
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) {
        add_[a * 4 + b] = static_cast<std::uint8_t>(a ^ b);
        sub_[a * 4 + b] = static_cast<std::uint8_t>(a ^ b);
        // Carry-less product reduced by x^2 = x + 1.
        unsigned p = 0;
        for (unsigned i = 0; i < 2; ++i)
          if (b >> i & 1u) p ^= a << i;
        if (p & 4u) p ^= 0x7u;
        mul_[a * 4 + b] = static_cast<std::uint8_t>(p);
      }
    return;
  }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
      sub_[a * q + b] = static_cast<std::uint8_t>((a + q - b) % q);
      mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
    }
}

std::vector<unsigned> to_digits(std::uint64_t index, unsigned q, unsigned len) {
  std::vector<unsigned> d(len);
  for (unsigned i = len; i-- > 0;) {
    d[i] = static_cast<unsigned>(index % q);
    index /= q;
  }
  return d;
}

std::uint64_t from_digits(const std::vector<unsigned>& digits, unsigned q) {
  std::uint64_t x = 0;
  for (unsigned d : digits) x = x * q + d;
  return x;
}

}  // namespace secamp
