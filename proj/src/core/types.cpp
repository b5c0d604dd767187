// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/types.hpp"

#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

TypeClass::TypeClass(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  require(!counts_.empty(), "type class needs a nonempty alphabet");
  std::uint64_t n = 0;
  for (auto c : counts_) n += c;
  require(n >= 1 && n <= std::numeric_limits<std::uint32_t>::max(),
          "type class length must be positive");
  n_ = static_cast<std::uint32_t>(n);
}

SubDist TypeClass::empirical() const {
  std::vector<double> q(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i)
    q[i] = static_cast<double>(counts_[i]) / static_cast<double>(n_);
  return SubDist(std::move(q));
}

BigInt TypeClass::class_size() const {
  BigInt r = 1;
  std::uint64_t remaining = n_;
  for (auto c : counts_) {
    r *= binomial(remaining, c);
    remaining -= c;
  }
  return r;
}

double TypeClass::log_class_size() const {
  const BigInt size = class_size();
  if (boost::multiprecision::msb(size) < 1000)
    return std::log(size.convert_to<double>());
  // Beyond double range: log n! - sum log c!.
  std::uint64_t n = 0;
  double s = 0.0;
  for (auto c : counts_) {
    n += c;
    s -= std::lgamma(static_cast<double>(c) + 1.0);
  }
  return s + std::lgamma(static_cast<double>(n) + 1.0);
}

double TypeClass::log_string_probability(const SubDist& p) const {
  require(p.size() == counts_.size(), "type class and distribution sizes differ");
  CompensatedSum s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    if (p[i] <= 0.0) return -std::numeric_limits<double>::infinity();
    s.add(static_cast<double>(counts_[i]) * std::log(p[i]));
  }
  return s.value();
}

double TypeClass::class_probability(const SubDist& p) const {
  require(p.size() == counts_.size(), "type class and distribution sizes differ");
  const BigInt size = class_size();
  if (boost::multiprecision::msb(size) < 1000) {
    double prod = size.convert_to<double>();
    for (std::size_t i = 0; i < counts_.size(); ++i)
      prod *= pow0(p[i], static_cast<double>(counts_[i]));
    if (prod > 0.0 && std::isnormal(prod)) return prod;
  }
  return std::exp(log_class_size() + log_string_probability(p));
}

std::vector<TypeClass> enumerate_types(std::size_t alphabet_size,
                                       std::uint32_t n) {
  require(alphabet_size >= 1, "alphabet must be nonempty");
  require(n >= 1, "type length must be >= 1");
  const BigInt count = type_count(alphabet_size, n);
  require(count <= BigInt(kDefaultCellLimit),
          "number of type classes exceeds the cell limit", ErrorCode::size_limit);
  std::vector<TypeClass> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<std::uint32_t> c(alphabet_size, 0);
  // Depth-first over positions; the last position takes the remainder.
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == alphabet_size) {
      c[pos] = left;
      out.emplace_back(c);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      c[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

BigInt type_count(std::size_t alphabet_size, std::uint32_t n) {
  return binomial(n + alphabet_size - 1, alphabet_size - 1);
}

std::vector<std::uint32_t> string_counts(std::size_t index,
                                         std::size_t alphabet_size,
                                         std::uint32_t n) {
  std::vector<std::uint32_t> c(alphabet_size, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    ++c[index % alphabet_size];
    index /= alphabet_size;
  }
  return c;
}

}  // namespace secamp
