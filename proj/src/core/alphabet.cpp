// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/alphabet.hpp"

#include <set>

#include "core/error.hpp"

namespace secamp {

std::size_t checked_cells(std::size_t a, std::size_t b, std::size_t limit,
                          const char* what) {
  if (a != 0 && b > limit / a)
    fail(ErrorCode::size_limit, std::string(what) + ": exceeds cell limit of " +
                                    std::to_string(limit));
  return a * b;
}

std::size_t checked_power(std::size_t base, std::size_t n, std::size_t limit,
                          const char* what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out = checked_cells(out, base, limit, what);
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  require(!symbols.empty(), "alphabet must contain at least one symbol");
  std::set<std::string_view> seen;
  for (const auto& s : symbols)
    require(seen.insert(s).second, "alphabet symbols must be distinct: '" + s + "'");
  size_ = symbols.size();
  factors_ = std::make_shared<const std::vector<Factor>>(
      std::vector<Factor>{std::move(symbols)});
}

Alphabet::Alphabet(std::shared_ptr<const std::vector<Factor>> factors,
                   std::size_t size)
    : factors_(std::move(factors)), size_(size) {}

Alphabet Alphabet::indexed(std::size_t n) {
  std::vector<std::string> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::to_string(i);
  return Alphabet(std::move(s));
}

Alphabet Alphabet::power(std::size_t n, std::size_t cell_limit) const {
  require(n >= 1, "alphabet power must be >= 1");
  if (n == 1) return *this;
  const std::size_t size = checked_power(size_, n, cell_limit, "alphabet power");
  std::vector<Factor> f;
  f.reserve(factors_->size() * n);
  for (std::size_t i = 0; i < n; ++i)
    f.insert(f.end(), factors_->begin(), factors_->end());
  return Alphabet(std::make_shared<const std::vector<Factor>>(std::move(f)), size);
}

Alphabet Alphabet::product(const Alphabet& first, const Alphabet& second,
                           std::size_t cell_limit) {
  const std::size_t size =
      checked_cells(first.size_, second.size_, cell_limit, "alphabet product");
  std::vector<Factor> f(*first.factors_);
  f.insert(f.end(), second.factors_->begin(), second.factors_->end());
  return Alphabet(std::make_shared<const std::vector<Factor>>(std::move(f)), size);
}

std::string Alphabet::symbol(std::size_t i) const {
  require(i < size_, "symbol index out of range");
  const auto& fs = *factors_;
  if (fs.size() == 1) return fs[0][i];
  bool single_char = true;
  for (const auto& f : fs)
    for (const auto& s : f) single_char = single_char && s.size() == 1;
  std::vector<std::size_t> digits(fs.size());
  for (std::size_t k = fs.size(); k-- > 0;) {
    digits[k] = i % fs[k].size();
    i /= fs[k].size();
  }
  std::string out;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k > 0 && !single_char) out += ',';
    out += fs[k][digits[k]];
  }
  return out;
}

std::vector<std::string> Alphabet::symbols() const {
  std::vector<std::string> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = symbol(i);
  return out;
}

std::optional<std::size_t> Alphabet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (symbol(i) == label) return i;
  return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (size_ != other.size_) return false;
  if (factors_ == other.factors_) return true;
  return *factors_ == *other.factors_;
}

}  // namespace secamp
