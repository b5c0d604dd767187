// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace secamp {

// Default cap on the number of cells of any dense vector we materialize.
inline constexpr std::size_t kDefaultCellLimit = std::size_t{1} << 20;

// An ordered finite set of distinct labels. Products and powers are stored as
// lists of factors and labelled lazily; index order is mixed-radix with the
// first factor most significant.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  // Labels "0", "1", ..., "n-1".
  static Alphabet indexed(std::size_t n);

  Alphabet power(std::size_t n,
                 std::size_t cell_limit = kDefaultCellLimit) const;
  static Alphabet product(const Alphabet& first, const Alphabet& second,
                          std::size_t cell_limit = kDefaultCellLimit);

  std::size_t size() const noexcept { return size_; }
  std::string symbol(std::size_t i) const;
  std::vector<std::string> symbols() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const Alphabet& other) const;

 private:
  using Factor = std::vector<std::string>;
  explicit Alphabet(std::shared_ptr<const std::vector<Factor>> factors,
                    std::size_t size);

  std::shared_ptr<const std::vector<Factor>> factors_;
  std::size_t size_ = 0;
};

// Multiplies a * b, failing with a size_limit error beyond `limit`.
std::size_t checked_cells(std::size_t a, std::size_t b, std::size_t limit,
                          const char* what);
// base^n with the same guard.
std::size_t checked_power(std::size_t base, std::size_t n, std::size_t limit,
                          const char* what);

}  // namespace secamp
