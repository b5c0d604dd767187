// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/hash_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/alphabet.hpp"
#include "core/error.hpp"

namespace secamp {

namespace {

constexpr std::uint64_t kMaxEnumerableSeeds = std::uint64_t{1} << 62;
// Upper bound on seed_count * |A|^2 / 2 pair evaluations in the checkers.
constexpr double kMaxCheckWork = 2e9;

std::optional<std::uint64_t> checked_seed_power(std::uint64_t base,
                                                std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > kMaxEnumerableSeeds / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::vector<HashTable> all_tables(const HashFamily& f, const char* what) {
  const std::uint64_t seeds = f.require_enumerable(what);
  const double n = static_cast<double>(f.input_size());
  require(static_cast<double>(seeds) * n * n / 2.0 <= kMaxCheckWork,
          std::string(what) + ": exhaustive check too large",
          ErrorCode::size_limit);
  std::vector<HashTable> t;
  t.reserve(seeds);
  for (std::uint64_t s = 0; s < seeds; ++s) t.push_back(f.table(s));
  return t;
}

}  // namespace

void HashFamily::check_args(std::uint64_t seed, std::size_t a) const {
  const auto count = seed_count();
  require(!count || seed < *count, name() + ": seed index out of range");
  require(a < input_size(), name() + ": input symbol out of range");
}

HashTable HashFamily::sample(Rng& rng) const {
  const std::uint64_t seeds = require_enumerable("HashFamily::sample");
  return table(rng.below(seeds));
}

HashTable HashFamily::table(std::uint64_t seed) const {
  HashTable t(input_size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = eval(seed, a);
  return t;
}

std::uint64_t HashFamily::require_enumerable(const char* what) const {
  const auto count = seed_count();
  require(count.has_value(),
          std::string(what) + ": seed space of '" + name() +
              "' is not enumerable",
          ErrorCode::size_limit);
  return *count;
}

FullyRandomFamily::FullyRandomFamily(std::size_t input_size,
                                     std::size_t output_size)
    : input_size_(input_size), output_size_(output_size) {
  require(input_size >= 1 && output_size >= 1,
          "fully-random family needs nonempty input and output sets");
  seeds_ = checked_seed_power(output_size, input_size);
}

std::size_t FullyRandomFamily::eval(std::uint64_t seed, std::size_t a) const {
  check_args(seed, a);
  require(seeds_.has_value(),
          "fully-random family: seed indices need an enumerable seed space",
          ErrorCode::size_limit);
  for (std::size_t i = a + 1; i < input_size_; ++i) seed /= output_size_;
  return static_cast<std::size_t>(seed % output_size_);
}

HashTable FullyRandomFamily::sample(Rng& rng) const {
  HashTable t(input_size_);
  for (auto& v : t) v = static_cast<std::size_t>(rng.below(output_size_));
  return t;
}

std::uint64_t FullyRandomFamily::seed_of(const HashTable& t) const {
  require(t.size() == input_size_, "table length does not match input size");
  require(seeds_.has_value(), "fully-random family: seed space too large",
          ErrorCode::size_limit);
  std::uint64_t s = 0;
  for (std::size_t v : t) {
    require(v < output_size_, "table entry out of range");
    s = s * output_size_ + v;
  }
  return s;
}

ToeplitzFamily::ToeplitzFamily(unsigned q, unsigned k, unsigned m)
    : field_(q), k_(k), m_(m) {
  require(k >= 2 && m >= 1 && m < k,
          "toeplitz family needs k >= 2 and 1 <= m < k");
  const auto in = checked_seed_power(q, k);
  require(in.has_value() && *in <= kDefaultCellLimit,
          "toeplitz input space exceeds the cell limit", ErrorCode::size_limit);
  input_size_ = static_cast<std::size_t>(*in);
  output_size_ = static_cast<std::size_t>(*checked_seed_power(q, m));
  seeds_ = *checked_seed_power(q, k - 1);
}

std::vector<std::vector<unsigned>> ToeplitzFamily::matrix(
    std::uint64_t seed) const {
  require(seed < seeds_, "toeplitz: seed index out of range");
  const std::vector<unsigned> t = to_digits(seed, q(), k_ - 1);
  const unsigned w = k_ - m_;
  std::vector<std::vector<unsigned>> mat(m_, std::vector<unsigned>(k_, 0));
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < w; ++j) mat[i][j] = t[i + w - 1 - j];
    mat[i][w + i] = 1;
  }
  return mat;
}

std::vector<unsigned> ToeplitzFamily::apply(
    std::uint64_t seed, const std::vector<unsigned>& a) const {
  require(a.size() == k_, "toeplitz: input vector length must be k");
  const auto mat = matrix(seed);
  std::vector<unsigned> y(m_, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < k_; ++j)
      y[i] = field_.add(y[i], field_.mul(mat[i][j], a[j]));
  return y;
}

std::size_t ToeplitzFamily::eval(std::uint64_t seed, std::size_t a) const {
  check_args(seed, a);
  return static_cast<std::size_t>(
      from_digits(apply(seed, to_digits(a, q(), k_)), q()));
}

TableFamily::TableFamily(std::string name, std::size_t input_size,
                         std::size_t output_size, std::vector<HashTable> tables)
    : name_(std::move(name)),
      input_size_(input_size),
      output_size_(output_size),
      tables_(std::move(tables)) {
  require(input_size >= 1 && output_size >= 1,
          "table family needs nonempty input and output sets");
  require(!tables_.empty(), "table family needs at least one function");
  for (const auto& t : tables_) {
    require(t.size() == input_size_, "table family: function length mismatch");
    for (std::size_t v : t)
      require(v < output_size_, "table family: output out of range");
  }
}

TableFamily TableFamily::identity(std::size_t n) {
  HashTable t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return TableFamily("identity", n, n, {t});
}

TableFamily TableFamily::constant(std::size_t input_size,
                                  std::size_t output_size) {
  return TableFamily("constant", input_size, output_size,
                     {HashTable(input_size, 0)});
}

TableFamily TableFamily::all_balanced(std::size_t input_size,
                                      std::size_t output_size) {
  require(output_size >= 1 && input_size % output_size == 0,
          "balanced family needs M to divide |A|");
  constexpr std::size_t kMaxTables = 1'000'000;
  const std::size_t cap = input_size / output_size;
  std::vector<HashTable> tables;
  HashTable t(input_size);
  std::vector<std::size_t> used(output_size, 0);
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == input_size) {
      require(tables.size() < kMaxTables,
              "balanced family has too many members to enumerate",
              ErrorCode::size_limit);
      tables.push_back(t);
      return;
    }
    for (std::size_t m = 0; m < output_size; ++m) {
      if (used[m] == cap) continue;
      ++used[m];
      t[a] = m;
      self(self, a + 1);
      --used[m];
    }
  };
  rec(rec, 0);
  return TableFamily("balanced", input_size, output_size, std::move(tables));
}

std::size_t TableFamily::eval(std::uint64_t seed, std::size_t a) const {
  check_args(seed, a);
  return tables_[seed][a];
}

Universal2Report check_universal2(const HashFamily& f) {
  const auto tables = all_tables(f, "check_universal2");
  const std::size_t n = f.input_size();
  Universal2Report r;
  r.threshold = 1.0 / static_cast<double>(f.output_size());
  std::uint64_t worst = 0;
  bool any_pair = false;
  std::vector<std::uint64_t> row(n);
  for (std::size_t a1 = 0; a1 < n; ++a1) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& t : tables)
      for (std::size_t a2 = a1 + 1; a2 < n; ++a2)
        if (t[a1] == t[a2]) ++row[a2];
    for (std::size_t a2 = a1 + 1; a2 < n; ++a2) {
      if (!any_pair || row[a2] > worst) {
        worst = row[a2];
        r.worst_a1 = a1;
        r.worst_a2 = a2;
        any_pair = true;
      }
    }
  }
  r.max_collision =
      static_cast<double>(worst) / static_cast<double>(tables.size());
  r.pass = r.max_collision <= r.threshold + 1e-12;
  return r;
}

BalanceReport check_balanced(const HashFamily& f) {
  const std::uint64_t seeds = f.require_enumerable("check_balanced");
  const std::size_t M = f.output_size();
  BalanceReport r;
  std::vector<std::size_t> sizes(M);
  for (std::uint64_t s = 0; s < seeds; ++s) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t a = 0; a < f.input_size(); ++a) ++sizes[f.eval(s, a)];
    if (std::adjacent_find(sizes.begin(), sizes.end(),
                           std::not_equal_to<>()) != sizes.end()) {
      r.first_unbalanced_seed = s;
      return r;
    }
  }
  r.pass = true;
  return r;
}

StrongUniversal2Report check_strongly_universal2(const HashFamily& f) {
  const auto tables = all_tables(f, "check_strongly_universal2");
  const std::size_t n = f.input_size(), M = f.output_size();
  const auto seeds = static_cast<std::uint64_t>(tables.size());
  const double inv = 1.0 / static_cast<double>(seeds);
  StrongUniversal2Report r;
  r.uniform_outputs = true;
  r.pairwise_independent = true;

  std::vector<std::uint64_t> marg(M);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(marg.begin(), marg.end(), 0);
    for (const auto& t : tables) ++marg[t[a]];
    for (std::size_t m = 0; m < M; ++m) {
      if (marg[m] * M != seeds) r.uniform_outputs = false;
      r.max_marginal_deviation =
          std::max(r.max_marginal_deviation,
                   std::fabs(static_cast<double>(marg[m]) * inv -
                             1.0 / static_cast<double>(M)));
    }
  }
  std::vector<std::uint64_t> pair(M * M);
  const double target = 1.0 / static_cast<double>(M * M);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = a1 + 1; a2 < n; ++a2) {
      std::fill(pair.begin(), pair.end(), 0);
      for (const auto& t : tables) ++pair[t[a1] * M + t[a2]];
      for (std::uint64_t c : pair) {
        if (c * M * M != seeds) r.pairwise_independent = false;
        r.max_pair_deviation = std::max(
            r.max_pair_deviation, std::fabs(static_cast<double>(c) * inv - target));
      }
    }
  r.pass = r.uniform_outputs && r.pairwise_independent;
  return r;
}

std::unique_ptr<HashFamily> make_family(const FamilySpec& spec) {
  if (spec.kind == "toeplitz")
    return std::make_unique<ToeplitzFamily>(spec.q, spec.k, spec.m);
  if (spec.kind == "fully-random")
    return std::make_unique<FullyRandomFamily>(spec.input_size,
                                               spec.output_size);
  if (spec.kind == "balanced")
    return std::make_unique<TableFamily>(
        TableFamily::all_balanced(spec.input_size, spec.output_size));
  if (spec.kind == "identity")
    return std::make_unique<TableFamily>(TableFamily::identity(spec.input_size));
  fail(ErrorCode::invalid_argument, "unknown hash family '" + spec.kind + "'");
}

}  // namespace secamp
