// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/field.hpp"
#include "core/numeric.hpp"

namespace secamp {

// A function table: entry a holds the output cell (0-based) of input a.
using HashTable = std::vector<std::size_t>;

// A seeded ensemble of functions {0..|A|-1} -> {0..M-1}. Seeds are indices
// 0..seed_count()-1; an ensemble draws the seed uniformly.
class HashFamily {
 public:
  virtual ~HashFamily() = default;

  virtual std::string name() const = 0;
  virtual std::size_t input_size() const = 0;
  virtual std::size_t output_size() const = 0;
  // nullopt when the seed space is too large to enumerate.
  virtual std::optional<std::uint64_t> seed_count() const = 0;
  virtual std::size_t eval(std::uint64_t seed, std::size_t a) const = 0;

  // A uniformly drawn member of the ensemble.
  virtual HashTable sample(Rng& rng) const;

  HashTable table(std::uint64_t seed) const;
  std::uint64_t require_enumerable(const char* what) const;

 protected:
  void check_args(std::uint64_t seed, std::size_t a) const;
};

// Every function A -> {0..M-1}, i.e. independent uniform outputs per input.
class FullyRandomFamily final : public HashFamily {
 public:
  FullyRandomFamily(std::size_t input_size, std::size_t output_size);

  std::string name() const override { return "fully-random"; }
  std::size_t input_size() const override { return input_size_; }
  std::size_t output_size() const override { return output_size_; }
  std::optional<std::uint64_t> seed_count() const override { return seeds_; }
  std::size_t eval(std::uint64_t seed, std::size_t a) const override;
  HashTable sample(Rng& rng) const override;

  // Seed index whose table is `t` (big-endian base-M digits).
  std::uint64_t seed_of(const HashTable& t) const;

 private:
  std::size_t input_size_, output_size_;
  std::optional<std::uint64_t> seeds_;
};

// a in F_q^k -> (X | I) a in F_q^m, X an m x (k-m) Toeplitz matrix given by
// k-1 field elements t: X[i][j] = t[i - j + k - m - 1]. Inputs and outputs
// are indexed by big-endian digit vectors, so the identity block acts on the
// last m input coordinates.
class ToeplitzFamily final : public HashFamily {
 public:
  ToeplitzFamily(unsigned q, unsigned k, unsigned m);

  std::string name() const override { return "toeplitz"; }
  std::size_t input_size() const override { return input_size_; }
  std::size_t output_size() const override { return output_size_; }
  std::optional<std::uint64_t> seed_count() const override { return seeds_; }
  std::size_t eval(std::uint64_t seed, std::size_t a) const override;

  unsigned q() const noexcept { return field_.order(); }
  unsigned k() const noexcept { return k_; }
  unsigned m() const noexcept { return m_; }
  const FiniteField& field() const noexcept { return field_; }
  // The full m x k matrix (X | I) for a seed, row-major.
  std::vector<std::vector<unsigned>> matrix(std::uint64_t seed) const;
  std::vector<unsigned> apply(std::uint64_t seed,
                              const std::vector<unsigned>& a) const;

 private:
  FiniteField field_;
  unsigned k_, m_;
  std::size_t input_size_, output_size_;
  std::uint64_t seeds_;
};

// An explicitly listed ensemble.
class TableFamily final : public HashFamily {
 public:
  TableFamily(std::string name, std::size_t input_size, std::size_t output_size,
              std::vector<HashTable> tables);

  static TableFamily identity(std::size_t n);
  static TableFamily constant(std::size_t input_size, std::size_t output_size);
  // All functions whose preimages have equal size; requires M | |A|.
  static TableFamily all_balanced(std::size_t input_size,
                                  std::size_t output_size);

  std::string name() const override { return name_; }
  std::size_t input_size() const override { return input_size_; }
  std::size_t output_size() const override { return output_size_; }
  std::optional<std::uint64_t> seed_count() const override {
    return tables_.size();
  }
  std::size_t eval(std::uint64_t seed, std::size_t a) const override;

 private:
  std::string name_;
  std::size_t input_size_, output_size_;
  std::vector<HashTable> tables_;
};

struct Universal2Report {
  bool pass = false;
  double max_collision = 0.0;  // max over a1 != a2 of Pr[f(a1) = f(a2)]
  double threshold = 0.0;      // 1/M
  std::size_t worst_a1 = 0, worst_a2 = 0;
};

struct BalanceReport {
  bool pass = false;
  std::optional<std::uint64_t> first_unbalanced_seed;
};

struct StrongUniversal2Report {
  bool pass = false;
  bool uniform_outputs = false;
  bool pairwise_independent = false;
  double max_marginal_deviation = 0.0;  // max |Pr[f(a)=m] - 1/M|
  double max_pair_deviation = 0.0;      // max |Pr[f(a)=m, f(a')=m'] - 1/M^2|
};

// Exhaustive checks over the seed space; throw size_limit when the seed
// space is not enumerable.
Universal2Report check_universal2(const HashFamily& f);
BalanceReport check_balanced(const HashFamily& f);
StrongUniversal2Report check_strongly_universal2(const HashFamily& f);

struct FamilySpec {
  std::string kind;  // "toeplitz", "fully-random", "balanced", "identity"
  unsigned q = 2, k = 0, m = 0;
  std::size_t input_size = 0, output_size = 0;
};
std::unique_ptr<HashFamily> make_family(const FamilySpec& spec);

}  // namespace secamp
