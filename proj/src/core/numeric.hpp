// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace secamp {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs) noexcept;

// Deterministic pseudorandom stream: std::mt19937_64 (bit-exact across
// conforming standard libraries) with hand-written range reduction, since the
// std::*_distribution algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // Uniform on {0, ..., n-1} by rejection; n >= 1.
  std::uint64_t below(std::uint64_t n);
  // Standard exponential variate, used for uniform simplex sampling.
  double exponential() { return -std::log1p(-uniform01()); }

 private:
  std::mt19937_64 engine_;
};

struct ScalarOptimum {
  double arg = 0.0;
  double value = 0.0;
};

struct OptimizerOptions {
  int grid_intervals = 1024;
  double tolerance = 1e-10;
};

// Dense grid followed by golden-section refinement around the best grid
// point. Returns the better of the grid and refined answers, so a
// non-unimodal objective still yields the dense-grid optimum.
ScalarOptimum maximize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, OptimizerOptions opts = {});
ScalarOptimum minimize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, OptimizerOptions opts = {});

// Golden-section search for a unimodal objective on [lo, hi].
ScalarOptimum golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double tol = 1e-12);

double central_difference(const std::function<double(double)>& f, double x,
                          double h = 1e-5);

std::vector<double> linspace(double lo, double hi, std::size_t points);

// Worker count for ensemble sweeps; honours SECAMP_THREADS.
unsigned thread_count();

// Sums fn(i) for i in [0, count) component-wise. Work is split into fixed
// chunks, each chunk is summed in index order, and chunk totals are merged in
// chunk order, so the result does not depend on the number of threads.
template <std::size_t K>
using Partial = std::array<double, K>;

void run_chunks(std::uint64_t chunk_count,
                const std::function<void(std::uint64_t)>& body);

template <std::size_t K, class Fn>
Partial<K> chunked_sums(std::uint64_t count, Fn&& fn,
                        std::uint64_t chunk = 256) {
  const std::uint64_t chunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
  std::vector<std::array<CompensatedSum, K>> partial(chunks);
  run_chunks(chunks, [&](std::uint64_t c) {
    const std::uint64_t end = std::min(count, (c + 1) * chunk);
    for (std::uint64_t i = c * chunk; i < end; ++i) {
      const Partial<K> v = fn(i);
      for (std::size_t k = 0; k < K; ++k) partial[c][k].add(v[k]);
    }
  });
  std::array<CompensatedSum, K> total{};
  for (const auto& p : partial)
    for (std::size_t k = 0; k < K; ++k) total[k].add(p[k].value());
  Partial<K> out{};
  for (std::size_t k = 0; k < K; ++k) out[k] = total[k].value();
  return out;
}

// x^y with the conventions 0^y = 0 for y > 0 and 0^0 = 1.
inline double pow0(double x, double y) {
  if (x <= 0.0) return y == 0.0 ? 1.0 : 0.0;
  return std::pow(x, y);
}

// x log x with 0 log 0 = 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace secamp
