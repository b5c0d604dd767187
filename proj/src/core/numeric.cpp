// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "core/error.hpp"

namespace secamp {

double compensated_sum(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

std::uint64_t Rng::below(std::uint64_t n) {
  require(n >= 1, "Rng::below: empty range");
  if (n == 1) return 0;
  // Values below 2^64 mod n are rejected so the residues are equiprobable.
  const std::uint64_t threshold = (std::uint64_t{0} - n) % n;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

ScalarOptimum golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double tol) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  ScalarOptimum best{x, fx};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

ScalarOptimum maximize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, OptimizerOptions opts) {
  require(hi >= lo, "maximize_scalar: empty interval");
  if (hi == lo) return {lo, f(lo)};
  const int n = std::max(opts.grid_intervals, 2);
  const double step = (hi - lo) / n;
  ScalarOptimum best{lo, f(lo)};
  int best_i = 0;
  for (int i = 1; i <= n; ++i) {
    const double x = i == n ? hi : lo + step * i;
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_i = i;
    }
  }
  const double a = best_i == 0 ? lo : lo + step * (best_i - 1);
  const double b = best_i == n ? hi : lo + step * (best_i + 1);
  const ScalarOptimum refined = golden_section_max(f, a, b, opts.tolerance);
  return refined.value > best.value ? refined : best;
}

ScalarOptimum minimize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, OptimizerOptions opts) {
  ScalarOptimum r =
      maximize_scalar([&](double x) { return -f(x); }, lo, hi, opts);
  r.value = -r.value;
  return r;
}

double central_difference(const std::function<double(double)>& f, double x,
                          double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> xs(points);
  if (points == 1) {
    xs[0] = lo;
    return xs;
  }
  for (std::size_t i = 0; i < points; ++i)
    xs[i] = i + 1 == points ? hi
                            : lo + (hi - lo) * static_cast<double>(i) /
                                       static_cast<double>(points - 1);
  return xs;
}

unsigned thread_count() {
  if (const char* env = std::getenv("SECAMP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void run_chunks(std::uint64_t chunk_count,
                const std::function<void(std::uint64_t)>& body) {
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(thread_count(), chunk_count));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) body(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_count || failed.load()) return;
      try {
        body(c);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace secamp
