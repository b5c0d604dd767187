// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/privacy_amp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

namespace {

void check_table(std::span<const std::size_t> f, std::size_t n, std::size_t M) {
  require(f.size() == n, "function table length does not match alphabet size");
  require(M >= 1, "output size M must be >= 1");
  for (std::size_t v : f) require(v < M, "function output out of range");
}

void check_family(const HashFamily& family, std::size_t input_size) {
  require(family.input_size() == input_size,
          "hash family input size does not match the source alphabet");
}

}  // namespace

EnsembleEstimate ensemble_average(
    const HashFamily& family, const EnsembleMode& mode,
    const std::function<double(const HashTable&)>& value,
    double per_member_cost) {
  EnsembleEstimate out;
  if (mode.kind == EnsembleMode::Kind::exact) {
    const std::uint64_t seeds = family.require_enumerable("exact ensemble average");
    require(static_cast<double>(seeds) * per_member_cost <= kExactEvaluationLimit,
            "exact ensemble average exceeds the evaluation limit; use "
            "Monte Carlo mode",
            ErrorCode::size_limit);
    const auto sums = chunked_sums<1>(seeds, [&](std::uint64_t s) {
      return Partial<1>{value(family.table(s))};
    });
    out.mean = sums[0] / static_cast<double>(seeds);
    out.members = seeds;
    out.exact = true;
    return out;
  }
  require(mode.samples >= 2, "Monte Carlo mode needs at least 2 samples");
  Rng rng(mode.seed);
  CompensatedSum sum, sum_sq;
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    const double v = value(family.sample(rng));
    sum.add(v);
    sum_sq.add(v * v);
  }
  const double n = static_cast<double>(mode.samples);
  out.mean = sum.value() / n;
  const double var =
      std::max(0.0, (sum_sq.value() - n * out.mean * out.mean) / (n - 1.0));
  out.stderr_ = std::sqrt(var / n);
  out.members = mode.samples;
  out.exact = false;
  return out;
}

SubDist pushforward(const SubDist& p, std::span<const std::size_t> f,
                    std::size_t M) {
  check_table(f, p.size(), M);
  std::vector<CompensatedSum> cells(M);
  for (std::size_t a = 0; a < p.size(); ++a) cells[f[a]].add(p[a]);
  std::vector<double> m(M);
  for (std::size_t i = 0; i < M; ++i) m[i] = cells[i].value();
  return SubDist(std::move(m));
}

double d1_hashed(const SubDist& p, std::span<const std::size_t> f,
                 std::size_t M) {
  return d1_uniformity(pushforward(p, f, M));
}

EnsembleEstimate expected_d1(const SubDist& p, const HashFamily& family,
                             const EnsembleMode& mode) {
  check_family(family, p.size());
  const std::size_t M = family.output_size();
  return ensemble_average(
      family, mode, [&](const HashTable& t) { return d1_hashed(p, t, M); },
      static_cast<double>(p.size()));
}

EnsembleEstimate expected_collision_mass(const SubDist& p,
                                         const HashFamily& family,
                                         const EnsembleMode& mode) {
  check_family(family, p.size());
  const std::size_t M = family.output_size();
  return ensemble_average(
      family, mode,
      [&](const HashTable& t) { return collision_mass(pushforward(p, t, M)); },
      static_cast<double>(p.size()));
}

namespace {

// Joint masses P^{f(A),E}(m, e), row-major in m.
std::vector<double> hashed_joint(const JointDist& j,
                                 std::span<const std::size_t> f, std::size_t M) {
  check_table(f, j.size_a(), M);
  const std::size_t ne = j.size_e();
  std::vector<CompensatedSum> cells(M * ne);
  for (std::size_t a = 0; a < j.size_a(); ++a)
    for (std::size_t e = 0; e < ne; ++e) cells[f[a] * ne + e].add(j(a, e));
  std::vector<double> out(M * ne);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cells[i].value();
  return out;
}

}  // namespace

double d1_conditional(const JointDist& j, std::span<const std::size_t> f,
                      std::size_t M) {
  const auto h = hashed_joint(j, f, M);
  const SubDist pe = j.marginal_e();
  const std::size_t ne = j.size_e();
  CompensatedSum s;
  for (std::size_t m = 0; m < M; ++m)
    for (std::size_t e = 0; e < ne; ++e)
      s.add(std::fabs(h[m * ne + e] - pe[e] / static_cast<double>(M)));
  return s.value();
}

double d1_prime_conditional(const JointDist& j, std::span<const std::size_t> f,
                            std::size_t M) {
  const auto h = hashed_joint(j, f, M);
  const SubDist pe = j.marginal_e();
  const std::size_t ne = j.size_e();
  std::vector<double> pm(M, 0.0);
  for (std::size_t m = 0; m < M; ++m) {
    CompensatedSum s;
    for (std::size_t e = 0; e < ne; ++e) s.add(h[m * ne + e]);
    pm[m] = s.value();
  }
  CompensatedSum s;
  for (std::size_t m = 0; m < M; ++m)
    for (std::size_t e = 0; e < ne; ++e)
      s.add(std::fabs(h[m * ne + e] - pm[m] * pe[e]));
  return s.value();
}

EnsembleEstimate expected_d1_conditional(const JointDist& j,
                                         const HashFamily& family,
                                         const EnsembleMode& mode) {
  require(family.input_size() == j.size_a(),
          "hash family input size does not match the secret alphabet");
  const std::size_t M = family.output_size();
  return ensemble_average(
      family, mode, [&](const HashTable& t) { return d1_conditional(j, t, M); },
      static_cast<double>(j.size_a() * j.size_e()));
}

double theorem2_lower_bound(const SubDist& p, std::size_t M,
                            std::span<const std::size_t> omega) {
  require(omega.size() < M, "the set Omega must have fewer than M elements",
          ErrorCode::domain);
  std::set<std::size_t> distinct(omega.begin(), omega.end());
  require(distinct.size() == omega.size(), "Omega must not repeat symbols");
  CompensatedSum mass;
  for (std::size_t a : omega) {
    require(a < p.size(), "Omega symbol out of range");
    mass.add(p[a]);
  }
  const double f = 1.0 - static_cast<double>(omega.size()) / static_cast<double>(M);
  return f * f * mass.value();
}

BestOmega best_theorem2_lower_bound(const SubDist& p, std::size_t M) {
  require(M >= 1, "output size M must be >= 1");
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  BestOmega best;
  const std::size_t max_size = std::min(M - 1, p.size());
  for (std::size_t k = 1; k <= max_size; ++k) {
    const std::span<const std::size_t> omega(order.data(), k);
    const double v = theorem2_lower_bound(p, M, omega);
    if (v > best.value) {
      best.value = v;
      best.omega.assign(omega.begin(), omega.end());
    }
  }
  return best;
}

}  // namespace secamp
