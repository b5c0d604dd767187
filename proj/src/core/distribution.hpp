// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core/alphabet.hpp"

namespace secamp {

// Tolerance on the total mass of distributions read from user input.
inline constexpr double kMassTolerance = 1e-12;

// A finite sub-probability vector: nonnegative masses with total <= 1.
// All entropies below are in nats.
class SubDist {
 public:
  SubDist(Alphabet alphabet, std::vector<double> mass);
  explicit SubDist(std::vector<double> mass);

  static SubDist uniform(std::size_t n, double total = 1.0);
  static SubDist uniform(const Alphabet& alphabet, double total = 1.0);
  // (p, 1 - p) on {0, 1}.
  static SubDist bernoulli(double p);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return mass_.size(); }
  double operator[](std::size_t i) const { return mass_[i]; }
  std::span<const double> mass() const noexcept { return mass_; }
  double total() const noexcept { return total_; }
  double max_mass() const noexcept;

 private:
  Alphabet alphabet_;
  std::vector<double> mass_;
  double total_ = 0.0;
};

double l1_distance(const SubDist& p, const SubDist& q);
double l2_distance(const SubDist& p, const SubDist& q);
// d1(P, P(A) * uniform): distance to the flat vector of equal total.
double d1_uniformity(const SubDist& p);
double l2_uniformity(const SubDist& p);

// Collision mass sum_a P(a)^2 = exp(-H_2).
double collision_mass(const SubDist& p);

// -log sum_a P(a)^{1+s}, s > -1.
double renyi_tilde(const SubDist& p, double s);
// renyi_tilde / s, with the Shannon limit at s = 0 (proper distributions).
double renyi(const SubDist& p, double s);
double shannon_entropy(const SubDist& p);
// d/ds renyi_tilde = -(sum p^{1+s} log p) / (sum p^{1+s}).
double renyi_tilde_derivative(const SubDist& p, double s);
// Min-entropy -log max_a P(a).
double min_entropy(const SubDist& p);

// D(Q||P); +infinity when Q is not absolutely continuous w.r.t. P.
double kl_divergence(const SubDist& q, const SubDist& p);

// P_{1+s}(a) = P(a)^{1+s} / sum P^{1+s}.
SubDist tilt(const SubDist& p, double s);

struct Truncation {
  SubDist kept;   // masses above e^{-Rp} zeroed
  double tail = 0.0;  // removed mass
};
Truncation smooth_truncate(const SubDist& p, double rp);

SubDist iid_extend(const SubDist& p, std::size_t n,
                   std::size_t cell_limit = kDefaultCellLimit);

// Joint distribution of a secret A and side information E, stored row-major
// (rows indexed by A).
class JointDist {
 public:
  JointDist(Alphabet alphabet_a, Alphabet alphabet_e, std::vector<double> mass);
  JointDist(std::size_t size_a, std::size_t size_e, std::vector<double> mass);

  static JointDist independent(const SubDist& pa, const SubDist& pe);

  const Alphabet& alphabet_a() const noexcept { return alphabet_a_; }
  const Alphabet& alphabet_e() const noexcept { return alphabet_e_; }
  std::size_t size_a() const noexcept { return alphabet_a_.size(); }
  std::size_t size_e() const noexcept { return alphabet_e_.size(); }
  double operator()(std::size_t a, std::size_t e) const {
    return mass_[a * size_e() + e];
  }
  std::span<const double> mass() const noexcept { return mass_; }

  SubDist marginal_a() const;
  SubDist marginal_e() const;
  // P^{A|E}(.|e); all zeros when P^E(e) = 0.
  std::vector<double> conditional_a(std::size_t e) const;

  JointDist iid_extend(std::size_t n,
                       std::size_t cell_limit = kDefaultCellLimit) const;

 private:
  Alphabet alphabet_a_;
  Alphabet alphabet_e_;
  std::vector<double> mass_;
};

double joint_entropy(const JointDist& j);
// H(A|E) = H(A,E) - H(E).
double conditional_entropy(const JointDist& j);

}  // namespace secamp
