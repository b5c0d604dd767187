// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "core/bounds.hpp"
#include "core/distribution.hpp"

namespace secamp {

// A finite abelian group Z_{m1} x ... x Z_{mk}; elements are indexed in
// big-endian mixed radix.
class AdditiveGroup {
 public:
  explicit AdditiveGroup(std::vector<unsigned> moduli);
  static AdditiveGroup cyclic(unsigned n) { return AdditiveGroup({n}); }

  const std::vector<unsigned>& moduli() const noexcept { return moduli_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t sub(std::size_t a, std::size_t b) const;
  AdditiveGroup power(std::size_t n) const;

  bool operator==(const AdditiveGroup&) const = default;

 private:
  std::vector<unsigned> moduli_;
  std::size_t size_ = 1;
};

// A stochastic matrix W_x(y) with rows indexed by inputs.
class Channel {
 public:
  enum class Kind { generic, additive, general_additive };

  Channel(Alphabet input, Alphabet output, std::vector<double> matrix);
  Channel(std::size_t inputs, std::size_t outputs, std::vector<double> matrix);

  // W_x(z) = P(z - x) on the group.
  static Channel additive(const AdditiveGroup& g, const SubDist& noise);
  // W_x(z, z') = P^{X,Z'}(z - x, z'); output index z * |Z'| + z'.
  static Channel general_additive(const AdditiveGroup& g, const JointDist& pxz);

  const Alphabet& input() const noexcept { return input_; }
  const Alphabet& output() const noexcept { return output_; }
  std::size_t inputs() const noexcept { return input_.size(); }
  std::size_t outputs() const noexcept { return output_.size(); }
  double operator()(std::size_t x, std::size_t y) const {
    return matrix_[x * outputs() + y];
  }
  std::span<const double> row(std::size_t x) const {
    return std::span<const double>(matrix_).subspan(x * outputs(), outputs());
  }

  Kind kind() const noexcept { return kind_; }
  const std::optional<AdditiveGroup>& group() const noexcept { return group_; }
  // Noise of an additive channel.
  const std::optional<SubDist>& noise() const noexcept { return noise_; }
  // P^{X,Z'} of a general additive channel.
  const std::optional<JointDist>& side_joint() const noexcept { return side_; }

  // n uses. Structured channels stay structured (output indexed as the
  // structured form of the n-fold noise); generic ones use the Kronecker
  // order.
  Channel power(std::size_t n, std::size_t cell_limit = kDefaultCellLimit) const;

 private:
  Alphabet input_, output_;
  std::vector<double> matrix_;
  Kind kind_ = Kind::generic;
  std::optional<AdditiveGroup> group_;
  std::optional<SubDist> noise_;
  std::optional<JointDist> side_;
};

// W_p(y) = sum_x p(x) W_x(y).
SubDist output_distribution(const Channel& w, const SubDist& p);
double mutual_information(const SubDist& p, const Channel& w);

// log sum_y (sum_x p(x) W_x(y)^{1/(1-t)})^{1-t}, t < 1.
double phi_channel(const Channel& w, const SubDist& p, double t);
// log sum_y (sum_x p(x) W_x(y)^{1+t}) W_p(y)^{-t}, t > -1.
double psi_channel(const Channel& w, const SubDist& p, double t);

// max_{0<=t<=1/2} tR - phi(t).
ExponentResult e_phi(double R, const Channel& w, const SubDist& p);
// max_{0<=s<=1} (sR - psi(s))/(1+s).
ExponentResult e_psi(double R, const Channel& w, const SubDist& p);
// max_{0<=s<=1} (sR - psi(s))/2.
ExponentResult e_psi_pinsker(double R, const Channel& w, const SubDist& p);

struct AdditiveIdentityReport {
  double t = 0.0;
  double via_psi = 0.0;   // e^{(1-t) psi(t/(1-t))}
  double via_phi = 0.0;   // e^{phi(t)}
  double closed = 0.0;    // |X|^t e^{-(1-t) H~_{1/(1-t)}}, conditional form
                          // -log sum P(z') P(x|z')^{1+s} when side info exists
  double closed_gallager = 0.0;  // same with the Gallager conditional form
  double discrepancy = 0.0;      // max pairwise gap of via_psi, via_phi, closed
  double gallager_discrepancy = 0.0;  // |via_phi - closed_gallager|
};
// Uniform input; the channel must be additive or general additive.
AdditiveIdentityReport additive_identities(const Channel& w, double t);

struct HolderReport {
  bool holds = true;
  double min_gap = 0.0;   // min over t of e^{(1-t)psi(t/(1-t))} - e^{phi(t)}
  double worst_t = 0.0;
};
HolderReport holder_ordering(const Channel& w, const SubDist& p,
                             std::span<const double> ts);

}  // namespace secamp
