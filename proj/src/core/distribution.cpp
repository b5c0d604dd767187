// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

namespace {

void check_masses(std::span<const double> mass, const char* what) {
  for (std::size_t i = 0; i < mass.size(); ++i) {
    require(std::isfinite(mass[i]) && mass[i] >= 0.0,
            std::string(what) + ": mass[" + std::to_string(i) +
                "] must be a finite nonnegative number");
  }
}

void check_same_alphabet(const SubDist& p, const SubDist& q) {
  require(p.size() == q.size() && p.alphabet() == q.alphabet(),
          "distributions are defined on different alphabets");
}

}  // namespace

SubDist::SubDist(Alphabet alphabet, std::vector<double> mass)
    : alphabet_(std::move(alphabet)), mass_(std::move(mass)) {
  require(mass_.size() == alphabet_.size(),
          "mass vector length does not match alphabet size");
  check_masses(mass_, "sub-distribution");
  total_ = compensated_sum(mass_);
  require(total_ <= 1.0 + kMassTolerance,
          "sub-distribution total mass exceeds 1");
}

SubDist::SubDist(std::vector<double> mass) : alphabet_(Alphabet::indexed(mass.size())) {
  *this = SubDist(alphabet_, std::move(mass));
}

SubDist SubDist::uniform(std::size_t n, double total) {
  return uniform(Alphabet::indexed(n), total);
}

SubDist SubDist::uniform(const Alphabet& alphabet, double total) {
  return SubDist(alphabet, std::vector<double>(
                               alphabet.size(),
                               total / static_cast<double>(alphabet.size())));
}

SubDist SubDist::bernoulli(double p) {
  require(p >= 0.0 && p <= 1.0, "bernoulli parameter must lie in [0, 1]");
  return SubDist({p, 1.0 - p});
}

double SubDist::max_mass() const noexcept {
  return *std::max_element(mass_.begin(), mass_.end());
}

double l1_distance(const SubDist& p, const SubDist& q) {
  check_same_alphabet(p, q);
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) s.add(std::fabs(p[i] - q[i]));
  return s.value();
}

double l2_distance(const SubDist& p, const SubDist& q) {
  check_same_alphabet(p, q);
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    s.add(d * d);
  }
  return std::sqrt(s.value());
}

double d1_uniformity(const SubDist& p) {
  const double flat = p.total() / static_cast<double>(p.size());
  CompensatedSum s;
  for (double m : p.mass()) s.add(std::fabs(m - flat));
  return s.value();
}

double l2_uniformity(const SubDist& p) {
  const double flat = p.total() / static_cast<double>(p.size());
  CompensatedSum s;
  for (double m : p.mass()) s.add((m - flat) * (m - flat));
  return std::sqrt(s.value());
}

double collision_mass(const SubDist& p) {
  CompensatedSum s;
  for (double m : p.mass()) s.add(m * m);
  return s.value();
}

namespace {

double power_sum(const SubDist& p, double exponent) {
  CompensatedSum s;
  for (double m : p.mass()) s.add(pow0(m, exponent));
  return s.value();
}

}  // namespace

double renyi_tilde(const SubDist& p, double s) {
  require(s > -1.0, "renyi order parameter s must exceed -1");
  const double z = power_sum(p, 1.0 + s);
  if (z > 1e-250) return -std::log(z);
  // Large s: factor out the largest mass to avoid underflow.
  const double top = p.max_mass();
  require(top > 0.0, "renyi entropy of an empty support", ErrorCode::domain);
  CompensatedSum r;
  for (double m : p.mass()) r.add(pow0(m / top, 1.0 + s));
  return -(1.0 + s) * std::log(top) - std::log(r.value());
}

double renyi(const SubDist& p, double s) {
  if (s == 0.0) return shannon_entropy(p);
  return renyi_tilde(p, s) / s;
}

double shannon_entropy(const SubDist& p) {
  CompensatedSum s;
  for (double m : p.mass()) s.add(-xlogx(m));
  return s.value();
}

double renyi_tilde_derivative(const SubDist& p, double s) {
  require(s > -1.0, "renyi order parameter s must exceed -1");
  const double top = p.max_mass();
  CompensatedSum num, den;
  for (double m : p.mass()) {
    if (m <= 0.0) continue;
    const double w = std::pow(m / top, 1.0 + s);
    num.add(w * std::log(m));
    den.add(w);
  }
  require(den.value() > 0.0, "renyi entropy of an empty support",
          ErrorCode::domain);
  return -num.value() / den.value();
}

double min_entropy(const SubDist& p) {
  const double m = p.max_mass();
  require(m > 0.0, "min-entropy of an empty support", ErrorCode::domain);
  return -std::log(m);
}

double kl_divergence(const SubDist& q, const SubDist& p) {
  check_same_alphabet(q, p);
  CompensatedSum s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) return std::numeric_limits<double>::infinity();
    s.add(q[i] * (std::log(q[i]) - std::log(p[i])));
  }
  return std::max(0.0, s.value());
}

SubDist tilt(const SubDist& p, double s) {
  require(s > -1.0, "tilt parameter s must exceed -1");
  if (s == 0.0 && std::fabs(p.total() - 1.0) <= kMassTolerance) return p;
  // Scale by the largest mass first so large s does not underflow.
  const double top = p.max_mass();
  require(top > 0.0, "cannot tilt an empty support", ErrorCode::domain);
  std::vector<double> w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[i] = pow0(p[i] / top, 1.0 + s);
  const double z = compensated_sum(w);
  for (double& x : w) x /= z;
  return SubDist(p.alphabet(), std::move(w));
}

Truncation smooth_truncate(const SubDist& p, double rp) {
  require(!std::isnan(rp), "truncation rate must not be NaN");
  const double threshold = std::exp(-rp);
  std::vector<double> kept(p.mass().begin(), p.mass().end());
  CompensatedSum tail;
  for (double& m : kept) {
    if (m > threshold) {
      tail.add(m);
      m = 0.0;
    }
  }
  return {SubDist(p.alphabet(), std::move(kept)), tail.value()};
}

SubDist iid_extend(const SubDist& p, std::size_t n, std::size_t cell_limit) {
  require(n >= 1, "iid extension length must be >= 1");
  Alphabet alphabet = p.alphabet().power(n, cell_limit);
  std::vector<double> mass{1.0};
  mass.reserve(alphabet.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> next;
    next.reserve(mass.size() * p.size());
    for (double m : mass)
      for (double x : p.mass()) next.push_back(m * x);
    mass = std::move(next);
  }
  return SubDist(std::move(alphabet), std::move(mass));
}

JointDist::JointDist(Alphabet alphabet_a, Alphabet alphabet_e,
                     std::vector<double> mass)
    : alphabet_a_(std::move(alphabet_a)),
      alphabet_e_(std::move(alphabet_e)),
      mass_(std::move(mass)) {
  require(mass_.size() == alphabet_a_.size() * alphabet_e_.size(),
          "joint mass matrix does not match alphabet sizes");
  check_masses(mass_, "joint distribution");
  const double total = compensated_sum(mass_);
  require(std::fabs(total - 1.0) <= kMassTolerance,
          "joint distribution masses must sum to 1");
}

JointDist::JointDist(std::size_t size_a, std::size_t size_e,
                     std::vector<double> mass)
    : JointDist(Alphabet::indexed(size_a), Alphabet::indexed(size_e),
                std::move(mass)) {}

JointDist JointDist::independent(const SubDist& pa, const SubDist& pe) {
  std::vector<double> m;
  m.reserve(pa.size() * pe.size());
  for (double a : pa.mass())
    for (double e : pe.mass()) m.push_back(a * e);
  return JointDist(pa.alphabet(), pe.alphabet(), std::move(m));
}

SubDist JointDist::marginal_a() const {
  std::vector<double> m(size_a());
  for (std::size_t a = 0; a < size_a(); ++a) {
    CompensatedSum s;
    for (std::size_t e = 0; e < size_e(); ++e) s.add((*this)(a, e));
    m[a] = s.value();
  }
  return SubDist(alphabet_a_, std::move(m));
}

SubDist JointDist::marginal_e() const {
  std::vector<double> m(size_e());
  for (std::size_t e = 0; e < size_e(); ++e) {
    CompensatedSum s;
    for (std::size_t a = 0; a < size_a(); ++a) s.add((*this)(a, e));
    m[e] = s.value();
  }
  return SubDist(alphabet_e_, std::move(m));
}

std::vector<double> JointDist::conditional_a(std::size_t e) const {
  std::vector<double> c(size_a());
  CompensatedSum s;
  for (std::size_t a = 0; a < size_a(); ++a) s.add((*this)(a, e));
  const double pe = s.value();
  if (pe <= 0.0) return c;
  for (std::size_t a = 0; a < size_a(); ++a) c[a] = (*this)(a, e) / pe;
  return c;
}

JointDist JointDist::iid_extend(std::size_t n, std::size_t cell_limit) const {
  require(n >= 1, "iid extension length must be >= 1");
  Alphabet an = alphabet_a_.power(n, cell_limit);
  Alphabet en = alphabet_e_.power(n, cell_limit);
  checked_cells(an.size(), en.size(), cell_limit, "joint iid extension");
  const std::size_t na = size_a(), ne = size_e();
  // Row index of a^n is big-endian over the letters; likewise for e^n.
  std::vector<double> m(an.size() * en.size());
  std::vector<std::size_t> ad(n), ed(n);
  for (std::size_t ia = 0; ia < an.size(); ++ia) {
    std::size_t x = ia;
    for (std::size_t k = n; k-- > 0;) {
      ad[k] = x % na;
      x /= na;
    }
    for (std::size_t ie = 0; ie < en.size(); ++ie) {
      std::size_t y = ie;
      for (std::size_t k = n; k-- > 0;) {
        ed[k] = y % ne;
        y /= ne;
      }
      double v = 1.0;
      for (std::size_t k = 0; k < n; ++k) v *= (*this)(ad[k], ed[k]);
      m[ia * en.size() + ie] = v;
    }
  }
  return JointDist(std::move(an), std::move(en), std::move(m));
}

double joint_entropy(const JointDist& j) {
  CompensatedSum s;
  for (double m : j.mass()) s.add(-xlogx(m));
  return s.value();
}

double conditional_entropy(const JointDist& j) {
  return joint_entropy(j) - shannon_entropy(j.marginal_e());
}

}  // namespace secamp
