// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

namespace {

void require_probability(const SubDist& p) {
  require(std::fabs(p.total() - 1.0) <= 1e-9,
          "distribution must have total mass 1");
}

ExponentResult from_optimum(const ScalarOptimum& o, std::string method) {
  ExponentResult r;
  r.value = o.value;
  r.arg = o.arg;
  r.method = std::move(method);
  return r;
}

}  // namespace

double bound_thm1_at(const SubDist& p, std::size_t M, double s) {
  require(M >= 1, "M must be >= 1");
  require(s >= 0.0 && s <= 1.0, "s must lie in [0,1]", ErrorCode::domain);
  const double lm = std::log(static_cast<double>(M));
  return 3.0 * std::exp((s * lm - renyi_tilde(p, s)) / (1.0 + s));
}

Thm1Curve bound_thm1(const SubDist& p, std::size_t M, std::size_t grid_points) {
  require(grid_points >= 2, "need at least two grid points");
  Thm1Curve c;
  c.s = linspace(0.0, 1.0, grid_points);
  c.value.reserve(grid_points);
  c.min_value = std::numeric_limits<double>::infinity();
  for (double s : c.s) {
    const double v = bound_thm1_at(p, M, s);
    c.value.push_back(v);
    if (v < c.min_value) {
      c.min_value = v;
      c.min_s = s;
    }
  }
  c.at_s1 = c.value.back();
  return c;
}

double bound_no_smoothing(const SubDist& p, std::size_t M) {
  require(M >= 1, "M must be >= 1");
  return std::sqrt(static_cast<double>(M)) * std::exp(-renyi_tilde(p, 1.0) / 2.0);
}

double leftover_hash_rhs(const SubDist& p, std::size_t M) {
  require(M >= 1, "M must be >= 1");
  return collision_mass(p) + p.total() * p.total() / static_cast<double>(M);
}

ExponentResult exponent_universal(const SubDist& p, double R) {
  require_probability(p);
  const auto o = maximize_scalar(
      [&](double s) { return (renyi_tilde(p, s) - s * R) / (1.0 + s); }, 0.0,
      1.0);
  return from_optimum(o, "grid1024+golden on s in [0,1]");
}

namespace {

// Number of symbols attaining the maximum mass.
std::size_t argmax_count(const SubDist& p) {
  const double m = p.max_mass();
  std::size_t k = 0;
  for (double x : p.mass())
    if (x >= m * (1.0 - 1e-12)) ++k;
  return k;
}

// Smallest s with H(P_{1+s}) <= R, by bisection; H(P_{1+s}) decreases in s.
double tilt_for_entropy(const SubDist& p, double R) {
  auto h = [&](double s) { return shannon_entropy(tilt(p, s)); };
  double lo = 0.0, hi = 1.0;
  while (h(hi) > R) {
    lo = hi;
    hi *= 2.0;
    require(hi < 1e12, "tilt parameter search did not converge",
            ErrorCode::internal);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > R ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ExponentResult exponent_divergence_form(const SubDist& p, double R) {
  require_probability(p);
  require(R >= 0.0, "rate must be nonnegative", ErrorCode::domain);
  ExponentResult r;
  r.method = "tilted family P_{1+s}, bisection on H(P_{1+s}) = R";
  const double H = shannon_entropy(p);
  if (R >= H) return r;
  const double k = static_cast<double>(argmax_count(p));
  if (R <= std::log(k)) {
    // Any Q on the argmax set with H(Q) = R is optimal.
    r.value = -std::log(p.max_mass()) - R;
    r.arg = std::numeric_limits<double>::infinity();
    return r;
  }
  const double s = tilt_for_entropy(p, R);
  r.arg = s;
  r.value = kl_divergence(tilt(p, s), p);
  return r;
}

double critical_rate(const SubDist& p) {
  require_probability(p);
  return 2.0 * renyi_tilde_derivative(p, 1.0) - renyi_tilde(p, 1.0);
}

ExponentResult exponent_cramer(const SubDist& p, double rp) {
  require_probability(p);
  ExponentResult r;
  r.method = "concave in s; bisection on dH~/ds = R'";
  const double H = shannon_entropy(p);
  if (rp >= H) return r;
  const double hmin = min_entropy(p);
  if (rp < hmin - 1e-12) {
    r.diverges = true;
    r.value = std::numeric_limits<double>::infinity();
    r.arg = std::numeric_limits<double>::infinity();
    return r;
  }
  auto slope = [&](double s) { return renyi_tilde_derivative(p, s) - rp; };
  double lo = 0.0, hi = 1.0;
  constexpr double kCap = 1e6;
  while (slope(hi) > 0.0 && hi < kCap) {
    lo = hi;
    hi *= 2.0;
  }
  if (slope(hi) > 0.0) {
    // R' at the min-entropy: the supremum is approached as s grows.
    r.arg = hi;
    r.value = renyi_tilde(p, hi) - hi * rp;
    r.hypothesis_met = false;
    return r;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  r.arg = 0.5 * (lo + hi);
  r.value = renyi_tilde(p, r.arg) - r.arg * rp;
  return r;
}

ExponentResult exponent_cramer_restricted(const SubDist& p, double rp) {
  require_probability(p);
  const auto o = maximize_scalar(
      [&](double s) { return renyi_tilde(p, s) - s * rp; }, 0.0, 1.0);
  return from_optimum(o, "grid1024+golden on s in [0,1]");
}

HrBounds hr_bounds(const SubDist& p, double rp) {
  require_probability(p);
  HrBounds b;
  const double gap = shannon_entropy(p) - rp;
  const double a = static_cast<double>(p.size());
  const double ln2 = std::log(2.0);
  const double slack = 1e-12;
  b.lower_applicable = gap >= -slack && gap <= std::log(a) + slack;
  const double l3 = std::log(a + 3.0);
  b.lower = ln2 * gap * gap / (2.0 * l3 * l3);
  if (p.size() == 2) {
    const double l = std::log(3.0);
    b.upper = 24.0 * ln2 * gap * gap / (l * l);
    b.upper_applicable = gap >= -slack && gap <= l / 24.0 + slack;
  } else if (p.size() >= 3) {
    const double l = std::log(a - 1.0);
    b.upper = 12.0 * ln2 * gap * gap / (l * l);
    b.upper_applicable = gap >= -slack && gap <= l / 12.0 + slack;
  }
  return b;
}

double phi_cond(const JointDist& j, double t) {
  require(t < 1.0, "phi requires t < 1", ErrorCode::domain);
  const double order = 1.0 / (1.0 - t);
  const SubDist pe = j.marginal_e();
  CompensatedSum outer;
  for (std::size_t e = 0; e < j.size_e(); ++e) {
    if (pe[e] <= 0.0) continue;
    CompensatedSum inner;
    for (std::size_t a = 0; a < j.size_a(); ++a)
      inner.add(pow0(j(a, e) / pe[e], order));
    outer.add(pe[e] * std::pow(inner.value(), 1.0 - t));
  }
  return std::log(outer.value());
}

double cond_renyi_tilde(const JointDist& j, double s) {
  require(s > -1.0, "order parameter s must exceed -1", ErrorCode::domain);
  const SubDist pe = j.marginal_e();
  CompensatedSum sum;
  for (std::size_t e = 0; e < j.size_e(); ++e) {
    if (pe[e] <= 0.0) continue;
    for (std::size_t a = 0; a < j.size_a(); ++a)
      sum.add(pow0(j(a, e), 1.0 + s) * std::pow(pe[e], -s));
  }
  return -std::log(sum.value());
}

double cond_renyi_tilde_gallager(const JointDist& j, double alpha) {
  require(alpha > 0.0, "order must be positive", ErrorCode::domain);
  return -alpha * phi_cond(j, 1.0 - 1.0 / alpha);
}

ExponentResult exponent_cond_phi(const JointDist& j, double R) {
  const auto o = maximize_scalar(
      [&](double t) { return -phi_cond(j, t) - t * R; }, 0.0, 0.5);
  return from_optimum(o, "grid1024+golden on t in [0,1/2]");
}

ExponentResult exponent_cond_pinsker(const JointDist& j, double R) {
  const auto o = maximize_scalar(
      [&](double s) { return (cond_renyi_tilde(j, s) - s * R) / 2.0; }, 0.0,
      1.0);
  return from_optimum(o, "grid1024+golden on s in [0,1]");
}

ExponentResult exponent_cond_no_smoothing(const JointDist& j, double R) {
  ExponentResult r;
  r.value = (cond_renyi_tilde(j, 1.0) - R) / 2.0;
  r.arg = 1.0;
  r.method = "closed form at s = 1";
  return r;
}

}  // namespace secamp
