// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/distribution.hpp"

namespace secamp {

// An optimized exponent (nats per symbol). `arg` is the optimizing
// parameter: s, t, or the tilt s(R) for the divergence form.
struct ExponentResult {
  double value = 0.0;
  double arg = 0.0;
  bool diverges = false;        // objective unbounded above
  bool hypothesis_met = true;   // false when a formula is reported outside
                                // the range where it is claimed tight
  std::string method;
};

// 3 M^{s/(1+s)} exp(-H~_{1+s}/(1+s)).
double bound_thm1_at(const SubDist& p, std::size_t M, double s);

struct Thm1Curve {
  std::vector<double> s;
  std::vector<double> value;
  double min_value = 0.0;
  double min_s = 0.0;
  double at_s1 = 0.0;  // 3 sqrt(M) exp(-H_2/2)
};
Thm1Curve bound_thm1(const SubDist& p, std::size_t M,
                     std::size_t grid_points = 101);

// sqrt(M) exp(-H_2/2), the bound without smoothing.
double bound_no_smoothing(const SubDist& p, std::size_t M);
// exp(-H_2(A)) + P(A)^2/M.
double leftover_hash_rhs(const SubDist& p, std::size_t M);

// max_{0<=s<=1} (H~_{1+s} - sR)/(1+s).
ExponentResult exponent_universal(const SubDist& p, double R);
// min_{Q: H(Q) <= R} D(Q||P), solved along the tilted family P_{1+s}.
ExponentResult exponent_divergence_form(const SubDist& p, double R);
// 2 H~'_2 - H_2.
double critical_rate(const SubDist& p);

// max_{s>=0} H~_{1+s} - s R'.
ExponentResult exponent_cramer(const SubDist& p, double rp);
// The same objective restricted to s in [0,1].
ExponentResult exponent_cramer_restricted(const SubDist& p, double rp);

struct HrBounds {
  double lower = 0.0;  // log2 (H-R')^2 / (2 log^2(|A|+3))
  bool lower_applicable = false;
  double upper = 0.0;  // 12 log2 (H-R')^2/log^2(|A|-1), or 24 log2 (H-R')^2/log^2 3
  bool upper_applicable = false;
};
HrBounds hr_bounds(const SubDist& p, double rp);

// log sum_e P(e) (sum_a P(a|e)^{1/(1-t)})^{1-t}, for t < 1.
double phi_cond(const JointDist& j, double t);
// -log sum_{a,e} P(a,e)^{1+s} P(e)^{-s}.
double cond_renyi_tilde(const JointDist& j, double s);
// -alpha phi(1 - 1/alpha), so that phi(t) = -(1-t) H~^G_{1/(1-t)}.
double cond_renyi_tilde_gallager(const JointDist& j, double alpha);

// max_{0<=t<=1/2} -phi(t) - tR.
ExponentResult exponent_cond_phi(const JointDist& j, double R);
// max_{0<=s<=1} (H~_{1+s}(A|E) - sR)/2.
ExponentResult exponent_cond_pinsker(const JointDist& j, double R);
// (H~_2(A|E) - R)/2.
ExponentResult exponent_cond_no_smoothing(const JointDist& j, double R);

}  // namespace secamp
