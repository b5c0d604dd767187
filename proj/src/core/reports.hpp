// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/channel.hpp"
#include "core/distribution.hpp"
#include "core/hash_family.hpp"
#include "core/json_io.hpp"
#include "core/privacy_amp.hpp"

namespace secamp {

Json entropy_report(const SubDist& p, std::span<const double> orders);

// form: universal, divergence, cramer, cramer_restricted, specialized, hr,
// lemma (binary or ternary sources only).
Json exponent_report(const SubDist& p, std::string_view form, double R);
// phi, pinsker and no-smoothing lower bounds on the conditional exponent.
Json cond_exponent_report(const JointDist& j, double R);

Json pa_report(const SubDist& p, const FamilySpec& spec, const EnsembleMode& mode);

// p may be null (uniform input); otherwise it is extended i.i.d. to n letters.
Json wiretap_report(const Channel& wb, const Channel& we, const SubDist* p,
                    std::size_t M, std::size_t L, std::size_t n,
                    const EnsembleMode& mode);

Json intrinsic_report(const SubDist& p, std::uint32_t n, std::size_t M);

Json distill_report(const JointDist& pab, const JointDist& pae, std::size_t M,
                    std::size_t L, std::size_t n, const EnsembleMode& mode);

Json hash_check_report(const FamilySpec& spec);

struct FigureRow {
  double x = 0.0;
  std::string curve;
  double value = 0.0;
};

struct FigureData {
  int id = 0;
  std::vector<std::string> header;  // reference scalars, one per line
  std::vector<std::string> curves;  // upper curve first
  std::vector<FigureRow> rows;      // grouped by x, curves in order
};

inline constexpr std::size_t kDefaultFigurePoints = 101;

// Figures 2, 3 and 4 of the evaluation: exponent curves for a Bernoulli(0.2)
// source and for the two-input example channel with a = 0.05.
FigureData figure_data(int id, std::size_t points = kDefaultFigurePoints);
std::string figure_csv(const FigureData& f);
Json figure_json(const FigureData& f);

// The example channel W_0 = (a, 1-a), W_1 = (1-9a, 9a).
Channel example_channel(double a);
// h(1/2 - 5a) - (h(a) + h(9a))/2, the closed form quoted with the example.
double example_closed_form_information(double a);

}  // namespace secamp
