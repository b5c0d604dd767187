// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>

#include "core/channel.hpp"
#include "core/wiretap.hpp"

namespace secamp {

// Alice's A with Bob's B and Eve's E; A carries a group structure.
struct CorrelationTriple {
  JointDist pab;
  JointDist pae;
  AdditiveGroup group;

  CorrelationTriple(JointDist pab, JointDist pae, AdditiveGroup group);
  CorrelationTriple(JointDist pab, JointDist pae);  // cyclic group on A

  CorrelationTriple power(std::size_t n) const;
};

// W^B_x(x', b) = P^{AB}(x - x', b) and W^E_x(x', e) = P^{AE}(x - x', e), with
// Alice's public message x' as the first output coordinate.
std::pair<Channel, Channel> channels_from_joint(const CorrelationTriple& tri);

struct DistillReport {
  std::size_t n = 1, M = 0, L = 0;
  WiretapEnsembleReport ensemble;
  // 2 min_s (ML)^s |A|^{-ns} e^{-n(1+s) H~_{1/(1+s)}(A|B)}
  double eps_display = 0.0;
  // 6 min_t |A|^{nt} e^{-n(1-t) H~_{1/(1-t)}(A|E)} / L^t
  double d1_display = 0.0;
  bool ensemble_within = false;  // averages within half of these
  bool selected_within = false;  // the selected code within the displays
  double rate_channels = 0.0;    // I(mix:W^B) - I(mix:W^E), per letter
  double rate_entropies = 0.0;   // H(A|E) - H(A|B)
  // max over an s grid of |e^{phi(-s|W^B,mix)} - |A|^{-s} e^{-(1+s)H~}|
  double bob_identity_gap = 0.0;
  // max over the grid of |H~_{1+s}(A^n|E^n) - n H~_{1+s}(A|E)|
  double additivity_gap = 0.0;
};

// Codes over n uses built with p uniform on A^n; `family` maps ML indices
// to M messages (a default is chosen when null).
DistillReport run_distillation(const CorrelationTriple& tri, std::size_t M,
                               std::size_t L, std::size_t n,
                               const EnsembleMode& mode,
                               const HashFamily* family = nullptr);

}  // namespace secamp
