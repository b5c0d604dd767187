// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/distill.hpp"

#include <algorithm>
#include <cmath>

#include "core/bounds.hpp"
#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

namespace {

void check_marginals(const JointDist& pab, const JointDist& pae) {
  require(pab.size_a() == pae.size_a(),
          "P^{AB} and P^{AE} must share Alice's alphabet");
  const SubDist a = pab.marginal_a(), b = pae.marginal_a();
  for (std::size_t i = 0; i < a.size(); ++i)
    require(std::fabs(a[i] - b[i]) <= kMassTolerance,
            "A-marginals of P^{AB} and P^{AE} disagree");
}

// P~(a, e) = P(-a, e), so that P(x - x', e) = P~(x' - x, e).
JointDist negate_first(const JointDist& j, const AdditiveGroup& g) {
  std::vector<double> m(j.mass().size());
  const std::size_t ne = j.size_e();
  for (std::size_t a = 0; a < j.size_a(); ++a)
    for (std::size_t e = 0; e < ne; ++e) m[a * ne + e] = j(g.sub(0, a), e);
  return JointDist(j.alphabet_a(), j.alphabet_e(), std::move(m));
}

}  // namespace

CorrelationTriple::CorrelationTriple(JointDist pab_, JointDist pae_,
                                     AdditiveGroup group_)
    : pab(std::move(pab_)), pae(std::move(pae_)), group(std::move(group_)) {
  check_marginals(pab, pae);
  require(group.size() == pab.size_a(),
          "group order must equal the size of Alice's alphabet",
          ErrorCode::invalid_argument);
}

CorrelationTriple::CorrelationTriple(JointDist pab_, JointDist pae_)
    : CorrelationTriple(pab_, pae_,
                        AdditiveGroup::cyclic(static_cast<unsigned>(pab_.size_a()))) {}

CorrelationTriple CorrelationTriple::power(std::size_t n) const {
  if (n == 1) return *this;
  return CorrelationTriple(pab.iid_extend(n), pae.iid_extend(n), group.power(n));
}

std::pair<Channel, Channel> channels_from_joint(const CorrelationTriple& tri) {
  return {Channel::general_additive(tri.group, negate_first(tri.pab, tri.group)),
          Channel::general_additive(tri.group, negate_first(tri.pae, tri.group))};
}

DistillReport run_distillation(const CorrelationTriple& tri, std::size_t M,
                               std::size_t L, std::size_t n,
                               const EnsembleMode& mode,
                               const HashFamily* family) {
  require(n >= 1, "n must be >= 1");
  DistillReport r;
  r.n = n;
  r.M = M;
  r.L = L;

  const auto [wb1, we1] = channels_from_joint(tri);
  const SubDist mix1 = SubDist::uniform(tri.group.size());
  r.rate_channels =
      mutual_information(mix1, wb1) - mutual_information(mix1, we1);
  r.rate_entropies = conditional_entropy(tri.pae) - conditional_entropy(tri.pab);

  const double la = std::log(static_cast<double>(tri.group.size()));
  for (double s : linspace(0.0, 1.0, 21)) {
    const double lhs = std::exp(phi_channel(wb1, mix1, -s));
    const double rhs = std::exp(-s * la - (1.0 + s) * cond_renyi_tilde_gallager(
                                                         tri.pab, 1.0 / (1.0 + s)));
    r.bob_identity_gap = std::max(r.bob_identity_gap, std::fabs(lhs - rhs));
  }

  const CorrelationTriple big = tri.power(n);
  for (double s : linspace(0.0, 1.0, 21)) {
    const double gap = std::fabs(cond_renyi_tilde(big.pae, s) -
                                 static_cast<double>(n) * cond_renyi_tilde(tri.pae, s));
    r.additivity_gap = std::max(r.additivity_gap, gap);
  }

  const auto [wb, we] = channels_from_joint(big);
  const SubDist mix = SubDist::uniform(big.group.size());
  std::unique_ptr<HashFamily> owned;
  if (!family) {
    owned = default_code_family(M, L);
    family = owned.get();
  }
  r.ensemble = random_code_ensemble(wb, we, mix, M, L, *family, mode);

  const double nd = static_cast<double>(n);
  const double lml = std::log(static_cast<double>(M) * static_cast<double>(L));
  const auto eo = minimize_scalar(
      [&](double s) {
        return s * lml - nd * s * la -
               nd * (1.0 + s) * cond_renyi_tilde_gallager(tri.pab, 1.0 / (1.0 + s));
      },
      0.0, 1.0);
  r.eps_display = 2.0 * std::exp(eo.value);
  const double ll = std::log(static_cast<double>(L));
  const auto dout = minimize_scalar(
      [&](double t) {
        return nd * t * la -
               nd * (1.0 - t) * cond_renyi_tilde_gallager(tri.pae, 1.0 / (1.0 - t)) -
               t * ll;
      },
      0.0, 0.5);
  r.d1_display = 6.0 * std::exp(dout.value);

  const double tol = 1e-12;
  r.ensemble_within = r.ensemble.eps_b.mean <= r.eps_display / 2.0 + tol &&
                      r.ensemble.d1.mean <= r.d1_display / 2.0 + tol;
  r.selected_within = r.ensemble.selected.found &&
                      r.ensemble.selected.eps_b <= r.eps_display + tol &&
                      r.ensemble.selected.d1 <= r.d1_display + tol;
  return r;
}

}  // namespace secamp
