// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "core/channel.hpp"
#include "core/hash_family.hpp"
#include "core/privacy_amp.hpp"

namespace secamp {

// (M, {Q_i}, {D_i}): encoder distributions over the channel input and a
// decoder assigning each of Bob's outputs a message, or kReject.
struct WiretapCode {
  static constexpr std::size_t kReject = static_cast<std::size_t>(-1);

  std::size_t M = 0;
  std::vector<std::vector<double>> encoders;  // M rows over the input alphabet
  std::vector<std::size_t> decoder;           // per Bob output

  void validate(std::size_t inputs, std::size_t bob_outputs) const;
};

// (1/M) sum_i W^B_{Q_i}(D_i^c); rejected outputs count as errors.
double error_prob(const WiretapCode& code, const Channel& wb);
// sum_{i,e} |W^E_Phi(e)/M - W^E_{Q_i}(e)/M|.
double eve_distinguishability(const WiretapCode& code, const Channel& we);

// Maximum-likelihood decoder of a codebook: for each output, the index of
// the most likely codeword, ties to the lowest index. Outputs that no
// codeword can produce map to kReject.
std::vector<std::size_t> ml_decoder(const std::vector<std::size_t>& codebook,
                                    const Channel& wb);

// Codebook y_1..y_{ML} and a balanced hash f : {0..ML-1} -> {0..M-1}. Q_i is
// uniform over {y_a : f(a) = i}; Bob decodes a by ML and outputs f(a).
WiretapCode hashed_code(const std::vector<std::size_t>& codebook,
                        const HashTable& f, std::size_t M, const Channel& wb);

struct SelectedCode {
  bool found = false;
  std::vector<std::size_t> codebook;
  HashTable table;
  double eps_b = 0.0;
  double d1 = 0.0;
};

struct WiretapEnsembleReport {
  std::size_t M = 0, L = 0;
  EnsembleEstimate eps_b, d1;
  bool conditions_checked = false;  // Conditions 1 and 2 verified on the family
  double bound_eps = 0.0;    // min_{0<=t<=1} (ML)^t e^{phi(-t|W^B,p)}
  double bound_eps_t = 0.0;
  double bound_d1 = 0.0;     // 3 min_{0<=t<=1/2} e^{phi(t|W^E,p)} / L^t
  double bound_d1_t = 0.0;
  SelectedCode selected;     // eps <= 2 E eps and d1 <= 2 E d1
};

double gallager_bound(const Channel& wb, const SubDist& p, std::size_t codewords,
                      double* argmin_t = nullptr);
double eve_bound(const Channel& we, const SubDist& p, std::size_t L,
                 double* argmin_t = nullptr);

// Random-coding ensemble: ML codewords i.i.d. from p, hash drawn from
// `family` (input ML, output M). Exact mode enumerates every codebook
// (weighted by its probability) and every seed.
WiretapEnsembleReport random_code_ensemble(const Channel& wb, const Channel& we,
                                           const SubDist& p, std::size_t M,
                                           std::size_t L,
                                           const HashFamily& family,
                                           const EnsembleMode& mode);

// Hash family used by the random-coding construction when none is given:
// Toeplitz when ML and M are powers of one prime, identity when L = 1,
// otherwise every balanced function.
std::unique_ptr<HashFamily> default_code_family(std::size_t M, std::size_t L);

// A linear code C_1 = {uG} in F_q^n; inputs are indexed big-endian.
class LinearCode {
 public:
  LinearCode(unsigned q, unsigned n, std::vector<std::vector<unsigned>> generator);
  static LinearCode full(unsigned q, unsigned n);

  unsigned q() const noexcept { return field_.order(); }
  unsigned n() const noexcept { return n_; }
  unsigned dimension() const noexcept { return static_cast<unsigned>(generator_.size()); }
  std::size_t size() const noexcept { return codewords_.size(); }
  // Codeword of message u (u indexed big-endian in F_q^k).
  std::size_t codeword(std::size_t u) const { return codewords_[u]; }
  const std::vector<std::size_t>& codewords() const noexcept { return codewords_; }

 private:
  FiniteField field_;
  unsigned n_;
  std::vector<std::vector<unsigned>> generator_;
  std::vector<std::size_t> codewords_;
};

// C_2(X) = {uG : f_X(u) = 0} for the Toeplitz hash f_X on F_q^k -> F_q^m; the
// coset of u is labelled by f_X(u).
std::vector<std::size_t> sample_subcode(const LinearCode& c1,
                                        const ToeplitzFamily& family,
                                        std::uint64_t seed);
WiretapCode coset_code(const LinearCode& c1, const ToeplitzFamily& family,
                       std::uint64_t seed, const Channel& wb);

struct Condition4Report {
  bool pass = false;
  double max_inclusion = 0.0;  // max over x != 0 in C_1 of Pr[x in C_2(X)]
  double threshold = 0.0;      // L / |C_1|
};
Condition4Report check_condition4(const LinearCode& c1,
                                  const ToeplitzFamily& family);

struct CosetEnsembleReport {
  std::size_t M = 0, L = 0;
  EnsembleEstimate eps_b, d1;
  Condition4Report condition4;
  double bound_d1 = 0.0;  // 3 min_t e^{phi(t|W^E, P_mix,C1)} / L^t
  double bound_d1_t = 0.0;
  // 3 min_t |X|^t e^{-(1-t) H~_{1/(1-t)}} / L^t for additive and general
  // additive Eve channels.
  std::optional<double> bound_structured;
};
// Subcodes of size L = q^{k-m} sampled from the Toeplitz family.
CosetEnsembleReport coset_ensemble(const LinearCode& c1, unsigned m,
                                   const Channel& wb, const Channel& we,
                                   const EnsembleMode& mode);

}  // namespace secamp
