// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/wiretap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

void WiretapCode::validate(std::size_t inputs, std::size_t bob_outputs) const {
  require(M >= 1, "code needs at least one message");
  require(encoders.size() == M, "code needs one encoder per message");
  for (const auto& q : encoders) {
    require(q.size() == inputs, "encoder does not match the channel input");
    CompensatedSum s;
    for (double v : q) {
      require(v >= 0.0, "encoder masses must be nonnegative");
      s.add(v);
    }
    require(std::fabs(s.value() - 1.0) <= 1e-9,
            "encoder distributions must sum to 1");
  }
  require(decoder.size() == bob_outputs,
          "decoder does not cover the receiver's output alphabet");
  for (std::size_t d : decoder)
    require(d == kReject || d < M, "decoder message out of range");
}

double error_prob(const WiretapCode& code, const Channel& wb) {
  code.validate(wb.inputs(), wb.outputs());
  CompensatedSum err;
  for (std::size_t i = 0; i < code.M; ++i)
    for (std::size_t x = 0; x < wb.inputs(); ++x) {
      const double q = code.encoders[i][x];
      if (q <= 0.0) continue;
      for (std::size_t y = 0; y < wb.outputs(); ++y)
        if (code.decoder[y] != i) err.add(q * wb(x, y));
    }
  return err.value() / static_cast<double>(code.M);
}

double eve_distinguishability(const WiretapCode& code, const Channel& we) {
  require(code.encoders.size() == code.M && code.M >= 1, "malformed code");
  for (const auto& q : code.encoders)
    require(q.size() == we.inputs(), "encoder does not match Eve's input");
  const std::size_t ne = we.outputs();
  const double Md = static_cast<double>(code.M);
  std::vector<std::vector<double>> wq(code.M, std::vector<double>(ne));
  std::vector<CompensatedSum> avg(ne);
  for (std::size_t i = 0; i < code.M; ++i)
    for (std::size_t e = 0; e < ne; ++e) {
      CompensatedSum s;
      for (std::size_t x = 0; x < we.inputs(); ++x)
        s.add(code.encoders[i][x] * we(x, e));
      wq[i][e] = s.value();
      avg[e].add(s.value() / Md);
    }
  CompensatedSum d;
  for (std::size_t i = 0; i < code.M; ++i)
    for (std::size_t e = 0; e < ne; ++e)
      d.add(std::fabs(avg[e].value() - wq[i][e]) / Md);
  return d.value();
}

std::vector<std::size_t> ml_decoder(const std::vector<std::size_t>& codebook,
                                    const Channel& wb) {
  require(!codebook.empty(), "codebook must not be empty");
  for (std::size_t x : codebook)
    require(x < wb.inputs(), "codeword outside the channel input alphabet");
  std::vector<std::size_t> out(wb.outputs(), WiretapCode::kReject);
  for (std::size_t y = 0; y < wb.outputs(); ++y) {
    double best = 0.0;
    for (std::size_t a = 0; a < codebook.size(); ++a) {
      const double v = wb(codebook[a], y);
      if (v > best) {
        best = v;
        out[y] = a;
      }
    }
  }
  return out;
}

namespace {

WiretapCode build_hashed(const std::vector<std::size_t>& codebook,
                         const std::vector<std::size_t>& ml, const HashTable& f,
                         std::size_t M, std::size_t inputs) {
  require(f.size() == codebook.size(),
          "hash input size must equal the codebook size");
  WiretapCode code;
  code.M = M;
  code.encoders.assign(M, std::vector<double>(inputs, 0.0));
  std::vector<std::size_t> sizes(M, 0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    require(f[a] < M, "hash output out of range");
    ++sizes[f[a]];
  }
  for (std::size_t i = 0; i < M; ++i)
    require(sizes[i] > 0, "every message needs a nonempty preimage");
  for (std::size_t a = 0; a < f.size(); ++a)
    code.encoders[f[a]][codebook[a]] += 1.0 / static_cast<double>(sizes[f[a]]);
  code.decoder.resize(ml.size());
  for (std::size_t y = 0; y < ml.size(); ++y)
    code.decoder[y] = ml[y] == WiretapCode::kReject ? WiretapCode::kReject
                                                    : f[ml[y]];
  return code;
}

// Draws an index from p by inversion.
std::size_t draw(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform01() * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
}

void finish_mean(EnsembleEstimate& est, const std::vector<double>& v,
                 const std::vector<double>* weights) {
  CompensatedSum s, s2, w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double wi = weights ? (*weights)[i] : 1.0;
    s.add(wi * v[i]);
    s2.add(wi * v[i] * v[i]);
    w.add(wi);
  }
  est.members = v.size();
  est.mean = s.value() / w.value();
  if (!weights && v.size() >= 2) {
    const double n = static_cast<double>(v.size());
    const double var =
        std::max(0.0, (s2.value() - n * est.mean * est.mean) / (n - 1.0));
    est.stderr_ = std::sqrt(var / n);
  }
}

}  // namespace

WiretapCode hashed_code(const std::vector<std::size_t>& codebook,
                        const HashTable& f, std::size_t M, const Channel& wb) {
  return build_hashed(codebook, ml_decoder(codebook, wb), f, M, wb.inputs());
}

double gallager_bound(const Channel& wb, const SubDist& p, std::size_t codewords,
                      double* argmin_t) {
  const double ln = std::log(static_cast<double>(codewords));
  const auto o = minimize_scalar(
      [&](double t) { return t * ln + phi_channel(wb, p, -t); }, 0.0, 1.0);
  if (argmin_t) *argmin_t = o.arg;
  return std::exp(o.value);
}

double eve_bound(const Channel& we, const SubDist& p, std::size_t L,
                 double* argmin_t) {
  const double ll = std::log(static_cast<double>(L));
  const auto o = minimize_scalar(
      [&](double t) { return phi_channel(we, p, t) - t * ll; }, 0.0, 0.5);
  if (argmin_t) *argmin_t = o.arg;
  return 3.0 * std::exp(o.value);
}

WiretapEnsembleReport random_code_ensemble(const Channel& wb, const Channel& we,
                                           const SubDist& p, std::size_t M,
                                           std::size_t L,
                                           const HashFamily& family,
                                           const EnsembleMode& mode) {
  require(M >= 1 && L >= 1, "M and L must be >= 1");
  require(wb.inputs() == we.inputs(),
          "Bob's and Eve's channels must share the input alphabet");
  require(p.size() == wb.inputs(), "input distribution does not match channels");
  require(std::fabs(p.total() - 1.0) <= 1e-9, "input distribution must sum to 1");
  const std::size_t N = checked_cells(M, L, kDefaultCellLimit, "codebook size");
  require(family.input_size() == N && family.output_size() == M,
          "hash family must map ML codeword indices to M messages");

  WiretapEnsembleReport r;
  r.M = M;
  r.L = L;
  if (family.seed_count()) {
    try {
      const auto u2 = check_universal2(family);
      const auto bal = check_balanced(family);
      require(u2.pass, "hash family is not universal2");
      require(bal.pass, "hash family has unbalanced preimages");
      r.conditions_checked = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::size_limit) throw;
    }
  }
  r.bound_eps = gallager_bound(wb, p, N, &r.bound_eps_t);
  r.bound_d1 = eve_bound(we, p, L, &r.bound_d1_t);

  const std::size_t X = wb.inputs();
  const double cost =
      static_cast<double>(N) + static_cast<double>(M * X);
  std::vector<double> eps, d1, weight;
  std::vector<std::vector<std::size_t>> books;
  std::vector<HashTable> tables;

  if (mode.kind == EnsembleMode::Kind::exact) {
    const std::uint64_t seeds = family.require_enumerable("exact wiretap ensemble");
    const std::size_t nbooks =
        checked_power(X, N, static_cast<std::size_t>(kExactEvaluationLimit),
                      "codebook enumeration");
    const double members = static_cast<double>(nbooks) * static_cast<double>(seeds);
    require(members * cost <= kExactEvaluationLimit,
            "exact wiretap ensemble exceeds the evaluation limit; use Monte "
            "Carlo mode",
            ErrorCode::size_limit);
    tables.reserve(seeds);
    for (std::uint64_t s = 0; s < seeds; ++s) tables.push_back(family.table(s));
    const std::size_t total = nbooks * seeds;
    eps.resize(total);
    d1.resize(total);
    weight.resize(total);
    run_chunks(nbooks, [&](std::uint64_t b) {
      std::vector<std::size_t> book(N);
      std::uint64_t rest = b;
      double w = 1.0;
      for (std::size_t k = N; k-- > 0;) {
        book[k] = rest % X;
        rest /= X;
        w *= p[book[k]];
      }
      const auto ml = ml_decoder(book, wb);
      for (std::uint64_t s = 0; s < seeds; ++s) {
        const std::size_t idx = b * seeds + s;
        weight[idx] = w;
        if (w <= 0.0) continue;
        const WiretapCode code = build_hashed(book, ml, tables[s], M, X);
        eps[idx] = error_prob(code, wb);
        d1[idx] = eve_distinguishability(code, we);
      }
    });
    finish_mean(r.eps_b, eps, &weight);
    finish_mean(r.d1, d1, &weight);
    r.eps_b.exact = r.d1.exact = true;
  } else {
    require(mode.samples >= 2, "Monte Carlo mode needs at least 2 samples");
    std::vector<double> cdf(X);
    CompensatedSum c;
    for (std::size_t x = 0; x < X; ++x) {
      c.add(p[x]);
      cdf[x] = c.value();
    }
    Rng rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
      std::vector<std::size_t> book(N);
      for (auto& y : book) y = draw(cdf, rng);
      HashTable t = family.sample(rng);
      const WiretapCode code = hashed_code(book, t, M, wb);
      eps.push_back(error_prob(code, wb));
      d1.push_back(eve_distinguishability(code, we));
      books.push_back(std::move(book));
      tables.push_back(std::move(t));
    }
    finish_mean(r.eps_b, eps, nullptr);
    finish_mean(r.d1, d1, nullptr);
    r.eps_b.exact = r.d1.exact = false;
  }

  // Markov selection: a member with both figures at most twice the average.
  const double tol = 1e-12;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!weight.empty() && weight[i] <= 0.0) continue;
    if (eps[i] <= 2.0 * r.eps_b.mean + tol && d1[i] <= 2.0 * r.d1.mean + tol) {
      r.selected.found = true;
      r.selected.eps_b = eps[i];
      r.selected.d1 = d1[i];
      if (mode.kind == EnsembleMode::Kind::exact) {
        const std::size_t seeds = tables.size();
        std::uint64_t rest = i / seeds;
        r.selected.codebook.assign(N, 0);
        for (std::size_t k = N; k-- > 0;) {
          r.selected.codebook[k] = rest % X;
          rest /= X;
        }
        r.selected.table = tables[i % seeds];
      } else {
        r.selected.codebook = books[i];
        r.selected.table = tables[i];
      }
      break;
    }
  }
  return r;
}

LinearCode::LinearCode(unsigned q, unsigned n,
                       std::vector<std::vector<unsigned>> generator)
    : field_(q), n_(n), generator_(std::move(generator)) {
  require(n >= 1, "code length must be >= 1");
  require(!generator_.empty(), "generator needs at least one row");
  const std::size_t space = checked_power(q, n, kDefaultCellLimit, "code space");
  (void)space;
  const std::size_t count =
      checked_power(q, generator_.size(), kDefaultCellLimit, "code size");
  for (const auto& row : generator_) {
    require(row.size() == n, "generator rows must have length n");
    for (unsigned v : row) require(v < q, "generator entry outside the field");
  }
  const unsigned k = dimension();
  codewords_.reserve(count);
  std::set<std::size_t> seen;
  for (std::size_t u = 0; u < count; ++u) {
    const auto ud = to_digits(u, q, k);
    std::vector<unsigned> x(n, 0);
    for (unsigned j = 0; j < k; ++j)
      for (unsigned c = 0; c < n; ++c)
        x[c] = field_.add(x[c], field_.mul(ud[j], generator_[j][c]));
    const auto idx = static_cast<std::size_t>(from_digits(x, q));
    require(seen.insert(idx).second,
            "generator rows must be linearly independent");
    codewords_.push_back(idx);
  }
}

LinearCode LinearCode::full(unsigned q, unsigned n) {
  std::vector<std::vector<unsigned>> g(n, std::vector<unsigned>(n, 0));
  for (unsigned i = 0; i < n; ++i) g[i][i] = 1;
  return LinearCode(q, n, std::move(g));
}

namespace {

void check_coset_family(const LinearCode& c1, const ToeplitzFamily& family) {
  require(family.q() == c1.q() && family.k() == c1.dimension(),
          "subcode sampler must act on the message space of C_1");
}

}  // namespace

std::vector<std::size_t> sample_subcode(const LinearCode& c1,
                                        const ToeplitzFamily& family,
                                        std::uint64_t seed) {
  check_coset_family(c1, family);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < c1.size(); ++u)
    if (family.eval(seed, u) == 0) out.push_back(c1.codeword(u));
  return out;
}

WiretapCode coset_code(const LinearCode& c1, const ToeplitzFamily& family,
                       std::uint64_t seed, const Channel& wb) {
  check_coset_family(c1, family);
  require(wb.inputs() == checked_power(c1.q(), c1.n(), kDefaultCellLimit,
                                       "code space"),
          "channel input must be F_q^n");
  return hashed_code(c1.codewords(), family.table(seed), family.output_size(),
                     wb);
}

Condition4Report check_condition4(const LinearCode& c1,
                                  const ToeplitzFamily& family) {
  check_coset_family(c1, family);
  const std::uint64_t seeds = family.require_enumerable("condition 4 check");
  std::vector<std::uint64_t> hits(c1.size(), 0);
  for (std::uint64_t s = 0; s < seeds; ++s)
    for (std::size_t u = 1; u < c1.size(); ++u)
      if (family.eval(s, u) == 0) ++hits[u];
  Condition4Report r;
  const double L = static_cast<double>(c1.size()) /
                   static_cast<double>(family.output_size());
  r.threshold = L / static_cast<double>(c1.size());
  for (std::size_t u = 1; u < c1.size(); ++u)
    r.max_inclusion = std::max(
        r.max_inclusion, static_cast<double>(hits[u]) / static_cast<double>(seeds));
  r.pass = r.max_inclusion <= r.threshold + 1e-12;
  return r;
}

CosetEnsembleReport coset_ensemble(const LinearCode& c1, unsigned m,
                                   const Channel& wb, const Channel& we,
                                   const EnsembleMode& mode) {
  require(wb.inputs() == we.inputs(),
          "Bob's and Eve's channels must share the input alphabet");
  const ToeplitzFamily family(c1.q(), c1.dimension(), m);
  CosetEnsembleReport r;
  r.M = family.output_size();
  r.L = c1.size() / r.M;
  r.condition4 = check_condition4(c1, family);

  const auto ml = ml_decoder(c1.codewords(), wb);
  const std::size_t X = wb.inputs();
  auto member = [&](const HashTable& t) {
    const WiretapCode code = build_hashed(c1.codewords(), ml, t, r.M, X);
    return std::pair{error_prob(code, wb), eve_distinguishability(code, we)};
  };
  r.eps_b = ensemble_average(
      family, mode, [&](const HashTable& t) { return member(t).first; },
      static_cast<double>(X));
  r.d1 = ensemble_average(
      family, mode, [&](const HashTable& t) { return member(t).second; },
      static_cast<double>(X));

  std::vector<double> mix(X, 0.0);
  for (std::size_t x : c1.codewords()) mix[x] = 1.0 / static_cast<double>(c1.size());
  r.bound_d1 = eve_bound(we, SubDist(std::move(mix)), r.L, &r.bound_d1_t);

  if (we.kind() != Channel::Kind::generic) {
    const double ll = std::log(static_cast<double>(r.L));
    const auto o = minimize_scalar(
        [&](double t) {
          return std::log(additive_identities(we, t).closed_gallager) - t * ll;
        },
        0.0, 0.5);
    r.bound_structured = 3.0 * std::exp(o.value);
  }
  return r;
}

namespace {

// (q, e) with n = q^e for a prime q, if any.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t q = 2;
  while (n % q != 0) ++q;
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::pair{static_cast<unsigned>(q), e};
}

}  // namespace

std::unique_ptr<HashFamily> default_code_family(std::size_t M, std::size_t L) {
  require(M >= 1 && L >= 1, "M and L must be >= 1");
  const std::size_t N = checked_cells(M, L, kDefaultCellLimit, "codebook size");
  if (L == 1) return std::make_unique<TableFamily>(TableFamily::identity(N));
  if (M == 1)
    return std::make_unique<TableFamily>(TableFamily::constant(N, 1));
  const auto pn = prime_power(N), pm = prime_power(M);
  if (pn && pm && pn->first == pm->first)
    return std::make_unique<ToeplitzFamily>(pn->first, pn->second, pm->second);
  return std::make_unique<TableFamily>(TableFamily::all_balanced(N, M));
}

}  // namespace secamp
