// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace secamp {

AdditiveGroup::AdditiveGroup(std::vector<unsigned> moduli)
    : moduli_(std::move(moduli)) {
  require(!moduli_.empty(), "group needs at least one factor");
  for (unsigned m : moduli_) {
    require(m >= 1, "group moduli must be >= 1");
    size_ = checked_cells(size_, m, kDefaultCellLimit, "group order");
  }
}

std::size_t AdditiveGroup::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, scale = 1;
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    const std::size_t m = moduli_[k];
    out += ((a % m + b % m) % m) * scale;
    a /= m;
    b /= m;
    scale *= m;
  }
  return out;
}

std::size_t AdditiveGroup::sub(std::size_t a, std::size_t b) const {
  std::size_t out = 0, scale = 1;
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    const std::size_t m = moduli_[k];
    out += ((a % m + m - b % m) % m) * scale;
    a /= m;
    b /= m;
    scale *= m;
  }
  return out;
}

AdditiveGroup AdditiveGroup::power(std::size_t n) const {
  require(n >= 1, "power must be >= 1");
  std::vector<unsigned> m;
  for (std::size_t i = 0; i < n; ++i)
    m.insert(m.end(), moduli_.begin(), moduli_.end());
  return AdditiveGroup(std::move(m));
}

namespace {

void check_stochastic(std::span<const double> m, std::size_t rows,
                      std::size_t cols) {
  require(m.size() == rows * cols, "channel matrix has the wrong shape");
  for (std::size_t x = 0; x < rows; ++x) {
    CompensatedSum s;
    for (std::size_t y = 0; y < cols; ++y) {
      const double v = m[x * cols + y];
      require(std::isfinite(v) && v >= 0.0,
              "channel entries must be finite and nonnegative");
      s.add(v);
    }
    require(std::fabs(s.value() - 1.0) <= kMassTolerance,
            "channel row " + std::to_string(x) + " does not sum to 1");
  }
}

}  // namespace

Channel::Channel(Alphabet input, Alphabet output, std::vector<double> matrix)
    : input_(std::move(input)), output_(std::move(output)),
      matrix_(std::move(matrix)) {
  checked_cells(input_.size(), output_.size(), kDefaultCellLimit,
                "channel matrix");
  check_stochastic(matrix_, input_.size(), output_.size());
}

Channel::Channel(std::size_t inputs, std::size_t outputs,
                 std::vector<double> matrix)
    : Channel(Alphabet::indexed(inputs), Alphabet::indexed(outputs),
              std::move(matrix)) {}

Channel Channel::additive(const AdditiveGroup& g, const SubDist& noise) {
  require(noise.size() == g.size(), "noise must live on the group");
  require(std::fabs(noise.total() - 1.0) <= kMassTolerance,
          "noise must be a probability distribution");
  const std::size_t n = g.size();
  checked_cells(n, n, kDefaultCellLimit, "additive channel");
  std::vector<double> m(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) m[x * n + z] = noise[g.sub(z, x)];
  Channel c(n, n, std::move(m));
  c.kind_ = Kind::additive;
  c.group_ = g;
  c.noise_ = noise;
  return c;
}

Channel Channel::general_additive(const AdditiveGroup& g, const JointDist& pxz) {
  require(pxz.size_a() == g.size(), "joint must have the group as first factor");
  const std::size_t n = g.size(), side = pxz.size_e();
  const std::size_t outs = checked_cells(n, side, kDefaultCellLimit,
                                         "general additive output");
  checked_cells(n, outs, kDefaultCellLimit, "general additive channel");
  std::vector<double> m(n * outs);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t e = 0; e < side; ++e)
        m[x * outs + z * side + e] = pxz(g.sub(z, x), e);
  Channel c(Alphabet::indexed(n),
            Alphabet::product(Alphabet::indexed(n), pxz.alphabet_e()),
            std::move(m));
  c.kind_ = Kind::general_additive;
  c.group_ = g;
  c.side_ = pxz;
  return c;
}

Channel Channel::power(std::size_t n, std::size_t cell_limit) const {
  require(n >= 1, "channel power must be >= 1");
  if (n == 1) return *this;
  if (kind_ == Kind::additive)
    return additive(group_->power(n), iid_extend(*noise_, n, cell_limit));
  if (kind_ == Kind::general_additive)
    return general_additive(group_->power(n), side_->iid_extend(n, cell_limit));
  const Alphabet in = input_.power(n, cell_limit);
  const Alphabet out = output_.power(n, cell_limit);
  checked_cells(in.size(), out.size(), cell_limit, "channel power");
  const std::size_t ni = inputs(), no = outputs();
  std::vector<double> m(in.size() * out.size());
  for (std::size_t x = 0; x < in.size(); ++x)
    for (std::size_t y = 0; y < out.size(); ++y) {
      double v = 1.0;
      std::size_t xr = x, yr = y;
      for (std::size_t k = 0; k < n && v > 0.0; ++k) {
        v *= (*this)(xr % ni, yr % no);
        xr /= ni;
        yr /= no;
      }
      m[x * out.size() + y] = v;
    }
  return Channel(in, out, std::move(m));
}

namespace {

void check_input(const Channel& w, const SubDist& p) {
  require(p.size() == w.inputs(),
          "input distribution does not match the channel input alphabet");
}

}  // namespace

SubDist output_distribution(const Channel& w, const SubDist& p) {
  check_input(w, p);
  std::vector<double> out(w.outputs());
  for (std::size_t y = 0; y < w.outputs(); ++y) {
    CompensatedSum s;
    for (std::size_t x = 0; x < w.inputs(); ++x) s.add(p[x] * w(x, y));
    out[y] = s.value();
  }
  return SubDist(w.output(), std::move(out));
}

double mutual_information(const SubDist& p, const Channel& w) {
  const SubDist q = output_distribution(w, p);
  CompensatedSum s;
  for (std::size_t x = 0; x < w.inputs(); ++x) {
    if (p[x] <= 0.0) continue;
    for (std::size_t y = 0; y < w.outputs(); ++y) {
      const double v = w(x, y);
      if (v > 0.0) s.add(p[x] * v * std::log(v / q[y]));
    }
  }
  return std::max(0.0, s.value());
}

double phi_channel(const Channel& w, const SubDist& p, double t) {
  require(t < 1.0, "phi requires t < 1", ErrorCode::domain);
  check_input(w, p);
  const double order = 1.0 / (1.0 - t);
  CompensatedSum outer;
  for (std::size_t y = 0; y < w.outputs(); ++y) {
    CompensatedSum inner;
    for (std::size_t x = 0; x < w.inputs(); ++x)
      inner.add(p[x] * pow0(w(x, y), order));
    outer.add(pow0(inner.value(), 1.0 - t));
  }
  return std::log(outer.value());
}

double psi_channel(const Channel& w, const SubDist& p, double t) {
  require(t > -1.0, "psi requires t > -1", ErrorCode::domain);
  const SubDist q = output_distribution(w, p);
  CompensatedSum outer;
  for (std::size_t y = 0; y < w.outputs(); ++y) {
    if (q[y] <= 0.0) continue;
    CompensatedSum inner;
    for (std::size_t x = 0; x < w.inputs(); ++x)
      inner.add(p[x] * pow0(w(x, y), 1.0 + t));
    outer.add(inner.value() * std::pow(q[y], -t));
  }
  return std::log(outer.value());
}

ExponentResult e_phi(double R, const Channel& w, const SubDist& p) {
  const auto o = maximize_scalar(
      [&](double t) { return t * R - phi_channel(w, p, t); }, 0.0, 0.5);
  return {o.value, o.arg, false, true, "grid1024+golden on t in [0,1/2]"};
}

ExponentResult e_psi(double R, const Channel& w, const SubDist& p) {
  const auto o = maximize_scalar(
      [&](double s) { return (s * R - psi_channel(w, p, s)) / (1.0 + s); }, 0.0,
      1.0);
  return {o.value, o.arg, false, true, "grid1024+golden on s in [0,1]"};
}

ExponentResult e_psi_pinsker(double R, const Channel& w, const SubDist& p) {
  const auto o = maximize_scalar(
      [&](double s) { return (s * R - psi_channel(w, p, s)) / 2.0; }, 0.0, 1.0);
  return {o.value, o.arg, false, true, "grid1024+golden on s in [0,1]"};
}

AdditiveIdentityReport additive_identities(const Channel& w, double t) {
  require(w.kind() != Channel::Kind::generic,
          "additive identities need an additive or general additive channel",
          ErrorCode::invalid_argument);
  require(t >= 0.0 && t < 1.0, "t must lie in [0,1)", ErrorCode::domain);
  const SubDist p = SubDist::uniform(w.input());
  const double s = t / (1.0 - t);
  const double lx = std::log(static_cast<double>(w.inputs()));
  AdditiveIdentityReport r;
  r.t = t;
  r.via_psi = std::exp((1.0 - t) * psi_channel(w, p, s));
  r.via_phi = std::exp(phi_channel(w, p, t));
  if (w.kind() == Channel::Kind::additive) {
    r.closed = std::exp(t * lx - (1.0 - t) * renyi_tilde(*w.noise(), s));
    r.closed_gallager = r.closed;
  } else {
    const JointDist& j = *w.side_joint();
    r.closed = std::exp(t * lx - (1.0 - t) * cond_renyi_tilde(j, s));
    r.closed_gallager = std::exp(
        t * lx - (1.0 - t) * cond_renyi_tilde_gallager(j, 1.0 / (1.0 - t)));
  }
  r.discrepancy = std::max({std::fabs(r.via_psi - r.via_phi),
                            std::fabs(r.via_psi - r.closed),
                            std::fabs(r.via_phi - r.closed)});
  r.gallager_discrepancy = std::fabs(r.via_phi - r.closed_gallager);
  return r;
}

HolderReport holder_ordering(const Channel& w, const SubDist& p,
                             std::span<const double> ts) {
  HolderReport r;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    require(t >= 0.0 && t <= 0.5, "t must lie in [0,1/2]", ErrorCode::domain);
    const double lhs = std::exp((1.0 - t) * psi_channel(w, p, t / (1.0 - t)));
    const double rhs = std::exp(phi_channel(w, p, t));
    const double gap = lhs - rhs;
    if (gap < r.min_gap) {
      r.min_gap = gap;
      r.worst_t = t;
    }
    // Equality cases (t = 0, additive channels) may round either way.
    if (gap < -1e-12 * std::max(1.0, rhs)) r.holds = false;
  }
  return r;
}

}  // namespace secamp
