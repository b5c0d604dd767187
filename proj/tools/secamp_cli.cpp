// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "secamp/secamp.h"

namespace {

constexpr std::uintmax_t kMaxInputBytes = 64u << 20;

// Exit codes: 0 ok, 2 validation or parse, 3 size limit, 1 internal.
int exit_code(secamp_status s) {
  switch (s) {
    case SECAMP_OK:
      return 0;
    case SECAMP_ERR_SIZE_LIMIT:
      return 3;
    case SECAMP_ERR_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

struct Failure {
  int code;
  std::string message;
};

void check(secamp_status s) {
  if (s != SECAMP_OK) throw Failure{exit_code(s), secamp_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot open '" + path + "'"};
  in.seekg(0, std::ios::end);
  const auto size = static_cast<std::uintmax_t>(in.tellg());
  if (size > kMaxInputBytes)
    throw Failure{3, "'" + path + "' exceeds the " + std::to_string(kMaxInputBytes >> 20) +
                         " MiB input limit"};
  in.seekg(0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Dist = std::unique_ptr<secamp_dist, Deleter<secamp_dist, secamp_dist_free>>;
using Joint = std::unique_ptr<secamp_joint, Deleter<secamp_joint, secamp_joint_free>>;
using Chan = std::unique_ptr<secamp_channel, Deleter<secamp_channel, secamp_channel_free>>;
using Text = std::unique_ptr<char, Deleter<char, secamp_string_free>>;

Dist load_dist(const std::string& path) {
  secamp_dist* p = nullptr;
  check(secamp_dist_from_json(read_file(path).c_str(), path.c_str(), &p));
  return Dist(p);
}

Joint load_joint(const std::string& path) {
  secamp_joint* j = nullptr;
  check(secamp_joint_from_json(read_file(path).c_str(), path.c_str(), &j));
  return Joint(j);
}

Chan load_channel(const std::string& path) {
  secamp_channel* w = nullptr;
  check(secamp_channel_from_json(read_file(path).c_str(), path.c_str(), &w));
  return Chan(w);
}

struct Common {
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
};

struct Ensemble {
  std::string mode = "exact";
  std::uint64_t samples = 10000;
};

secamp_mode mode_of(const Ensemble& e, const Common& c) {
  return secamp_mode{e.mode == "mc" ? 1 : 0, c.seed, e.samples};
}

struct Family {
  std::string kind = "toeplitz";
  unsigned q = 2, k = 0, m = 0;
  std::size_t inputs = 0, outputs = 0;

  secamp_family view() const { return {kind.c_str(), q, k, m, inputs, outputs}; }
};

void add_common(CLI::App* sub, Common& c, bool csv) {
  sub->add_option("--out", c.out, "Write the result to this file instead of stdout");
  sub->add_option("--seed", c.seed, "Seed for Monte Carlo draws");
  if (csv)
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  else
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json"}));
}

void add_ensemble(CLI::App* sub, Ensemble& e) {
  sub->add_option("--mode", e.mode, "exact enumeration or Monte Carlo")
      ->check(CLI::IsMember({"exact", "mc"}));
  sub->add_option("--samples", e.samples, "Monte Carlo sample count")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100'000'000}));
}

void add_family(CLI::App* sub, Family& f) {
  sub->add_option("--family", f.kind, "Hash family")
      ->check(CLI::IsMember({"toeplitz", "fully-random", "balanced", "identity"}));
  sub->add_option("--q", f.q, "Field order (toeplitz)");
  sub->add_option("--k", f.k, "Input length over F_q (toeplitz)");
  sub->add_option("--m", f.m, "Output length over F_q (toeplitz)");
  sub->add_option("--inputs", f.inputs, "Input set size");
  sub->add_option("--outputs", f.outputs, "Output set size");
}

void write(const Common& c, const char* text) {
  if (c.out.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(c.out, std::ios::binary);
  if (!out) throw Failure{2, "cannot write '" + c.out + "'"};
  out << text;
  if (!out) throw Failure{1, "write to '" + c.out + "' failed"};
}

// Runs a report call that fills a malloc'd string and writes the result.
template <typename Call>
void emit(const Common& c, Call&& call) {
  char* text = nullptr;
  const secamp_status s = call(&text);
  Text owned(text);
  check(s);
  write(c, owned.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy amplification, wiretap and key distillation calculator"};
  app.set_version_flag("--version", secamp_version());
  app.require_subcommand(1);

  Common common;
  Ensemble ens;
  Family fam;
  std::string dist_path, joint_path, wb_path, we_path, p_path, pab_path, pae_path;
  std::string form = "universal";
  std::vector<double> orders;
  double rate = 0.0;
  int figure_id = 0;
  std::size_t points = 101, M = 2, L = 2, n = 1;
  std::uint32_t n32 = 1;

  auto* entropy = app.add_subcommand("entropy", "Entropies of a distribution");
  entropy->add_option("--dist", dist_path, "Distribution JSON")->required();
  entropy->add_option("--s", orders, "Orders 1+s at which to report H~_{1+s}");
  add_common(entropy, common, false);

  auto* exponent = app.add_subcommand("exponent", "Exponent at a rate");
  auto* dist_opt = exponent->add_option("--dist", dist_path, "Distribution JSON");
  auto* joint_opt = exponent->add_option("--joint", joint_path, "Joint distribution JSON (cond)");
  dist_opt->excludes(joint_opt);
  exponent->add_option("--R", rate, "Rate in nats")->required();
  exponent->add_option("--form", form, "Exponent form")
      ->check(CLI::IsMember({"universal", "divergence", "cramer", "cramer_restricted",
                             "specialized", "hr", "lemma", "cond"}));
  add_common(exponent, common, false);

  auto* figure = app.add_subcommand("figure", "Curve data for figures 2, 3 and 4");
  figure->add_option("--id", figure_id, "Figure number")->required()->check(CLI::IsMember({2, 3, 4}));
  figure->add_option("--points", points, "Sweep points")->check(CLI::Range(2, 100000));
  add_common(figure, common, true);
  common.format = "csv";

  auto* simulate = app.add_subcommand("simulate", "Ensemble simulations");
  simulate->require_subcommand(1);
  auto* pa = simulate->add_subcommand("pa", "Privacy amplification ensemble");
  pa->add_option("--dist", dist_path, "Distribution JSON")->required();
  add_family(pa, fam);
  add_ensemble(pa, ens);
  add_common(pa, common, false);
  auto* wiretap = simulate->add_subcommand("wiretap", "Random-coding wiretap ensemble");
  wiretap->add_option("--wb", wb_path, "Receiver channel JSON")->required();
  wiretap->add_option("--we", we_path, "Eavesdropper channel JSON")->required();
  wiretap->add_option("--p", p_path, "Input distribution JSON (default uniform)");
  wiretap->add_option("--M", M, "Messages")->check(CLI::PositiveNumber);
  wiretap->add_option("--L", L, "Sacrificed randomness")->check(CLI::PositiveNumber);
  wiretap->add_option("--n", n, "Channel uses")->check(CLI::PositiveNumber);
  add_ensemble(wiretap, ens);
  add_common(wiretap, common, false);

  auto* intrinsic = app.add_subcommand("intrinsic", "Source-specialized uniform generation");
  intrinsic->add_option("--dist", dist_path, "Distribution JSON")->required();
  intrinsic->add_option("--n", n32, "Block length")->check(CLI::PositiveNumber);
  intrinsic->add_option("--M", M, "Output cells")->check(CLI::PositiveNumber);
  add_common(intrinsic, common, false);

  auto* distill = app.add_subcommand("distill", "One-way key distillation");
  distill->add_option("--pab", pab_path, "P^{AB} JSON")->required();
  distill->add_option("--pae", pae_path, "P^{AE} JSON")->required();
  distill->add_option("--M", M, "Messages")->check(CLI::PositiveNumber);
  distill->add_option("--L", L, "Sacrificed randomness")->check(CLI::PositiveNumber);
  distill->add_option("--n", n, "Letters")->check(CLI::PositiveNumber);
  add_ensemble(distill, ens);
  add_common(distill, common, false);

  auto* hash = app.add_subcommand("hash", "Hash family checks");
  hash->require_subcommand(1);
  auto* hash_check = hash->add_subcommand("check", "Verify universality and balance");
  add_family(hash_check, fam);
  add_common(hash_check, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (entropy->parsed()) {
      const Dist p = load_dist(dist_path);
      emit(common, [&](char** t) { return secamp_entropy_report(p.get(), orders.data(), orders.size(), t); });
    } else if (exponent->parsed()) {
      if (form == "cond") {
        if (joint_path.empty()) throw Failure{2, "--form cond needs --joint"};
        const Joint j = load_joint(joint_path);
        emit(common, [&](char** t) { return secamp_cond_exponent_report(j.get(), rate, t); });
      } else {
        if (dist_path.empty()) throw Failure{2, "--form " + form + " needs --dist"};
        const Dist p = load_dist(dist_path);
        emit(common, [&](char** t) { return secamp_exponent_report(p.get(), form.c_str(), rate, t); });
      }
    } else if (figure->parsed()) {
      emit(common, [&](char** t) { return secamp_figure(figure_id, points, common.format.c_str(), t); });
    } else if (pa->parsed()) {
      const Dist p = load_dist(dist_path);
      if (fam.inputs == 0) fam.inputs = secamp_dist_size(p.get());
      const secamp_family f = fam.view();
      const secamp_mode m = mode_of(ens, common);
      emit(common, [&](char** t) { return secamp_pa_report(p.get(), &f, &m, t); });
    } else if (wiretap->parsed()) {
      const Chan wb = load_channel(wb_path), we = load_channel(we_path);
      Dist p;
      if (!p_path.empty()) p = load_dist(p_path);
      const secamp_mode m = mode_of(ens, common);
      emit(common, [&](char** t) { return secamp_wiretap_report(wb.get(), we.get(), p.get(), M, L, n, &m, t); });
    } else if (intrinsic->parsed()) {
      const Dist p = load_dist(dist_path);
      emit(common, [&](char** t) { return secamp_intrinsic_report(p.get(), n32, M, t); });
    } else if (distill->parsed()) {
      const Joint pab = load_joint(pab_path), pae = load_joint(pae_path);
      const secamp_mode m = mode_of(ens, common);
      emit(common, [&](char** t) { return secamp_distill_report(pab.get(), pae.get(), M, L, n, &m, t); });
    } else if (hash_check->parsed()) {
      const secamp_family f = fam.view();
      emit(common, [&](char** t) { return secamp_hash_check(&f, t); });
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
