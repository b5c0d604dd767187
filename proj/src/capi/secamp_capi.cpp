// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#include "secamp/secamp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/reports.hpp"

struct secamp_dist {
  secamp::SubDist value;
};
struct secamp_joint {
  secamp::JointDist value;
};
struct secamp_channel {
  secamp::Channel value;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
secamp_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SECAMP_OK;
  } catch (const secamp::Error& e) {
    g_last_error = e.what();
    return static_cast<secamp_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SECAMP_ERR_SIZE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SECAMP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SECAMP_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  secamp::require(p != nullptr, std::string(what) + " must not be null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void emit(const secamp::Json& j, char** out) {
  need(out, "output pointer");
  *out = copy_out(secamp::dump(j));
}

secamp::EnsembleMode mode_of(const secamp_mode* m) {
  if (!m || !m->monte_carlo) return secamp::EnsembleMode::exact();
  return secamp::EnsembleMode::monte_carlo(m->seed, m->samples);
}

secamp::FamilySpec spec_of(const secamp_family* f) {
  need(f, "family");
  need(f->kind, "family kind");
  secamp::FamilySpec s;
  s.kind = f->kind;
  s.q = f->q;
  s.k = f->k;
  s.m = f->m;
  s.input_size = f->inputs;
  s.output_size = f->outputs;
  return s;
}

const char* name_or(const char* source, const char* fallback) {
  return source ? source : fallback;
}

// Parses `text` and builds a model value, naming `source` in schema errors.
template <typename Build>
auto load(const char* text, const char* source, const char* fallback, Build&& build) {
  const char* name = name_or(source, fallback);
  const auto j = secamp::parse_json(text, name);
  try {
    return build(j);
  } catch (const secamp::Error& e) {
    if (e.code() != secamp::ErrorCode::parse) throw;
    throw secamp::Error(e.code(), std::string(name) + ": " + e.what());
  }
}

}  // namespace

extern "C" {

const char* secamp_version(void) { return "0.1.0"; }

const char* secamp_last_error(void) { return g_last_error.c_str(); }

void secamp_string_free(char* s) { std::free(s); }

secamp_status secamp_dist_from_json(const char* text, const char* source,
                                    secamp_dist** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = nullptr;
    *out = new secamp_dist{
        load(text, source, "distribution", [](const auto& j) { return secamp::dist_from_json(j); })};
  });
}

secamp_status secamp_dist_create(const double* mass, size_t n, secamp_dist** out) {
  return guard([&] {
    need(mass, "mass");
    need(out, "output pointer");
    *out = nullptr;
    secamp::require(n >= 1 && n <= secamp::kDefaultCellLimit,
                    "distribution size must lie in [1, cell limit]", secamp::ErrorCode::size_limit);
    *out = new secamp_dist{secamp::SubDist(std::vector<double>(mass, mass + n))};
  });
}

size_t secamp_dist_size(const secamp_dist* p) { return p ? p->value.size() : 0; }

void secamp_dist_free(secamp_dist* p) { delete p; }

secamp_status secamp_joint_from_json(const char* text, const char* source,
                                     secamp_joint** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = nullptr;
    *out = new secamp_joint{
        load(text, source, "joint", [](const auto& j) { return secamp::joint_from_json(j); })};
  });
}

void secamp_joint_free(secamp_joint* j) { delete j; }

secamp_status secamp_channel_from_json(const char* text, const char* source,
                                       secamp_channel** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = nullptr;
    *out = new secamp_channel{
        load(text, source, "channel", [](const auto& j) { return secamp::channel_from_json(j); })};
  });
}

void secamp_channel_free(secamp_channel* w) { delete w; }

secamp_status secamp_entropy_report(const secamp_dist* p, const double* orders,
                                    size_t count, char** out_json) {
  return guard([&] {
    need(p, "distribution");
    if (count) need(orders, "orders");
    emit(secamp::entropy_report(p->value, {orders, count}), out_json);
  });
}

secamp_status secamp_exponent_report(const secamp_dist* p, const char* form, double rate,
                                     char** out_json) {
  return guard([&] {
    need(p, "distribution");
    need(form, "form");
    emit(secamp::exponent_report(p->value, form, rate), out_json);
  });
}

secamp_status secamp_cond_exponent_report(const secamp_joint* j, double rate,
                                          char** out_json) {
  return guard([&] {
    need(j, "joint");
    emit(secamp::cond_exponent_report(j->value, rate), out_json);
  });
}

secamp_status secamp_pa_report(const secamp_dist* p, const secamp_family* family,
                               const secamp_mode* mode, char** out_json) {
  return guard([&] {
    need(p, "distribution");
    emit(secamp::pa_report(p->value, spec_of(family), mode_of(mode)), out_json);
  });
}

secamp_status secamp_wiretap_report(const secamp_channel* wb, const secamp_channel* we,
                                    const secamp_dist* p, size_t M, size_t L, size_t n,
                                    const secamp_mode* mode, char** out_json) {
  return guard([&] {
    need(wb, "receiver channel");
    need(we, "eavesdropper channel");
    emit(secamp::wiretap_report(wb->value, we->value, p ? &p->value : nullptr, M, L, n,
                                mode_of(mode)),
         out_json);
  });
}

secamp_status secamp_intrinsic_report(const secamp_dist* p, uint32_t n, size_t M,
                                      char** out_json) {
  return guard([&] {
    need(p, "distribution");
    emit(secamp::intrinsic_report(p->value, n, M), out_json);
  });
}

secamp_status secamp_distill_report(const secamp_joint* pab, const secamp_joint* pae,
                                    size_t M, size_t L, size_t n, const secamp_mode* mode,
                                    char** out_json) {
  return guard([&] {
    need(pab, "P^{AB}");
    need(pae, "P^{AE}");
    emit(secamp::distill_report(pab->value, pae->value, M, L, n, mode_of(mode)), out_json);
  });
}

secamp_status secamp_hash_check(const secamp_family* family, char** out_json) {
  return guard([&] { emit(secamp::hash_check_report(spec_of(family)), out_json); });
}

secamp_status secamp_figure(int id, size_t points, const char* format, char** out_text) {
  return guard([&] {
    need(out_text, "output pointer");
    const std::string fmt = format ? format : "csv";
    secamp::require(fmt == "csv" || fmt == "json", "figure format must be csv or json");
    const auto f = secamp::figure_data(id, points);
    *out_text = copy_out(fmt == "csv" ? secamp::figure_csv(f)
                                      : secamp::dump(secamp::figure_json(f)));
  });
}

}  // extern "C"
