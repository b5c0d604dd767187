// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SECAMP_SECAMP_H_
#define SECAMP_SECAMP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SECAMP_BUILDING_LIBRARY)
#define SECAMP_API __attribute__((visibility("default")))
#else
#define SECAMP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum secamp_status {
  SECAMP_OK = 0,
  SECAMP_ERR_INVALID_ARGUMENT = 1,
  SECAMP_ERR_PARSE = 2,
  SECAMP_ERR_SIZE_LIMIT = 3,
  SECAMP_ERR_DOMAIN = 4,
  SECAMP_ERR_UNSUPPORTED = 5,
  SECAMP_ERR_INTERNAL = 6
} secamp_status;

typedef struct secamp_dist secamp_dist;
typedef struct secamp_joint secamp_joint;
typedef struct secamp_channel secamp_channel;

// Ensemble evaluation: exact enumeration, or `samples` Monte Carlo draws
// from `seed`.
typedef struct secamp_mode {
  int monte_carlo;
  uint64_t seed;
  uint64_t samples;
} secamp_mode;

// Hash family selection. kind: "toeplitz" (q, k, m), "fully-random" or
// "balanced" (inputs, outputs), "identity" (inputs).
typedef struct secamp_family {
  const char* kind;
  unsigned q, k, m;
  size_t inputs, outputs;
} secamp_family;

SECAMP_API const char* secamp_version(void);

// Message for the last failure on the calling thread; empty after success.
SECAMP_API const char* secamp_last_error(void);

// Strings returned through char** are owned by the caller.
SECAMP_API void secamp_string_free(char* s);

// `source` names the text in parse error messages and may be NULL.
SECAMP_API secamp_status secamp_dist_from_json(const char* text, const char* source,
                                               secamp_dist** out);
SECAMP_API secamp_status secamp_dist_create(const double* mass, size_t n,
                                            secamp_dist** out);
SECAMP_API size_t secamp_dist_size(const secamp_dist* p);
SECAMP_API void secamp_dist_free(secamp_dist* p);

SECAMP_API secamp_status secamp_joint_from_json(const char* text, const char* source,
                                                secamp_joint** out);
SECAMP_API void secamp_joint_free(secamp_joint* j);

SECAMP_API secamp_status secamp_channel_from_json(const char* text, const char* source,
                                                  secamp_channel** out);
SECAMP_API void secamp_channel_free(secamp_channel* w);

// Reports are JSON objects with sorted keys.
SECAMP_API secamp_status secamp_entropy_report(const secamp_dist* p, const double* orders,
                                               size_t count, char** out_json);
// form: universal, divergence, cramer, cramer_restricted, specialized, hr, lemma.
SECAMP_API secamp_status secamp_exponent_report(const secamp_dist* p, const char* form,
                                                double rate, char** out_json);
SECAMP_API secamp_status secamp_cond_exponent_report(const secamp_joint* j, double rate,
                                                     char** out_json);
SECAMP_API secamp_status secamp_pa_report(const secamp_dist* p, const secamp_family* family,
                                          const secamp_mode* mode, char** out_json);
// p may be NULL for a uniform input.
SECAMP_API secamp_status secamp_wiretap_report(const secamp_channel* wb,
                                               const secamp_channel* we,
                                               const secamp_dist* p, size_t M, size_t L,
                                               size_t n, const secamp_mode* mode,
                                               char** out_json);
SECAMP_API secamp_status secamp_intrinsic_report(const secamp_dist* p, uint32_t n, size_t M,
                                                 char** out_json);
SECAMP_API secamp_status secamp_distill_report(const secamp_joint* pab,
                                               const secamp_joint* pae, size_t M, size_t L,
                                               size_t n, const secamp_mode* mode,
                                               char** out_json);
SECAMP_API secamp_status secamp_hash_check(const secamp_family* family, char** out_json);

// id is 2, 3 or 4; format is "csv" or "json".
SECAMP_API secamp_status secamp_figure(int id, size_t points, const char* format,
                                       char** out_text);

#ifdef __cplusplus
}
#endif

#endif  // SECAMP_SECAMP_H_
