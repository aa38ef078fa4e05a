/* Copyright 2026 The twobar Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to libtwobar. Every function returns a tb_status; on error
 * tb_last_error() describes the failure for the calling thread. Objects are
 * opaque and released with the matching *_free function. */

#ifndef TWOBAR_TWOBAR_H
#define TWOBAR_TWOBAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TWOBAR_BUILDING_LIBRARY)
#define TWOBAR_API __declspec(dllexport)
#else
#define TWOBAR_API __declspec(dllimport)
#endif
#else
#define TWOBAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
    TB_OK = 0,
    TB_TOLERANCE_FAILURE = 1, /* output produced, some check out of tolerance */
    TB_INPUT_ERROR = 2,
    TB_INTERNAL_ERROR = 3
} tb_status;

typedef struct tb_scenario tb_scenario;
typedef struct tb_text tb_text;

typedef struct tb_evaluation {
    double a1, a2;
    double beta1, beta2, beta_2g1, beta_1g2, beta_joint;
    double p_sys, beta_sys;
    double material, sf, pc, dc, total;
} tb_evaluation;

TWOBAR_API const char* tb_version(void);

/* Message of the last failed call on this thread ("" if none). */
TWOBAR_API const char* tb_last_error(void);

TWOBAR_API tb_status tb_scenario_default(tb_scenario** out);
TWOBAR_API tb_status tb_scenario_from_json(const char* json, tb_scenario** out);
TWOBAR_API tb_status tb_scenario_from_file(const char* path, tb_scenario** out);
TWOBAR_API tb_status tb_scenario_to_json(const tb_scenario* scenario, tb_text** out);
TWOBAR_API void tb_scenario_free(tb_scenario* scenario);

/* Closed-form reliability and risk cost of one design. */
TWOBAR_API tb_status tb_evaluate(const tb_scenario* scenario, double lambda1, double lambda2,
                                 tb_evaluation* out);

/* Harness runs. Each produces CSV text; diagnostics are available through
 * tb_text_messages. `jobs` = 0 uses every hardware thread. */
TWOBAR_API tb_status tb_ro(const tb_scenario* scenario, unsigned jobs, tb_text** out);
TWOBAR_API tb_status tb_rbdo(const tb_scenario* scenario, const double* beta_targets, size_t count,
                             unsigned jobs, tb_text** out);
TWOBAR_API tb_status tb_rbdo_frontier(const tb_scenario* scenario, double beta_target,
                                      double lambda1_min, double lambda1_max, double lambda1_step,
                                      unsigned jobs, tb_text** out);
TWOBAR_API tb_status tb_reproduce(int table_id, unsigned jobs, tb_text** out);
TWOBAR_API tb_status tb_sweep(const char* spec_json, unsigned jobs, tb_text** out);
/* quantity: "ro_total" or "beta_sys". */
TWOBAR_API tb_status tb_contour(const tb_scenario* scenario, double lambda1_min, double lambda1_max,
                                double lambda1_step, double lambda2_min, double lambda2_max,
                                double lambda2_step, const char* quantity, unsigned jobs,
                                tb_text** out);
TWOBAR_API tb_status tb_validate(const tb_scenario* scenario, double lambda1, double lambda2,
                                 uint64_t n, uint64_t seed, unsigned jobs, tb_text** out);

TWOBAR_API const char* tb_text_data(const tb_text* text);
TWOBAR_API size_t tb_text_size(const tb_text* text);
/* Newline-separated diagnostics. */
TWOBAR_API const char* tb_text_messages(const tb_text* text);
TWOBAR_API void tb_text_free(tb_text* text);

#ifdef __cplusplus
}
#endif

#endif /* TWOBAR_TWOBAR_H */
