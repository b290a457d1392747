/* SPDX-License-Identifier: Apache-2.0 */
#ifndef TREESHIFT_CAPI_H
#define TREESHIFT_CAPI_H

/*
 * C interface to the treeshift library. All analysis results cross the
 * boundary as JSON text in the schemas documented in the README; systems are
 * opaque handles. Every function returns a ts_status; on failure
 * ts_last_error() holds a message for the calling thread.
 *
 * Strings returned through char** out parameters are heap allocated and must
 * be released with ts_string_free().
 */

#include <stdint.h>

#if defined(_WIN32)
#define TS_API __declspec(dllexport)
#else
#define TS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_ERROR_INVALID_ARGUMENT = 1,
  TS_ERROR_PARSE = 2,
  TS_ERROR_LIMIT_EXCEEDED = 3,
  TS_ERROR_BUDGET_EXCEEDED = 4,
  TS_ERROR_DEGENERATE_SYSTEM = 5,
  TS_ERROR_EMPTY_SHIFT = 6,
  TS_ERROR_INTERNAL = 7
} ts_status;

typedef struct ts_system ts_system;

TS_API const char* ts_version(void);

/* Message describing the most recent failure on this thread. */
TS_API const char* ts_last_error(void);

TS_API void ts_string_free(char* s);

/* System file schema: {"name": str?, "k": int, "d": int, "matrices": [[[0|1,...],...],...]} */
TS_API ts_status ts_system_from_json(const char* json_text, ts_system** out);
TS_API ts_status ts_system_to_json(const ts_system* sys, char** out);
TS_API void ts_system_free(ts_system* sys);

TS_API int ts_system_k(const ts_system* sys);
TS_API int ts_system_d(const ts_system* sys);

/* The binary catalog X_1 ... X_28. Index is 1-based. */
TS_API int ts_catalog_size(void);
TS_API ts_status ts_catalog_system(int index, ts_system** out);

TS_API ts_status ts_validate_json(const ts_system* sys, char** out);

/* Irreducibility, mixing and chaos verdicts; CPS certificates included when
 * with_certificates is nonzero. */
TS_API ts_status ts_classify_json(const ts_system* sys, int with_certificates, char** out);

TS_API ts_status ts_entropy_json(const ts_system* sys, int n_max, double tol, char** out);

/* p(n) as a decimal string (exact arithmetic). */
TS_API ts_status ts_complexity_exact(const ts_system* sys, int n, int exact_limit, char** out);

/* log p(n) via the projective iteration. */
TS_API ts_status ts_complexity_log(const ts_system* sys, int n, double* out);

/* Brute-force block count over all labelings of the height-n block. */
TS_API ts_status ts_oracle_count(const ts_system* sys, int n, uint64_t budget, uint64_t* out);

/* Forbidden set in, higher-block Markov presentation + verification out.
 * Input schema: {"k": int, "d": int, "s": int, "blocks": [[labels...],...]} */
TS_API ts_status ts_recode_json(const char* forbidden_json, int n_check, uint64_t budget,
                                int exact_limit, char** out);

/* Classification grid and entropy reference table for the whole catalog. */
TS_API ts_status ts_table_json(int n_max, double tol, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TREESHIFT_CAPI_H */
