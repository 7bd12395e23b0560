/*
 * Copyright 2026 The charvar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libcharvar.
 *
 * Every fallible call returns a charvar_status. On failure a message is
 * available from charvar_last_error() on the same thread until the next
 * call. Strings returned through char** are owned by the caller and must be
 * released with charvar_string_free; handles with their *_free function.
 * All functions may be called concurrently from different threads.
 */

#ifndef CHARVAR_CHARVAR_H
#define CHARVAR_CHARVAR_H

#include <stdint.h>

#if defined(CHARVAR_BUILDING_LIBRARY)
#define CHARVAR_API __attribute__((visibility("default")))
#else
#define CHARVAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum charvar_status {
  CHARVAR_OK = 0,
  CHARVAR_ERR_INVALID_ARGUMENT = 1, /* bad link, range or parameter */
  CHARVAR_ERR_PARSE = 2,            /* malformed word or JSON */
  CHARVAR_ERR_UNSUPPORTED = 3,      /* valid input with no analysis available */
  CHARVAR_ERR_CACHE_CORRUPT = 4,
  CHARVAR_ERR_INTERNAL = 5
} charvar_status;

typedef struct charvar_poly charvar_poly;
typedef struct charvar_report charvar_report;

CHARVAR_API const char* charvar_version(void);
CHARVAR_API const char* charvar_last_error(void);
CHARVAR_API const char* charvar_status_name(charvar_status status);
CHARVAR_API void charvar_string_free(char* s);

/* Polynomials in x = tr a, y = tr b, z = tr ab (and t for Chebyshev data). */
CHARVAR_API charvar_status charvar_poly_from_json(const char* json, charvar_poly** out);
CHARVAR_API charvar_status charvar_poly_to_json(const charvar_poly* p, char** out);
CHARVAR_API charvar_status charvar_poly_to_text(const charvar_poly* p, char** out);
/* 1 if equal, 0 if not or if either handle is NULL. */
CHARVAR_API int charvar_poly_equal(const charvar_poly* a, const charvar_poly* b);
CHARVAR_API void charvar_poly_free(charvar_poly* p);

/* Trace polynomial of a word such as "abAB" or "(ab)^3 B". */
CHARVAR_API charvar_status charvar_trace(const char* word, charvar_poly** out);

/*
 * Character polynomial of "twobridge:p,m", "pretzel:m,n" or "whitehead:k".
 * nonabelian may be NULL; otherwise it receives the cofactor of gamma - 2,
 * or NULL when the character polynomial is not divisible by it. cache_dir
 * may be NULL to compute two-bridge polynomials directly.
 */
CHARVAR_API charvar_status charvar_charpoly(const char* link, const char* cache_dir, charvar_poly** full,
                                            charvar_poly** nonabelian);

/*
 * Component report for a pretzel link, b(2p, 3) with p > 3 and 3 not
 * dividing p, or a twisted Whitehead link. Other two-bridge links give
 * CHARVAR_ERR_UNSUPPORTED.
 */
CHARVAR_API charvar_status charvar_components(const char* link, const char* cache_dir, charvar_report** out);

/*
 * One verification point: theorem 1 takes (m, n) for the pretzel link,
 * theorem 2 takes p and theorem 3 takes k (b is ignored for both).
 */
CHARVAR_API charvar_status charvar_verify(int theorem, long a, long b, const char* cache_dir, charvar_report** out);

CHARVAR_API int charvar_report_ok(const charvar_report* r);
CHARVAR_API long charvar_report_component_count(const charvar_report* r);
CHARVAR_API long charvar_report_expected_count(const charvar_report* r);
CHARVAR_API int charvar_report_sign(const charvar_report* r);
CHARVAR_API int charvar_report_product_check(const charvar_report* r);
CHARVAR_API int charvar_report_certificates_ok(const charvar_report* r);
CHARVAR_API charvar_status charvar_report_to_json(const charvar_report* r, char** out);
CHARVAR_API charvar_status charvar_report_to_text(const charvar_report* r, char** out);
CHARVAR_API void charvar_report_free(charvar_report* r);

/* Numeric checks on the seeded random representation. */
CHARVAR_API charvar_status charvar_commutator_check(uint64_t seed, double* out);
CHARVAR_API charvar_status charvar_relator_residual(long p, long m, uint64_t seed, double* out);

#ifdef __cplusplus
}
#endif

#endif /* CHARVAR_CHARVAR_H */
