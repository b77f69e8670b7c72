/*
   Copyright 2026 The relcone Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to librelcone.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an rc_status; on
 * failure rc_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap allocated and released with
 * rc_string_free(). JSON schemas are documented in README.md.
 */

#ifndef RELCONE_RELCONE_H
#define RELCONE_RELCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define RELCONE_API __declspec(dllexport)
#else
#  define RELCONE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
  RC_OK = 0,
  RC_ERR_INPUT = 1,        /* malformed input, schema or dimension mismatch */
  RC_ERR_DOMAIN = 2,       /* e.g. decomposing a vector outside the cone */
  RC_ERR_PARAMETER = 3,    /* bad construction parameters */
  RC_ERR_UNSUPPORTED = 4,  /* infinite targets, n too large */
  RC_ERR_VERIFICATION = 5, /* a construction missed its target */
  RC_ERR_INTERNAL = 6
} rc_status;

typedef struct rc_vector rc_vector;
typedef struct rc_pair rc_pair;
typedef struct rc_upset rc_upset;

RELCONE_API const char* rc_version(void);
RELCONE_API const char* rc_status_name(rc_status status);
/* Message of the last failure on this thread; empty if none. */
RELCONE_API const char* rc_last_error(void);
RELCONE_API void rc_string_free(char* s);

/* Relative-entropy vectors. */
RELCONE_API rc_status rc_vector_from_json(const char* json, rc_vector** out);
RELCONE_API rc_status rc_vector_to_json(const rc_vector* v, char** json);
RELCONE_API int rc_vector_party_count(const rc_vector* v);
/* Writes 2^n - 1 values in coordinate order (A, B, ..., AB, ...); +inf
 * entries are written as HUGE_VAL. capacity is the length of values. */
RELCONE_API rc_status rc_vector_values(const rc_vector* v, double* values, size_t capacity);
RELCONE_API void rc_vector_free(rc_vector* v);

/* Membership in the monotonicity cone. *is_member receives 0 or 1;
 * report_json may be NULL. */
RELCONE_API rc_status rc_check_membership(const rc_vector* v, int* is_member, char** report_json);
RELCONE_API rc_status rc_decompose(const rc_vector* v, char** json);

/* State pairs. */
RELCONE_API rc_status rc_pair_from_json(const char* json, rc_pair** out);
RELCONE_API rc_status rc_pair_to_json(const rc_pair* p, char** json);
RELCONE_API int rc_pair_party_count(const rc_pair* p);
RELCONE_API rc_status rc_pair_re_vector(const rc_pair* p, rc_vector** out);
RELCONE_API void rc_pair_free(rc_pair* p);

/* Full pipeline; on success *pair receives the realizing pair and
 * result_json (may be NULL) the realization summary. */
RELCONE_API rc_status rc_synthesize(const rc_vector* target, double tol, rc_pair** pair,
                                    char** result_json);
/* *passed receives 1 iff every entry is within tol and the achieved vector
 * is monotone. */
RELCONE_API rc_status rc_verify(const rc_vector* target, const rc_pair* pair, double tol,
                                int* passed, char** report_json);

/* Up-sets and single rays. masks use bit i-1 for party i. */
RELCONE_API rc_status rc_upset_from_minimal(int n, const uint32_t* masks, size_t count,
                                            rc_upset** out);
RELCONE_API rc_status rc_realize_ray(const rc_upset* u, double lambda, rc_pair** out);
RELCONE_API void rc_upset_free(rc_upset* u);

/* Reports. as_json selects JSON over the plain-text table. */
RELCONE_API rc_status rc_rays(int n, int classes, int as_json, char** out);
/* name is "example5" or "example6". */
RELCONE_API rc_status rc_demo(const char* name, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RELCONE_RELCONE_H */
