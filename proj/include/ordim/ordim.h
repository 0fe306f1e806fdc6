// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ordim library. Objects are opaque handles; every call
 * returns an ordim_status and, on failure, leaves a message retrievable with
 * ordim_last_error() on the calling thread. Strings returned through char**
 * out-parameters are owned by the caller and released with ordim_string_free.
 * Structured data crosses the boundary as JSON text. */

#ifndef ORDIM_ORDIM_H_
#define ORDIM_ORDIM_H_

#include <stdint.h>

#if defined(_WIN32)
#define ORDIM_API __declspec(dllexport)
#else
#define ORDIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ORDIM_OK = 0,
  ORDIM_ERR_INTERNAL = 1,
  ORDIM_ERR_USAGE = 2,   /* bad parameters, malformed input or certificate */
  ORDIM_ERR_AXIOM = 3,   /* input is not a convex geometry */
  ORDIM_ERR_BUDGET = 4,  /* search budget exhausted; partial output is set */
  ORDIM_ERR_REJECT = 5   /* certificate rejected; verdict output is set */
} ordim_status;

typedef struct ordim_geometry ordim_geometry;
typedef struct ordim_poset ordim_poset;

ORDIM_API const char* ordim_version(void);
ORDIM_API const char* ordim_last_error(void);
ORDIM_API void ordim_string_free(char* s);

/* Geometries. kind is one of linear, boolean, pkn, pn, qn, random; params is
 * a JSON object with the integer fields the kind needs (n, k, t, seed). */
ORDIM_API ordim_status ordim_geometry_generate(const char* kind,
                                               const char* params_json,
                                               ordim_geometry** out);
ORDIM_API ordim_status ordim_geometry_from_json(const char* json,
                                                ordim_geometry** out);
ORDIM_API ordim_status ordim_geometry_to_json(const ordim_geometry* g,
                                              char** out);
ORDIM_API ordim_status ordim_geometry_to_dot(const ordim_geometry* g,
                                             char** out);
ORDIM_API int ordim_geometry_size(const ordim_geometry* g);
ORDIM_API void ordim_geometry_free(ordim_geometry* g);

/* {"kind": "set_family_list", "count", "families": [...]} holding every
 * labeled convex geometry on [n], 1 <= n <= 4. */
ORDIM_API ordim_status ordim_enumerate(int n, char** out_json);

/* Posets given by cover or order pairs (0-based). */
ORDIM_API ordim_status ordim_poset_from_json(const char* json,
                                             ordim_poset** out);
ORDIM_API ordim_status ordim_geometry_poset(const ordim_geometry* g,
                                            ordim_poset** out);
ORDIM_API void ordim_poset_free(ordim_poset* p);

/* Dimension report. options: {"only": [names], "budget": n, "ext_limit": n,
 * "timings": bool}. Names: dim, cdim, maxdd, vcdim, se, fdim. Returns
 * ORDIM_ERR_BUDGET with the partial report set when a solver ran out. */
ORDIM_API ordim_status ordim_analyze(const ordim_geometry* g,
                                     const char* options_json,
                                     char** report_json);
ORDIM_API ordim_status ordim_analyze_poset(const ordim_poset* p,
                                           const char* options_json,
                                           char** report_json);

/* kind: realizer, convex, boolean, local, fractional, distinguishing. The
 * verdict JSON is set on ORDIM_OK and on ORDIM_ERR_REJECT. */
ORDIM_API ordim_status ordim_verify(const ordim_geometry* g, const char* kind,
                                    const char* certificate_json,
                                    char** verdict_json);
ORDIM_API ordim_status ordim_verify_poset(const ordim_poset* p,
                                          const char* kind,
                                          const char* certificate_json,
                                          char** verdict_json);

/* Certificates for the P(k,n) family. kind: pkn-fractional, binary,
 * randomized, pkn-realizer (realizer from a binary or randomized sequence).
 * params: {"k", "n", "seed", "max_tries"}. */
ORDIM_API ordim_status ordim_certificate(const char* kind,
                                         const char* params_json,
                                         char** certificate_json);

/* Theorem suite. config: {"enumerate": m, "random": {"n", "t", "count",
 * "seed"}, "named": bool, "pkn_k_max", "pkn_n_max", "pn_min", "pn_max",
 * "checks": [names], "budget", "jobs"}. table_text may be NULL. Returns
 * ORDIM_ERR_REJECT when any check fails. */
ORDIM_API ordim_status ordim_theorems(const char* config_json,
                                      char** result_json, char** table_text);

#ifdef __cplusplus
}
#endif

#endif /* ORDIM_ORDIM_H_ */
