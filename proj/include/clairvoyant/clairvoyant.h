// Copyright 2026 The Clairvoyant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the clairvoyant embedding toolkit.
 *
 * Conventions:
 *  - Every fallible call returns a cemb_status. On failure the thread-local
 *    cemb_last_error() describes the problem, and for CEMB_ERR_PARSE
 *    cemb_last_error_offset() gives the offending byte offset.
 *  - Objects are opaque handles released with their *_destroy function.
 *  - Strings returned through char** are NUL-terminated, owned by the
 *    caller and released with cemb_string_free().
 */
#ifndef CLAIRVOYANT_CLAIRVOYANT_H_
#define CLAIRVOYANT_CLAIRVOYANT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CEMB_BUILDING_LIBRARY)
#define CEMB_API __attribute__((visibility("default")))
#else
#define CEMB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cemb_status {
  CEMB_OK = 0,
  CEMB_ERR_INVALID_ARGUMENT = 1,
  CEMB_ERR_PARSE = 2,
  CEMB_ERR_BOUNDS = 3,
  CEMB_ERR_COMPOSITION_DOMAIN = 4,
  CEMB_ERR_ORACLE_SIZE = 5,
  CEMB_ERR_STRUCTURE = 6,
  CEMB_ERR_UNDERPOWERED = 7,
  CEMB_ERR_CONSTRAINT = 8,
  CEMB_ERR_IO = 9,
  CEMB_ERR_INTERNAL = 10
} cemb_status;

CEMB_API const char* cemb_version(void);
CEMB_API const char* cemb_rng_id(void);
CEMB_API const char* cemb_status_name(cemb_status status);
CEMB_API const char* cemb_last_error(void);
CEMB_API size_t cemb_last_error_offset(void);
CEMB_API void cemb_string_free(char* s);

/* ---- sequences ---------------------------------------------------------- */

typedef struct cemb_sequence cemb_sequence;

/* Parses file contents: '0'/'1' bytes with one optional trailing newline. */
CEMB_API cemb_status cemb_sequence_parse(const char* bytes, size_t length, cemb_sequence** out);
CEMB_API cemb_status cemb_sequence_load(const char* path, cemb_sequence** out);
CEMB_API size_t cemb_sequence_length(const cemb_sequence* seq);
CEMB_API void cemb_sequence_destroy(cemb_sequence* seq);

/* ---- embedding paths ---------------------------------------------------- */

typedef struct cemb_path cemb_path;

CEMB_API cemb_status cemb_path_create(const uint64_t* steps, size_t count, uint32_t gap_bound, cemb_path** out);
CEMB_API size_t cemb_path_length(const cemb_path* path);
/* Copies min(capacity, length) steps into `steps`; returns the number copied. */
CEMB_API size_t cemb_path_steps(const cemb_path* path, uint64_t* steps, size_t capacity);
CEMB_API uint32_t cemb_path_gap_bound(const cemb_path* path);
CEMB_API cemb_status cemb_path_to_json(const cemb_path* path, char** out_json);
CEMB_API void cemb_path_destroy(cemb_path* path);

/* ---- engine ------------------------------------------------------------- */

/* Decides whether Y(1..L) m-embeds into X. `out_frontier_json` may be NULL;
 * otherwise it receives the final frontier as {"row":..,"positions":[..]}. */
CEMB_API cemb_status cemb_embeddable(const cemb_sequence* x, const cemb_sequence* y, uint32_t m, size_t L,
                                     int* out_embeddable, char** out_frontier_json);
/* *out is set to NULL when no embedding exists. */
CEMB_API cemb_status cemb_extract_embedding(const cemb_sequence* x, const cemb_sequence* y, uint32_t m, size_t L,
                                            cemb_path** out);
CEMB_API cemb_status cemb_check_embedding(const cemb_sequence* x, const cemb_sequence* y, const cemb_path* path,
                                          int* out_valid);
CEMB_API cemb_status cemb_compose_embeddings(const cemb_path* p1, const cemb_path* p2, cemb_path** out);

/* ---- structure analysis ------------------------------------------------- */

typedef struct cemb_analyze_options {
  uint32_t m;
  int holes;    /* requires y */
  int span;
  double delta; /* external-interval threshold; <= 0 selects the first-level value */
} cemb_analyze_options;

/* JSON lines: walls of X (and of Y when given), then holes, then spans. */
CEMB_API cemb_status cemb_analyze(const cemb_sequence* x, const cemb_sequence* y, const cemb_analyze_options* options,
                                  char** out_jsonl);

/* ---- parameter calculus ------------------------------------------------- */

/* `exponents_text` is flat key=value text or NULL for the reference tuple.
 * Returns CEMB_OK whenever the report was produced; *out_all_pass tells
 * whether every exponent constraint holds. The CSV is empty (header only)
 * when they do not. */
CEMB_API cemb_status cemb_params(uint32_t m, int levels, const char* exponents_text, char** out_csv,
                                 char** out_constraints_jsonl, int* out_all_pass);

/* ---- experiments -------------------------------------------------------- */

/* CSV starts with a header line; JSON is one object per row with the same keys. */
typedef enum cemb_format { CEMB_FORMAT_CSV = 0, CEMB_FORMAT_JSON = 1 } cemb_format;

typedef struct cemb_simulate_options {
  uint64_t m_first, m_last;
  uint64_t l_first, l_last;
  uint64_t trials;
  uint64_t seed;
  uint64_t x_length; /* 0 selects m * L */
  unsigned threads;  /* 0 selects hardware concurrency */
  cemb_format format;
} cemb_simulate_options;

CEMB_API cemb_status cemb_simulate(const cemb_simulate_options* options, char** out);
CEMB_API cemb_status cemb_wall_check(uint32_t m, uint32_t l, uint64_t samples, uint64_t seed, cemb_format format,
                                     char** out);
CEMB_API cemb_status cemb_hole_check(uint32_t m, uint64_t samples, uint64_t seed, cemb_format format, char** out);

/* Quick internal consistency checks; the report has one PASS/FAIL line each. */
CEMB_API cemb_status cemb_selftest(char** out_report, int* out_passed);

#ifdef __cplusplus
}
#endif

#endif /* CLAIRVOYANT_CLAIRVOYANT_H_ */
