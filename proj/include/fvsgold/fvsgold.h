/*
 * Copyright 2026 The fvsgold Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the fvsgold exact Feedback Vertex Set solver.
 *
 * Every function that can fail returns an fvs_status. On failure a message is
 * available from fvs_last_error() on the calling thread until the next call
 * into the library from that thread. Objects are opaque and owned by the
 * caller once returned; release them with the matching *_free function. */

#ifndef FVSGOLD_FVSGOLD_H_
#define FVSGOLD_FVSGOLD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FVSGOLD_BUILDING)
#    define FVS_API __declspec(dllexport)
#  else
#    define FVS_API __declspec(dllimport)
#  endif
#else
#  define FVS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fvs_status {
  FVS_OK = 0,
  FVS_ERR_INVALID_ARGUMENT = 1,
  FVS_ERR_PARSE = 2,
  FVS_ERR_SELF_LOOP = 3,
  FVS_ERR_EDGE_COUNT = 4,
  FVS_ERR_CAPACITY = 5,
  FVS_ERR_VERIFICATION = 6,
  FVS_ERR_INTERNAL = 7,
  FVS_ERR_NO_MEMORY = 8
} fvs_status;

typedef enum fvs_format { FVS_FORMAT_EDGELIST = 0, FVS_FORMAT_DIMACS = 1 } fvs_format;

typedef enum fvs_algorithm {
  FVS_ALGORITHM_SIMPLE = 0,
  FVS_ALGORITHM_FAST = 1,
  FVS_ALGORITHM_ORACLE = 2
} fvs_algorithm;

typedef struct fvs_graph fvs_graph;
typedef struct fvs_result fvs_result;

FVS_API const char* fvs_version(void);
FVS_API const char* fvs_last_error(void);
FVS_API const char* fvs_status_name(fvs_status status);

/* Graphs. Vertex indices are 0-based; parsed graphs keep the file's names. */
FVS_API fvs_status fvs_graph_parse(const char* text, size_t length, fvs_format format,
                                   fvs_graph** out);
FVS_API fvs_status fvs_graph_new(int vertex_count, fvs_graph** out);
FVS_API fvs_status fvs_graph_add_edge(fvs_graph* graph, int u, int v);
FVS_API int fvs_graph_vertex_count(const fvs_graph* graph);
FVS_API int fvs_graph_edge_count(const fvs_graph* graph);
FVS_API size_t fvs_graph_warning_count(const fvs_graph* graph);
FVS_API const char* fvs_graph_warning(const fvs_graph* graph, size_t index);
FVS_API void fvs_graph_free(fvs_graph* graph);

typedef struct fvs_solve_options {
  fvs_algorithm algorithm;
  double alpha;         /* fast algorithm only; 0 selects 0.84 */
  int k;                /* budget; negative asks for the minimum */
  const char* order;    /* "input", "degree" or "random:SEED"; NULL means input */
  int early_cycle_exit; /* fast algorithm: NO as soon as G[U] has a cycle */
  int explain;          /* keep a trace of rule applications */
} fvs_solve_options;

FVS_API void fvs_solve_options_init(fvs_solve_options* options);

/* The certificate is re-verified against the graph before a result is
 * returned. */
FVS_API fvs_status fvs_solve(const fvs_graph* graph, const fvs_solve_options* options,
                             fvs_result** out);
FVS_API int fvs_result_answer(const fvs_result* result); /* 1 YES, 0 NO */
FVS_API int fvs_result_k(const fvs_result* result);
FVS_API size_t fvs_result_certificate_size(const fvs_result* result);
FVS_API int64_t fvs_result_certificate_vertex(const fvs_result* result, size_t index);
FVS_API const char* fvs_result_json(const fvs_result* result);
FVS_API const char* fvs_result_text(const fvs_result* result);
FVS_API void fvs_result_free(fvs_result* result);

/* Report producers. On success *report holds a heap string to be released
 * with fvs_string_free. */

/* family is "simple" or "fast". A grid with lo == hi analyzes one alpha. */
FVS_API fvs_status fvs_analyze(const char* family, double alpha_lo, double alpha_hi,
                               double step, int json, char** report);

typedef struct fvs_verify_options {
  int max_n;     /* largest exhaustive graph size (at most 8) and G(n,p) size */
  int trials;    /* random cases per suite */
  uint64_t seed;
} fvs_verify_options;

FVS_API void fvs_verify_options_init(fvs_verify_options* options);
FVS_API fvs_status fvs_verify(const fvs_verify_options* options, int json, int* all_passed,
                              char** report);

/* generator is "hard" (sizes are budgets k) or "gnp:P" (sizes are vertex
 * counts). */
FVS_API fvs_status fvs_bench(const char* family, double alpha, const char* generator,
                             const int* sizes, size_t count, uint64_t seed, int json,
                             char** report);

FVS_API void fvs_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* FVSGOLD_FVSGOLD_H_ */
