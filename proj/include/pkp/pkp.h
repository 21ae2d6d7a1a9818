/*
 * Copyright 2026 The pkp Authors
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

/*
 * C interface of libpkp, a solver library for the product knapsack problem:
 * choose items with total weight <= C maximizing the product of their
 * (possibly negative) integer profits.
 *
 * Conventions:
 *  - Every fallible call returns pkp_status; PKP_OK is zero. On failure a
 *    message for the calling thread is available from pkp_last_error().
 *  - Handles are opaque and owned by the caller; release them with the
 *    matching *_destroy function. Destroying NULL is a no-op.
 *  - Strings returned through char** are heap allocated by the library and
 *    must be released with pkp_string_free().
 *  - Objective values cross the boundary as decimal strings because they
 *    exceed 64 bits. Rationals are "num/den" strings; "0.1" style decimals
 *    are accepted on input and parsed exactly.
 */

#ifndef PKP_PKP_H_
#define PKP_PKP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PKP_API __declspec(dllexport)
#else
#define PKP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pkp_status {
  PKP_OK = 0,
  PKP_ERR_INVALID_ARGUMENT = 1,
  PKP_ERR_PARSE = 2,
  PKP_ERR_NEGATIVE_WEIGHT = 3,
  PKP_ERR_NONPOSITIVE_CAPACITY = 4,
  PKP_ERR_INDEX_OUT_OF_RANGE = 5,
  PKP_ERR_EPS_OUT_OF_RANGE = 6,
  PKP_ERR_EMPTY_INSTANCE = 7,
  PKP_ERR_NOT_PREPROCESSED = 8,
  PKP_ERR_TOO_LARGE = 9,
  PKP_ERR_NOT_PERFECT_SQUARE = 10,
  PKP_ERR_EMPTY_AFTER_NORMALIZATION = 11,
  PKP_ERR_M_TOO_SMALL = 12,
  PKP_ERR_INVALID_RANGE = 13,
  PKP_ERR_BIT_BUDGET = 14,
  PKP_ERR_NONPOSITIVE_INPUT = 15,
  PKP_ERR_IO = 16,
  PKP_ERR_INTERNAL = 99
} pkp_status;

typedef enum pkp_algorithm {
  PKP_ALGO_EXACT = 0,
  PKP_ALGO_FPTAS = 1,
  PKP_ALGO_GREEDY = 2,
  PKP_ALGO_BRUTE = 3
} pkp_algorithm;

typedef struct pkp_instance pkp_instance;
typedef struct pkp_solution pkp_solution;

typedef struct pkp_random_params {
  size_t n;
  int64_t profit_min; /* profit magnitudes, >= 1 */
  int64_t profit_max;
  int64_t weight_min; /* >= 0 */
  int64_t weight_max;
  int64_t capacity; /* >= 1 */
  double neg_fraction; /* probability of a negative profit, in [0, 1] */
  uint64_t seed;
} pkp_random_params;

PKP_API const char* pkp_status_name(pkp_status status);
PKP_API const char* pkp_last_error(void);
PKP_API void pkp_string_free(char* s);

/* ---- instances -------------------------------------------------------- */

PKP_API pkp_status pkp_instance_create(const int64_t* profits,
                                       const int64_t* weights, size_t n,
                                       int64_t capacity, pkp_instance** out);
/* JSON or plain-text instance; the format is detected from the content. */
PKP_API pkp_status pkp_instance_parse(const char* text, pkp_instance** out);
PKP_API pkp_status pkp_instance_read_file(const char* path,
                                          pkp_instance** out);
PKP_API void pkp_instance_destroy(pkp_instance* instance);

PKP_API size_t pkp_instance_size(const pkp_instance* instance);
PKP_API int64_t pkp_instance_capacity(const pkp_instance* instance);
PKP_API pkp_status pkp_instance_item(const pkp_instance* instance, size_t j,
                                     int64_t* profit, int64_t* weight);
PKP_API pkp_status pkp_instance_to_json(const pkp_instance* instance,
                                        char** out);
PKP_API pkp_status pkp_instance_to_text(const pkp_instance* instance,
                                        char** out);

PKP_API pkp_status pkp_gen_example1(int64_t m, pkp_instance** out);
PKP_API pkp_status pkp_gen_random(const pkp_random_params* params,
                                  pkp_instance** out);

/* Preprocessing report: {"removed": [...], "forced": [...], "kept": [...],
 * "capacity": C, "preprocessed": <instance JSON object>}. */
PKP_API pkp_status pkp_check(const pkp_instance* instance, char** report_json);

PKP_API pkp_status pkp_evaluate(const pkp_instance* instance,
                                const size_t* indices, size_t count,
                                char** value);
PKP_API pkp_status pkp_is_feasible(const pkp_instance* instance,
                                   const size_t* indices, size_t count,
                                   int* feasible);

/* ---- solving ---------------------------------------------------------- */

/* Preprocesses, solves and reports against the raw instance. `eps` is
 * required for PKP_ALGO_FPTAS and ignored otherwise (may be NULL). */
PKP_API pkp_status pkp_solve(const pkp_instance* instance,
                             pkp_algorithm algorithm, const char* eps,
                             pkp_solution** out);
PKP_API void pkp_solution_destroy(pkp_solution* solution);

PKP_API pkp_status pkp_solution_value(const pkp_solution* solution,
                                      char** value);
PKP_API size_t pkp_solution_size(const pkp_solution* solution);
PKP_API size_t pkp_solution_index(const pkp_solution* solution, size_t k);
PKP_API size_t pkp_solution_forced_size(const pkp_solution* solution);
PKP_API size_t pkp_solution_forced_index(const pkp_solution* solution,
                                         size_t k);
/* Greedy trace as JSON with raw item indices; PKP_ERR_INVALID_ARGUMENT for
 * other algorithms. */
PKP_API pkp_status pkp_solution_trace_json(const pkp_solution* solution,
                                           char** out);

/* (z_greedy)^3 >= z_opt and z_greedy * p_max^2 >= z_opt, with p_max and the
 * forced-item factor taken from the preprocessed instance. */
PKP_API pkp_status pkp_greedy_bounds_hold(const pkp_instance* instance,
                                          const char* greedy_value,
                                          const char* optimal_value,
                                          int* holds);

/* ---- exact rationals ------------------------------------------------ */

/* Canonical "num/den" of a positive rational or decimal literal. */
PKP_API pkp_status pkp_rational_canonical(const char* text, char** out);
/* value / reference as a reduced "num/den"; "0/1" when value is zero. Both
 * arguments are nonnegative decimal integers and reference must be > 0. */
PKP_API pkp_status pkp_ratio(const char* value, const char* reference,
                             char** out);
/* Sets *cmp to -1, 0 or 1 comparing two nonnegative rationals ("a/b", "a" or
 * decimal literals). */
PKP_API pkp_status pkp_rational_compare(const char* a, const char* b,
                                        int* cmp);

/* ---- product partition reduction -------------------------------------- */

/* Builds the knapsack instance for a_0..a_{n-1}. `info_json` (may be NULL)
 * receives {"M": "...", "target": "...", "normalized": [...]}. */
PKP_API pkp_status pkp_reduce_ppp(const int64_t* a, size_t n,
                                  pkp_instance** out, char** info_json);
/* Brute-forces both sides; *holds is 1 when every check passed. */
PKP_API pkp_status pkp_verify_ppp(const int64_t* a, size_t n, size_t limit,
                                  char** report_json, int* holds);

#ifdef __cplusplus
}
#endif

#endif /* PKP_PKP_H_ */
