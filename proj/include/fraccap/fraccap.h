/*
 * Copyright 2026 The fraccap Authors.
 *
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
 * C interface to fraccap: fraction capacities on ensemble spaces and the
 * Choquet and Sugeno integrals they induce.
 *
 * Every object is an opaque handle released by its *_destroy function
 * (NULL is accepted). Functions return FC_OK or an error code; the message
 * for the most recent error on the calling thread is available from
 * fc_last_error_message(). Outputs are written only on success.
 *
 * Payload layouts, as arrays of doubles:
 *   simplex ensemble   n probabilities
 *   Bloch ensemble     3 coordinates of the Bloch vector
 *   density ensemble   2 n^2 values, row-major, real and imaginary parts
 *                      interleaved: re(m00), im(m00), re(m01), ...
 *   simplex variable   n values f_i
 *   Bloch variable     4 values: gradient g (3) then offset k
 *   density variable   2 n^2 values of a Hermitian observable, as above
 */

#ifndef FRACCAP_FRACCAP_H_
#define FRACCAP_FRACCAP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FRACCAP_BUILDING_LIBRARY)
#define FRACCAP_API __declspec(dllexport)
#else
#define FRACCAP_API __declspec(dllimport)
#endif
#else
#define FRACCAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_INVALID_ARGUMENT = 1,
  FC_ERR_DIMENSION_MISMATCH = 2,
  FC_ERR_SPACE_MISMATCH = 3,
  FC_ERR_NOT_IN_SPACE = 4,
  FC_ERR_UNSUPPORTED = 5,
  FC_ERR_NOT_CONVERGED = 6,
  FC_ERR_IO = 7,
  FC_ERR_INTERNAL = 99
} fc_status;

typedef enum fc_space_kind {
  FC_SPACE_SIMPLEX = 0,
  FC_SPACE_BLOCH = 1,
  FC_SPACE_DENSITY = 2
} fc_space_kind;

typedef enum fc_strategy {
  FC_STRATEGY_CLOSED_FORM = 0,
  FC_STRATEGY_NUMERIC = 1,
  FC_STRATEGY_ORACLE = 2
} fc_strategy;

typedef struct fc_space fc_space;
typedef struct fc_ensemble fc_ensemble;
typedef struct fc_variable fc_variable;
typedef struct fc_set fc_set;
typedef struct fc_capacity fc_capacity;

FRACCAP_API const char* fc_version(void);
FRACCAP_API const char* fc_last_error_message(void);

/* Spaces. `n` is ignored for the Bloch ball. */
FRACCAP_API fc_status fc_space_create(fc_space_kind kind, size_t n,
                                      fc_space** out);
FRACCAP_API void fc_space_destroy(fc_space* space);
/* Number of doubles in an ensemble payload for this space. */
FRACCAP_API fc_status fc_space_payload_size(const fc_space* space,
                                            size_t* out);

/* Ensembles. */
FRACCAP_API fc_status fc_ensemble_create(const fc_space* space,
                                         const double* payload, size_t len,
                                         fc_ensemble** out);
FRACCAP_API fc_status fc_ensemble_barycenter(const fc_space* space,
                                             fc_ensemble** out);
FRACCAP_API void fc_ensemble_destroy(fc_ensemble* ensemble);
FRACCAP_API fc_status fc_ensemble_is_extreme(const fc_ensemble* ensemble,
                                             int* out);
FRACCAP_API fc_status fc_ensemble_payload(const fc_ensemble* ensemble,
                                          double* buffer, size_t len);

/* Statistical variables. */
FRACCAP_API fc_status fc_variable_create(const fc_space* space,
                                         const double* payload, size_t len,
                                         fc_variable** out);
/* Bloch-ball variable with range [a, b] and maximum at the unit vector top. */
FRACCAP_API fc_status fc_variable_bloch_with_range(double a, double b,
                                                   const double top[3],
                                                   fc_variable** out);
FRACCAP_API void fc_variable_destroy(fc_variable* variable);
FRACCAP_API fc_status fc_variable_evaluate(const fc_variable* variable,
                                           const fc_ensemble* ensemble,
                                           double* out);
FRACCAP_API fc_status fc_variable_range(const fc_variable* variable,
                                        double* min_value, double* max_value);

/* Sets of extreme points. */
FRACCAP_API fc_status fc_set_empty(const fc_space* space, fc_set** out);
FRACCAP_API fc_status fc_set_full(const fc_space* space, fc_set** out);
FRACCAP_API fc_status fc_set_finite(const fc_space* space,
                                    const fc_ensemble* const* members,
                                    size_t count, fc_set** out);
FRACCAP_API fc_status fc_set_cap(const double direction[3], double threshold,
                                 fc_set** out);
FRACCAP_API fc_status fc_set_level(const fc_variable* variable, double s,
                                   fc_set** out);
FRACCAP_API fc_status fc_set_union(const fc_set* a, const fc_set* b,
                                   fc_set** out);
FRACCAP_API void fc_set_destroy(fc_set* set);

/* Fraction capacity anchored at `reference`. `tol` is used by the numeric
 * strategy, `samples` and `seed` by the oracle. */
FRACCAP_API fc_status fc_capacity_create(const fc_ensemble* reference,
                                         fc_strategy strategy, double tol,
                                         size_t samples, uint64_t seed,
                                         fc_capacity** out);
FRACCAP_API void fc_capacity_destroy(fc_capacity* capacity);
FRACCAP_API fc_status fc_capacity_evaluate(const fc_capacity* capacity,
                                           const fc_set* set, double* out);

/* Integrals. Any of the optional outputs may be NULL. */
FRACCAP_API fc_status fc_choquet(const fc_variable* variable,
                                 const fc_capacity* capacity, double tol,
                                 double* value, double* error_estimate,
                                 size_t* evaluations);
FRACCAP_API fc_status fc_choquet_quadrature(const fc_variable* variable,
                                            const fc_capacity* capacity,
                                            double tol, double* value,
                                            double* error_estimate,
                                            size_t* evaluations);
FRACCAP_API fc_status fc_sugeno(const fc_variable* variable,
                                const fc_capacity* capacity, double* out);
FRACCAP_API fc_status fc_expectation(const fc_variable* variable,
                                     const fc_ensemble* ensemble, double* out);
FRACCAP_API fc_status fc_choquet_gap(const fc_variable* variable,
                                     const fc_ensemble* ensemble, double tol,
                                     double* out);

/* Reproduction runs. Each returns a JSON report in *report_json (release
 * with fc_string_free) and sets *passed to 1 iff every check passed. */
FRACCAP_API fc_status fc_repro_capacity_profile(double a, double b,
                                                size_t samples,
                                                size_t oracle_points,
                                                uint64_t seed,
                                                const char* csv_path,
                                                char** report_json,
                                                int* passed);
FRACCAP_API fc_status fc_repro_bloch_choquet(double a, double b, double tol,
                                             char** report_json, int* passed);
FRACCAP_API fc_status fc_repro_classical_check(size_t n, size_t trials,
                                               uint64_t seed, double tol,
                                               char** report_json,
                                               int* passed);
/* corrupt_check may be NULL or empty; otherwise the named check is forced
 * to fail (test hook). */
FRACCAP_API fc_status fc_repro_verify_all(uint64_t seed, size_t oracle_points,
                                          const char* corrupt_check,
                                          char** report_json, int* passed);
FRACCAP_API void fc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FRACCAP_FRACCAP_H_ */
