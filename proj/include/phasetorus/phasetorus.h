/* Copyright 2026 The phasetorus Authors
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

/* C interface to libphasetorus. Every function returns a pt_status; on
 * failure pt_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are owned by the caller
 * and released with pt_string_free. */

#ifndef PHASETORUS_H_
#define PHASETORUS_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PHASETORUS_BUILDING_LIBRARY)
#define PT_API __attribute__((visibility("default")))
#else
#define PT_API
#endif

typedef enum pt_status {
  PT_OK = 0,
  PT_ERR_NULL_ARGUMENT = 1,
  PT_ERR_INVALID_ARGUMENT = 2,
  PT_ERR_NOT_QUANTIZED = 3,
  PT_ERR_OUT_OF_RANGE = 4,
  PT_ERR_INTERNAL = 5
} pt_status;

typedef enum pt_operator_kind {
  PT_Q_LEFT = 0,
  PT_P_LEFT = 1,
  PT_Q_RIGHT = 2,
  PT_P_RIGHT = 3
} pt_operator_kind;

/* exp(-2 pi i P_LEFT/a), exp(2 pi i Q_LEFT/b), exp(-2 pi i P_RIGHT/a),
 * exp(2 pi i Q_RIGHT/b). */
typedef enum pt_grid_operator {
  PT_EXP_P_LEFT = 0,
  PT_EXP_Q_LEFT = 1,
  PT_EXP_P_RIGHT = 2,
  PT_EXP_Q_RIGHT = 3
} pt_grid_operator;

typedef enum pt_basis { PT_BASIS_Q = 0, PT_BASIS_P = 1 } pt_basis;

typedef struct pt_geometry pt_geometry;
typedef struct pt_wavefunction pt_wavefunction;
typedef struct pt_grid pt_grid;
typedef struct pt_operator pt_operator;
typedef struct pt_report pt_report;

PT_API const char* pt_version(void);
PT_API const char* pt_last_error(void);
PT_API const char* pt_status_string(pt_status status);
PT_API void pt_string_free(char* s);

/* Geometry */
PT_API pt_status pt_geometry_create(double a, double b, double h, pt_geometry** out);
PT_API pt_status pt_geometry_default(int N, double h, pt_geometry** out);
PT_API void pt_geometry_destroy(pt_geometry* g);
/* *N is 0 when a b / h is not an integer. */
PT_API pt_status pt_geometry_N(const pt_geometry* g, int* N);
PT_API pt_status pt_geometry_holonomy(const pt_geometry* g, double* re, double* im);

/* Symbolic wave functions */
PT_API pt_status pt_wavefunction_torus_basis(const pt_geometry* g, pt_basis basis, int n, int m,
                                             int primed, pt_wavefunction** out);
PT_API pt_status pt_wavefunction_from_json(const char* json, pt_wavefunction** out);
PT_API pt_status pt_wavefunction_to_json(const pt_wavefunction* wf, char** out);
PT_API pt_status pt_wavefunction_evaluate(const pt_wavefunction* wf, double q, double p,
                                          double* re, double* im);
PT_API pt_status pt_wavefunction_apply(const pt_wavefunction* wf, pt_operator_kind kind,
                                       pt_wavefunction** out);
PT_API pt_status pt_wavefunction_distance(const pt_wavefunction* a, const pt_wavefunction* b,
                                          double* out);
PT_API void pt_wavefunction_destroy(pt_wavefunction* wf);

/* Sampled grids */
PT_API pt_status pt_grid_sample(const pt_wavefunction* wf, const pt_geometry* g, int M,
                                pt_grid** out);
PT_API pt_status pt_grid_shift(const pt_grid* f, pt_grid_operator op, pt_grid** out);
PT_API pt_status pt_grid_inner_product(const pt_grid* f, const pt_grid* g, double* re, double* im);
PT_API pt_status pt_grid_to_csv(const pt_grid* f, char** out);
PT_API void pt_grid_destroy(pt_grid* f);

/* N x N operators on the physical space */
PT_API pt_status pt_operator_clock(int N, pt_operator** out);
PT_API pt_status pt_operator_shift(int N, pt_operator** out);
PT_API pt_status pt_operator_dft(int N, pt_operator** out);
PT_API pt_status pt_operator_table(pt_grid_operator op, int N, pt_basis basis, pt_operator** out);
PT_API pt_status pt_operator_dim(const pt_operator* op, int* dim);
PT_API pt_status pt_operator_entry(const pt_operator* op, int row, int col, double* re, double* im);
PT_API pt_status pt_operator_to_json(const pt_operator* op, char** out);
PT_API void pt_operator_destroy(pt_operator* op);

/* Verification reports */
typedef struct pt_verify_options {
  int N;
  double h;
  /* Periods; ignored unless the matching has_ flag is set. */
  double a;
  double b;
  int has_a;
  int has_b;
  /* "all", "orthonormality", "table1", "weyl", "dft", "charts" or
   * "commutators"; NULL means "all". */
  const char* suite;
  double tolerance;
  int has_tolerance;
  /* NULL or empty for the current UTC time. */
  const char* timestamp;
} pt_verify_options;

PT_API void pt_verify_options_init(pt_verify_options* options);
PT_API pt_status pt_verify(const pt_verify_options* options, pt_report** out);
PT_API pt_status pt_quantize(double a, double b, double h, const char* timestamp, pt_report** out);
PT_API pt_status pt_report_overall_pass(const pt_report* r, int* pass);
PT_API pt_status pt_report_check_count(const pt_report* r, int* count);
PT_API pt_status pt_report_to_json(const pt_report* r, char** out);
PT_API pt_status pt_report_to_text(const pt_report* r, char** out);
PT_API void pt_report_destroy(pt_report* r);

typedef struct pt_dump_options {
  /* "qbasis" or "pbasis" */
  const char* kind;
  int N;
  int n;
  int m;
  /* 0 means 8 N. */
  int M;
  int reduce;
  double h;
  double a;
  double b;
  int has_a;
  int has_b;
} pt_dump_options;

PT_API void pt_dump_options_init(pt_dump_options* options);
PT_API pt_status pt_dump_basis_csv(const pt_dump_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PHASETORUS_H_ */
