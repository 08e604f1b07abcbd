// Copyright 2026 The phasetorus Authors
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

#include "phasetorus/phasetorus.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "phasetorus/physical_space.hpp"
#include "phasetorus/report.hpp"
#include "phasetorus/symbolic_phase.hpp"
#include "phasetorus/torus_quantum.hpp"

struct pt_geometry {
  phasetorus::TorusGeometry value;
};
struct pt_wavefunction {
  phasetorus::WaveFunction value;
};
struct pt_grid {
  phasetorus::GridFunction value;
};
struct pt_operator {
  phasetorus::FiniteOperator value;
};
struct pt_report {
  phasetorus::VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

pt_status fail(pt_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename F>
pt_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return PT_OK;
  } catch (const phasetorus::NotQuantizedError& e) {
    return fail(PT_ERR_NOT_QUANTIZED, e.what());
  } catch (const std::out_of_range& e) {
    return fail(PT_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

phasetorus::OperatorKind to_kind(pt_operator_kind k) {
  switch (k) {
    case PT_Q_LEFT: return phasetorus::OperatorKind::QLeft;
    case PT_P_LEFT: return phasetorus::OperatorKind::PLeft;
    case PT_Q_RIGHT: return phasetorus::OperatorKind::QRight;
    case PT_P_RIGHT: return phasetorus::OperatorKind::PRight;
  }
  throw std::invalid_argument("unknown operator kind");
}

phasetorus::GridOperator to_grid_op(pt_grid_operator op) {
  switch (op) {
    case PT_EXP_P_LEFT: return phasetorus::GridOperator::ExpPLeft;
    case PT_EXP_Q_LEFT: return phasetorus::GridOperator::ExpQLeft;
    case PT_EXP_P_RIGHT: return phasetorus::GridOperator::ExpPRight;
    case PT_EXP_Q_RIGHT: return phasetorus::GridOperator::ExpQRight;
  }
  throw std::invalid_argument("unknown grid operator");
}

phasetorus::Basis to_basis(pt_basis b) {
  switch (b) {
    case PT_BASIS_Q: return phasetorus::Basis::Q;
    case PT_BASIS_P: return phasetorus::Basis::P;
  }
  throw std::invalid_argument("unknown basis");
}

#define PT_REQUIRE(ptr) \
  if (!(ptr)) return fail(PT_ERR_NULL_ARGUMENT, "null argument: " #ptr)

}  // namespace

extern "C" {

const char* pt_version(void) { return PHASETORUS_VERSION; }

const char* pt_last_error(void) { return g_last_error.c_str(); }

const char* pt_status_string(pt_status status) {
  switch (status) {
    case PT_OK: return "ok";
    case PT_ERR_NULL_ARGUMENT: return "null argument";
    case PT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PT_ERR_NOT_QUANTIZED: return "not quantized";
    case PT_ERR_OUT_OF_RANGE: return "out of range";
    case PT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pt_string_free(char* s) { std::free(s); }

pt_status pt_geometry_create(double a, double b, double h, pt_geometry** out) {
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_geometry{phasetorus::make_geometry(a, b, h)}; });
}

pt_status pt_geometry_default(int N, double h, pt_geometry** out) {
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_geometry{phasetorus::default_geometry(N, h)}; });
}

void pt_geometry_destroy(pt_geometry* g) { delete g; }

pt_status pt_geometry_N(const pt_geometry* g, int* N) {
  PT_REQUIRE(g);
  PT_REQUIRE(N);
  *N = g->value.N().value_or(0);
  return PT_OK;
}

pt_status pt_geometry_holonomy(const pt_geometry* g, double* re, double* im) {
  PT_REQUIRE(g);
  PT_REQUIRE(re);
  PT_REQUIRE(im);
  const auto z = phasetorus::holonomy(g->value);
  *re = z.real();
  *im = z.imag();
  return PT_OK;
}

pt_status pt_wavefunction_torus_basis(const pt_geometry* g, pt_basis basis, int n, int m,
                                      int primed, pt_wavefunction** out) {
  PT_REQUIRE(g);
  PT_REQUIRE(out);
  return guarded([&] {
    const auto b = to_basis(basis);
    *out = new pt_wavefunction{b == phasetorus::Basis::Q
                                   ? phasetorus::make_torus_Q_basis(g->value, n, m, primed != 0)
                                   : phasetorus::make_torus_P_basis(g->value, n, m, primed != 0)};
  });
}

pt_status pt_wavefunction_from_json(const char* json, pt_wavefunction** out) {
  PT_REQUIRE(json);
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_wavefunction{phasetorus::wave_function_from_json(json)}; });
}

pt_status pt_wavefunction_to_json(const pt_wavefunction* wf, char** out) {
  PT_REQUIRE(wf);
  PT_REQUIRE(out);
  return guarded([&] { *out = copy_string(phasetorus::to_json(wf->value)); });
}

pt_status pt_wavefunction_evaluate(const pt_wavefunction* wf, double q, double p, double* re,
                                   double* im) {
  PT_REQUIRE(wf);
  PT_REQUIRE(re);
  PT_REQUIRE(im);
  return guarded([&] {
    const auto z = wf->value.evaluate(q, p);
    *re = z.real();
    *im = z.imag();
  });
}

pt_status pt_wavefunction_apply(const pt_wavefunction* wf, pt_operator_kind kind,
                                pt_wavefunction** out) {
  PT_REQUIRE(wf);
  PT_REQUIRE(out);
  return guarded([&] {
    *out = new pt_wavefunction{phasetorus::apply_operator(to_kind(kind), wf->value)};
  });
}

pt_status pt_wavefunction_distance(const pt_wavefunction* a, const pt_wavefunction* b, double* out) {
  PT_REQUIRE(a);
  PT_REQUIRE(b);
  PT_REQUIRE(out);
  return guarded([&] { *out = phasetorus::coefficient_distance(a->value, b->value); });
}

void pt_wavefunction_destroy(pt_wavefunction* wf) { delete wf; }

pt_status pt_grid_sample(const pt_wavefunction* wf, const pt_geometry* g, int M, pt_grid** out) {
  PT_REQUIRE(wf);
  PT_REQUIRE(g);
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_grid{phasetorus::sample(wf->value, g->value, M)}; });
}

pt_status pt_grid_shift(const pt_grid* f, pt_grid_operator op, pt_grid** out) {
  PT_REQUIRE(f);
  PT_REQUIRE(out);
  return guarded(
      [&] { *out = new pt_grid{phasetorus::grid_shift_operator(to_grid_op(op), f->value)}; });
}

pt_status pt_grid_inner_product(const pt_grid* f, const pt_grid* g, double* re, double* im) {
  PT_REQUIRE(f);
  PT_REQUIRE(g);
  PT_REQUIRE(re);
  PT_REQUIRE(im);
  return guarded([&] {
    const auto z = phasetorus::inner_product(f->value, g->value);
    *re = z.real();
    *im = z.imag();
  });
}

pt_status pt_grid_to_csv(const pt_grid* f, char** out) {
  PT_REQUIRE(f);
  PT_REQUIRE(out);
  return guarded([&] { *out = copy_string(phasetorus::to_csv(f->value)); });
}

void pt_grid_destroy(pt_grid* f) { delete f; }

pt_status pt_operator_clock(int N, pt_operator** out) {
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_operator{phasetorus::clock_matrix(N)}; });
}

pt_status pt_operator_shift(int N, pt_operator** out) {
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_operator{phasetorus::shift_matrix(N)}; });
}

pt_status pt_operator_dft(int N, pt_operator** out) {
  PT_REQUIRE(out);
  return guarded([&] { *out = new pt_operator{phasetorus::dft_basis_change(N)}; });
}

pt_status pt_operator_table(pt_grid_operator op, int N, pt_basis basis, pt_operator** out) {
  PT_REQUIRE(out);
  return guarded([&] {
    *out = new pt_operator{phasetorus::table_representation(to_grid_op(op), N, to_basis(basis))};
  });
}

pt_status pt_operator_dim(const pt_operator* op, int* dim) {
  PT_REQUIRE(op);
  PT_REQUIRE(dim);
  *dim = op->value.dim();
  return PT_OK;
}

pt_status pt_operator_entry(const pt_operator* op, int row, int col, double* re, double* im) {
  PT_REQUIRE(op);
  PT_REQUIRE(re);
  PT_REQUIRE(im);
  const int d = op->value.dim();
  if (row < 0 || row >= d || col < 0 || col >= d) {
    return fail(PT_ERR_OUT_OF_RANGE, "operator entry index out of range");
  }
  const auto z = op->value.entries(row, col);
  *re = z.real();
  *im = z.imag();
  return PT_OK;
}

pt_status pt_operator_to_json(const pt_operator* op, char** out) {
  PT_REQUIRE(op);
  PT_REQUIRE(out);
  return guarded([&] { *out = copy_string(phasetorus::to_json(op->value)); });
}

void pt_operator_destroy(pt_operator* op) { delete op; }

void pt_verify_options_init(pt_verify_options* options) {
  if (!options) return;
  *options = pt_verify_options{};
  options->N = 1;
  options->h = 1.0;
}

pt_status pt_verify(const pt_verify_options* options, pt_report** out) {
  PT_REQUIRE(options);
  PT_REQUIRE(out);
  return guarded([&] {
    phasetorus::VerifyOptions o;
    o.N = options->N;
    o.h = options->h;
    if (options->has_a) o.a = options->a;
    if (options->has_b) o.b = options->b;
    if (options->suite) {
      const auto s = phasetorus::parse_suite(options->suite);
      if (!s) throw std::invalid_argument(std::string("unknown suite: ") + options->suite);
      o.suite = *s;
    }
    if (options->has_tolerance) o.tolerance = options->tolerance;
    if (options->timestamp) o.timestamp = options->timestamp;
    *out = new pt_report{phasetorus::run_verify(o)};
  });
}

pt_status pt_quantize(double a, double b, double h, const char* timestamp, pt_report** out) {
  PT_REQUIRE(out);
  return guarded([&] {
    *out = new pt_report{phasetorus::run_quantize(a, b, h, timestamp ? timestamp : "")};
  });
}

pt_status pt_report_overall_pass(const pt_report* r, int* pass) {
  PT_REQUIRE(r);
  PT_REQUIRE(pass);
  *pass = r->value.overall_pass() ? 1 : 0;
  return PT_OK;
}

pt_status pt_report_check_count(const pt_report* r, int* count) {
  PT_REQUIRE(r);
  PT_REQUIRE(count);
  *count = static_cast<int>(r->value.checks.size());
  return PT_OK;
}

pt_status pt_report_to_json(const pt_report* r, char** out) {
  PT_REQUIRE(r);
  PT_REQUIRE(out);
  return guarded([&] { *out = copy_string(r->value.to_json()); });
}

pt_status pt_report_to_text(const pt_report* r, char** out) {
  PT_REQUIRE(r);
  PT_REQUIRE(out);
  return guarded([&] { *out = copy_string(r->value.to_text()); });
}

void pt_report_destroy(pt_report* r) { delete r; }

void pt_dump_options_init(pt_dump_options* options) {
  if (!options) return;
  *options = pt_dump_options{};
  options->kind = "qbasis";
  options->N = 1;
  options->h = 1.0;
}

pt_status pt_dump_basis_csv(const pt_dump_options* options, char** out) {
  PT_REQUIRE(options);
  PT_REQUIRE(options->kind);
  PT_REQUIRE(out);
  return guarded([&] {
    phasetorus::DumpOptions o;
    o.kind = options->kind;
    o.N = options->N;
    o.n = options->n;
    o.m = options->m;
    if (options->M != 0) o.M = options->M;
    o.reduce = options->reduce != 0;
    o.h = options->h;
    if (options->has_a) o.a = options->a;
    if (options->has_b) o.b = options->b;
    *out = copy_string(phasetorus::dump_basis_csv(o));
  });
}

}  // extern "C"
