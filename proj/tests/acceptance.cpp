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


// Acceptance runner: prints one line per criterion and exits nonzero if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "json.hpp"
#include "phasetorus/physical_space.hpp"
#include "phasetorus/plane_prequantum.hpp"
#include "phasetorus/report.hpp"
#include "phasetorus/symbolic_phase.hpp"
#include "phasetorus/torus_quantum.hpp"

using namespace phasetorus;
using phasetorus::testing::Dyadic;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void symbolic_algebra(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Dyadic g(1001);
  double heis = 0.0;
  double mixed = 0.0;
  bool canonical = true;
  using K = OperatorKind;
  for (int s = 0; s < 50; ++s) {
    const double hbar = std::ldexp(1.0, -g.integer(0, 3));
    const WaveFunction wf = phasetorus::testing::random_wave_function(g, hbar);
    canonical = canonical && is_canonical(wf);
    const WaveFunction target = wf * Complex{0.0, hbar};
    heis = std::max(heis, coefficient_distance(commutator_apply(K::QLeft, K::PLeft, wf), target));
    heis = std::max(heis, coefficient_distance(commutator_apply(K::QRight, K::PRight, wf), target));
    for (auto [a, b] : {std::pair{K::QLeft, K::QRight}, std::pair{K::QLeft, K::PRight},
                        std::pair{K::PLeft, K::QRight}, std::pair{K::PLeft, K::PRight}}) {
      mixed = std::max(mixed, commutator_apply(a, b, wf).max_abs_coefficient());
    }
  }
  const double dt = seconds_since(t0);
  o.detail << "50 wave functions, heisenberg residual " << heis << ", mixed residual " << mixed
           << ", " << dt << " s";
  o.require(canonical, "inputs canonical");
  o.require(heis == 0.0, "coefficient-exact heisenberg relation");
  o.require(mixed == 0.0, "mixed pairs commute exactly");
  o.require(dt < 1.0, "runtime under 1 s");
}

void plane_shifts(Outcome& o) {
  Dyadic g(2002);
  double shift = 0.0;
  for (int s = 0; s < 20; ++s) {
    const double hbar = std::ldexp(1.0, -g.integer(0, 2));
    const double l = g.next();
    const double k = g.next();
    const double a = g.next();
    const double b = g.next();
    const WaveFunction psi = make_plane_Q_basis(l, k, hbar, true);
    shift = std::max(shift, coefficient_distance(exp_operator_apply(OperatorKind::QRight, a, psi),
                                                 make_plane_Q_basis(l, k + a, hbar, true)));
    shift = std::max(shift, coefficient_distance(exp_operator_apply(OperatorKind::PLeft, -b, psi),
                                                 make_plane_Q_basis(l + b, k, hbar, true)));
  }
  double assoc = 0.0;
  for (int s = 0; s < 100; ++s) {
    const double hbar = g.uniform(0.1, 2.0);
    const auto d1 = phasetorus::testing::random_displacement(g);
    const auto d2 = phasetorus::testing::random_displacement(g);
    const auto d3 = phasetorus::testing::random_displacement(g);
    const auto x = displacement_compose(displacement_compose(d1, d2, hbar), d3, hbar);
    const auto y = displacement_compose(d1, displacement_compose(d2, d3, hbar), hbar);
    assoc = std::max({assoc, std::abs(x.q_shift - y.q_shift), std::abs(x.p_shift - y.p_shift),
                      std::abs(x.phase - y.phase)});
  }
  o.detail << "20 label shifts, residual " << shift << "; 100 triples, associativity residual " << assoc;
  o.require(shift == 0.0, "coefficient-exact label shifts");
  o.require(assoc <= 1e-12, "associativity within 1e-12");
}

void gauge_picture(Outcome& o) {
  Dyadic g(3003);
  double cov = 0.0;
  double field = 0.0;
  double path = 0.0;
  for (int s = 0; s < 20; ++s) {
    const double hbar = g.uniform(0.2, 1.5);
    const GaugeField A(hbar);
    const WaveFunction wf = phasetorus::testing::random_wave_function(g, hbar);
    const WaveFunction ql = apply_operator(OperatorKind::QLeft, wf);
    const WaveFunction pl = apply_operator(OperatorKind::PLeft, wf);
    for (int k = 0; k < 5; ++k) {
      const PhasePoint x{g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
      const Complex wq = ql.evaluate(x.q, x.p);
      const Complex wp = pl.evaluate(x.q, x.p);
      cov = std::max(cov, std::abs(Complex{0.0, hbar} * covariant_derivative_p(A, wf, x) - wq) /
                              std::max(1.0, std::abs(wq)));
      cov = std::max(cov, std::abs(Complex{0.0, -hbar} * covariant_derivative_q(A, wf, x) - wp) /
                              std::max(1.0, std::abs(wp)));
      field = std::max(field, std::abs(field_strength(A, x) - 1.0 / hbar));
    }
  }
  for (int s = 0; s < 10; ++s) {
    const double hbar = g.uniform(0.2, 1.5);
    const GaugeField A(hbar);
    const PhasePoint end{g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0)};
    const int steps = 10000;
    double integral = 0.0;
    for (int k = 0; k < steps; ++k) {
      const double t = (k + 0.5) / steps;
      integral += A.a_q(t * end.q, 0.0) * end.q / steps + A.a_p(end.q, t * end.p) * end.p / steps;
    }
    const Complex got = path_phase(A, end);
    path = std::max({path, std::abs(got - std::polar(1.0, integral)),
                     std::abs(got - std::polar(1.0, end.p * end.q / hbar))});
  }
  o.detail << "covariant residual " << cov << ", field residual " << field << ", path residual " << path;
  o.require(cov <= 1e-10, "covariant derivatives within 1e-10");
  o.require(field == 0.0, "field strength identically 1/hbar");
  o.require(path <= 1e-10, "path phase within 1e-10");
}

void quantization_dichotomy(Outcome& o) {
  Dyadic g(4004);
  int quantized = 0;
  int agree = 0;
  double chart = 0.0;
  double bare_min = 1e300;
  for (int s = 0; s < 100; ++s) {
    const double h = g.uniform(0.2, 3.0);
    const double a = g.uniform(0.3, 3.0);
    const int N = 1 + s % 6;
    // Non-integer areas stay well outside the integer-detection band.
    const double area = (s % 2 == 0) ? N : N + g.uniform(0.05, 0.95);
    const TorusGeometry geo(a, area * h / a, h);
    const bool has_n = geo.quantized();
    const bool unit_holonomy = std::abs(holonomy(geo) - 1.0) <= 1e-12;
    double periodic = 0.0;
    for (int k = 0; k < 32; ++k) {
      const double p = k * a / 32.0;
      periodic = std::max(periodic, std::abs(transition_function(geo, p + a) - transition_function(geo, p)));
    }
    const bool is_periodic = periodic <= 1e-12;
    if (has_n == unit_holonomy && unit_holonomy == is_periodic) ++agree;
    if (has_n) {
      ++quantized;
      for (int n = 0; n < N; ++n) {
        for (int m = 0; m < N; ++m) {
          chart = std::max(chart, chart_consistency_check(geo, n, m, geo.b() / 8.0).max_residual);
        }
      }
    }
  }
  for (int N : {1, 2, 3, 5}) {
    const TorusGeometry half(1.0, N + 0.5, 1.0);
    const WaveFunction psi = detail::torus_Q_basis_formula(half, 0, 0, true);
    bare_min = std::min(bare_min, chart_overlap_mismatch(half, psi, ChartPair(half.b(), half.b() / 8.0), false).seam);
  }
  o.detail << agree << "/100 triples consistent (" << quantized << " quantized), chart mismatch " << chart
           << ", half-integer mismatch without transition >= " << bare_min;
  o.require(agree == 100, "dichotomy on every triple");
  o.require(chart <= 1e-12, "chart mismatch within 1e-12");
  o.require(bare_min > 0.1, "omitted transition detected");
}

void orthonormality(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int N : {1, 2, 3, 4, 8}) {
    const TorusGeometry geo = default_geometry(N);
    std::vector<GridFunction> qs;
    std::vector<GridFunction> ps;
    for (int n = 0; n < N; ++n) {
      for (int m = 0; m < N; ++m) {
        qs.push_back(sample(make_torus_Q_basis(geo, n, m, true), geo, 8 * N));
        ps.push_back(sample(make_torus_P_basis(geo, n, m), geo, 8 * N));
      }
    }
    const auto I = Eigen::MatrixXcd::Identity(N * N, N * N);
    worst = std::max({worst, max_abs(gram_matrix(qs) - I), max_abs(gram_matrix(ps) - I)});
  }
  const double dt = seconds_since(t0);
  o.detail << "N in {1,2,3,4,8}, max |G - I| " << worst << ", " << dt << " s";
  o.require(worst <= 1e-12, "Gram within 1e-12");
  o.require(dt < 10.0, "runtime under 10 s");
}

void action_table(Outcome& o) {
  double worst = 0.0;
  int cells = 0;
  bool all = true;
  for (int N : {1, 2, 4}) {
    for (const auto& c : table1_verify(default_geometry(N))) {
      if (c.name == "table1_cell") ++cells;
      worst = std::max(worst, c.max_residual);
      all = all && c.pass;
    }
  }
  o.detail << cells << " cells over N in {1,2,4}, max residual " << worst;
  o.require(cells == 24, "8 cells per N");
  o.require(all && worst <= 1e-12, "all cells within 1e-12");
}

void weyl(Outcome& o) {
  double nth = 0.0;
  bool primitive = true;
  for (int N : {2, 3, 5, 7}) {
    const Complex w = weyl_commutation_check(N);
    nth = std::max(nth, std::abs(std::pow(w, N) - 1.0));
    Complex wk = 1.0;
    for (int k = 1; k < N; ++k) {
      wk *= w;
      primitive = primitive && std::abs(wk - 1.0) > 1e-6;
    }
  }
  double unitary = 0.0;
  bool exact = true;
  for (int N = 1; N <= 64; ++N) {
    const auto I = Eigen::MatrixXcd::Identity(N, N);
    const auto C = clock_matrix(N).entries;
    const auto S = shift_matrix(N).entries;
    unitary = std::max({unitary, max_abs(C.adjoint() * C - I), max_abs(S.adjoint() * S - I)});
    exact = exact && power(shift_matrix(N), N).entries == I;
  }
  o.detail << "max |omega^N - 1| " << nth << ", unitarity residual to N=64 " << unitary;
  o.require(nth <= 1e-12, "omega^N = 1");
  o.require(primitive, "omega primitive for prime N");
  o.require(unitary <= 1e-12, "clock and shift unitary");
  o.require(exact, "shift^N = I exactly");
}

void dft(Outcome& o) {
  double unitary = 0.0;
  double intertwine = 0.0;
  double oracle = 0.0;
  double norm = 0.0;
  std::size_t flagged = 0;
  for (int N : {1, 2, 3, 4, 8}) {
    const auto K = dft_basis_change(N).entries;
    unitary = std::max(unitary, max_abs(K.adjoint() * K - Eigen::MatrixXcd::Identity(N, N)));
    for (GridOperator op : kAllGridOperators) {
      intertwine = std::max(intertwine, max_abs(K * table_representation(op, N, Basis::Q).entries -
                                                table_representation(op, N, Basis::P).entries * K));
    }
    const DftOracleResult r = dft_oracle(default_geometry(N));
    oracle = std::max(oracle, r.max_entry_deviation);
    norm = std::max(norm, std::abs(r.measured_normalization - dft_normalization(N)));
    flagged += r.flagged.size();
  }
  o.detail << "N in {1,2,3,4,8}, unitarity " << unitary << ", intertwining " << intertwine
           << ", oracle deviation " << oracle << ", normalization deviation " << norm;
  o.require(unitary <= 1e-12, "unitary within 1e-12");
  o.require(intertwine <= 1e-12, "intertwines all four operators");
  o.require(oracle <= 1e-10 && flagged == 0, "oracle agrees entrywise within 1e-10");
  o.require(norm <= 1e-10, "oracle normalization 1/sqrt(N)");
}

void trace_obstruction(Outcome& o) {
  double worst = 0.0;
  bool all = true;
  for (int N : {2, 3, 8}) {
    const CheckResult r = trace_obstruction_demo(N, 100);
    worst = std::max(worst, r.max_residual);
    all = all && r.pass;
  }
  o.detail << "100 pairs for N in {2,3,8}, max relative |tr[A,B]| " << worst
           << " against tr(i hbar I) = i hbar N";
  o.require(all && worst <= 1e-10, "traces vanish");
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(PHASETORUS_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_timestamp(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    j.erase("timestamp");
    return j.dump();
  } catch (const std::exception&) {
    return "<invalid json>";
  }
}

void cli(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const CliRun v = run_cli("verify --N 4 --suite all --json");
  const double dt = seconds_since(t0);
  const CliRun q = run_cli("quantize --a 1 --b 0.5 --h 1 --json");
  bool holonomy_reported = false;
  try {
    const auto j = nlohmann::json::parse(q.out);
    holonomy_reported = j["checks"][0]["params"].contains("holonomy");
  } catch (const std::exception&) {
  }
  const CliRun v2 = run_cli("verify --N 4 --suite all --json");
  const bool stable = strip_timestamp(v.out) == strip_timestamp(v2.out) && strip_timestamp(v.out) != "<invalid json>";
  o.detail << "verify exit " << v.code << " in " << dt << " s, quantize exit " << q.code
           << (holonomy_reported ? " with holonomy" : " without holonomy") << ", stable " << (stable ? "yes" : "no");
  o.require(v.code == 0 && dt < 30.0, "verify exits 0 in under 30 s");
  o.require(q.code == 1 && holonomy_reported, "non-quantized quantize exits 1 with holonomy");
  o.require(stable, "byte-stable modulo timestamp");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"symbolic Heisenberg algebra", symbolic_algebra},
      {"plane shift actions and displacement associativity", plane_shifts},
      {"gauge picture", gauge_picture},
      {"quantization dichotomy", quantization_dichotomy},
      {"torus orthonormality", orthonormality},
      {"action table reproduction", action_table},
      {"Weyl commutation", weyl},
      {"discrete Fourier basis change", dft},
      {"trace obstruction", trace_obstruction},
      {"CLI end-to-end", cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu %s: %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
