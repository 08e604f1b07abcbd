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

#include "phasetorus/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <random>
#include <sstream>
#include <stdexcept>

#include "phasetorus/physical_space.hpp"
#include "phasetorus/symbolic_phase.hpp"

namespace phasetorus {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kOracleTolerance = 1e-10;
constexpr int kCommutatorSamples = 50;
constexpr int kTraceTrials = 100;
constexpr std::uint64_t kSuiteSeed = 0x7e57'0001u;

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

TorusGeometry resolve_geometry(int N, double h, std::optional<double> a, std::optional<double> b) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("h must be positive");
  if (!a && !b) return default_geometry(N, h);
  if (a && !b) b = N * h / *a;
  if (b && !a) a = N * h / *b;
  TorusGeometry g(*a, *b, h);
  if (g.N() != N) {
    throw std::invalid_argument("a*b/h = " + std::to_string(g.area_over_h()) +
                                " does not equal N = " + std::to_string(N));
  }
  return g;
}

// Dyadic-rational coefficients keep the symbolic arithmetic free of
// representation error except where hbar itself is irrational.
WaveFunction random_wave_function(std::mt19937_64& rng, double hbar) {
  std::uniform_int_distribution<int> small(-8, 8);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> degree(0, 2);
  auto dyadic = [&] { return small(rng) / 4.0; };
  std::vector<BilinearPhaseTerm> terms;
  const int n_terms = count(rng);
  for (int t = 0; t < n_terms; ++t) {
    Polynomial pref = Polynomial::constant(1.0);
    const int d = degree(rng);
    for (int dq = 0; dq <= d; ++dq) {
      for (int dp = 0; dq + dp <= d; ++dp) {
        if (dq + dp > 0) pref.add_term({dq, dp}, {dyadic(), dyadic()});
      }
    }
    PhaseCoefficients c{dyadic(), dyadic(), dyadic(), small(rng) / 8.0};
    terms.emplace_back(Complex{dyadic(), 1.0}, c, std::move(pref), hbar);
  }
  return WaveFunction(hbar, std::move(terms));
}

std::vector<CheckResult> orthonormality_suite(const TorusGeometry& g, double tol) {
  const int N = *g.N();
  const int M = kDefaultGridFactor * N;
  std::vector<GridFunction> q_states;
  std::vector<GridFunction> p_states;
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      q_states.push_back(sample(make_torus_Q_basis(g, n, m, true), g, M));
      p_states.push_back(sample(make_torus_P_basis(g, n, m), g, M));
    }
  }
  std::vector<CheckResult> out;
  const auto I = Eigen::MatrixXcd::Identity(N * N, N * N);
  for (const auto& [name, states] :
       {std::pair{"gram_q_basis", &q_states}, std::pair{"gram_p_basis", &p_states}}) {
    const Eigen::MatrixXcd G = gram_matrix(*states);
    ordered_json params;
    params["N"] = N;
    params["M"] = M;
    params["states"] = N * N;
    params["hermiticity_residual"] = max_abs(G - G.adjoint());
    out.push_back(make_check(name, std::move(params), max_abs(G - I), tol));
  }
  return out;
}

std::vector<CheckResult> weyl_suite(const TorusGeometry& g, double tol) {
  const int N = *g.N();
  std::vector<CheckResult> out;
  const Complex omega = weyl_commutation_check(N);
  const FiniteOperator C = clock_matrix(N);
  const FiniteOperator S = shift_matrix(N);
  const auto I = Eigen::MatrixXcd::Identity(N, N);

  ordered_json params;
  params["N"] = N;
  params["omega"] = complex_json(omega);
  out.push_back(make_check("weyl_omega_nth_power", params, std::abs(std::pow(omega, N) - 1.0), tol));
  if (N > 1) {
    double closest = 2.0;
    Complex w = 1.0;
    for (int k = 1; k < N; ++k) {
      w *= omega;
      closest = std::min(closest, std::abs(w - 1.0));
    }
    out.push_back(make_check("weyl_omega_primitive", params, closest, tol, true));
  }

  ordered_json dim;
  dim["N"] = N;
  out.push_back(make_check("clock_unitary", dim, max_abs(C.entries.adjoint() * C.entries - I), tol));
  out.push_back(make_check("shift_unitary", dim, max_abs(S.entries.adjoint() * S.entries - I), tol));
  out.push_back(make_check("shift_nth_power_identity", dim, max_abs(power(S, N).entries - I), 0.0));
  out.push_back(make_check("clock_nth_power_identity", dim, max_abs(power(C, N).entries - I), tol));
  const Eigen::MatrixXcd SN = power(S, N).entries;
  out.push_back(make_check("clock_commutes_with_shift_nth_power", dim,
                           max_abs(C.entries * SN - SN * C.entries), tol));

  // Reduced matrices measured on the grid reproduce clock and shift.
  const double clock_gap =
      max_abs(reduced_matrix({GridOperator::ExpQLeft}, g, Basis::Q).entries - C.entries);
  const double shift_gap =
      max_abs(reduced_matrix({GridOperator::ExpPLeft}, g, Basis::Q).entries - S.entries);
  out.push_back(make_check("grid_matrix_elements_clock", dim, clock_gap, tol));
  out.push_back(make_check("grid_matrix_elements_shift", dim, shift_gap, tol));

  // States with the same n and different m give the same physical matrices.
  const std::vector<GridOperator> word = {GridOperator::ExpPLeft, GridOperator::ExpQLeft,
                                          GridOperator::ExpPLeft};
  const Eigen::MatrixXcd base = reduced_matrix(word, g, Basis::Q, 0).entries;
  double spread = max_abs(base - (S * C * S).entries);
  for (int m : {1, N - 1, N}) {
    spread = std::max(spread, max_abs(reduced_matrix(word, g, Basis::Q, m).entries - base));
  }
  ordered_json eq;
  eq["N"] = N;
  eq["word"] = "shift*clock*shift";
  eq["gauge_labels"] = {0, 1, N - 1, N};
  out.push_back(make_check("equivalence_soundness", std::move(eq), spread, tol));
  return out;
}

std::vector<CheckResult> dft_suite(const TorusGeometry& g, double tol) {
  const int N = *g.N();
  std::vector<CheckResult> out;
  const Eigen::MatrixXcd K = dft_basis_change(N).entries;
  const auto I = Eigen::MatrixXcd::Identity(N, N);
  ordered_json dim;
  dim["N"] = N;
  dim["normalization"] = dft_normalization(N);
  out.push_back(make_check("dft_unitary", dim, max_abs(K.adjoint() * K - I), tol));

  for (GridOperator op : kAllGridOperators) {
    const Eigen::MatrixXcd AQ = table_representation(op, N, Basis::Q).entries;
    const Eigen::MatrixXcd AP = table_representation(op, N, Basis::P).entries;
    ordered_json params;
    params["N"] = N;
    params["operator"] = std::string(to_string(op));
    out.push_back(make_check("dft_intertwines", params, max_abs(K * AQ - AP * K), tol));

    // The closed-form representations themselves, measured on the grid.
    const double rep_gap =
        std::max(max_abs(reduced_matrix({op}, g, Basis::Q).entries - AQ),
                 max_abs(reduced_matrix({op}, g, Basis::P).entries - AP));
    out.push_back(make_check("grid_representation", std::move(params), rep_gap, tol));
  }

  const DftOracleResult oracle = dft_oracle(g, kOracleTolerance);
  ordered_json params;
  params["N"] = N;
  params["measured_normalization"] = oracle.measured_normalization;
  params["closed_form_normalization"] = dft_normalization(N);
  params["global_phase"] = complex_json(oracle.global_phase);
  params["smallest_singular_value"] = oracle.smallest_singular_value;
  params["nullspace_gap"] = oracle.nullspace_gap;
  auto flagged = ordered_json::array();
  for (const auto& [n, s] : oracle.flagged) flagged.push_back({n, s});
  params["flagged_entries"] = std::move(flagged);
  out.push_back(make_check("dft_oracle_agreement", std::move(params), oracle.max_entry_deviation,
                           kOracleTolerance));
  return out;
}

std::vector<CheckResult> chart_suite(const TorusGeometry& g, double tol) {
  const int N = *g.N();
  std::vector<CheckResult> out;
  ordered_json params;
  params["N"] = N;
  params["area_over_h"] = g.area_over_h();
  params["holonomy"] = complex_json(holonomy(g));
  out.push_back(make_check("holonomy_unity", params, std::abs(holonomy(g) - 1.0), tol));

  double periodicity = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double p = k * g.a() / 64.0;
    periodicity = std::max(periodicity, std::abs(transition_function(g, p + g.a()) -
                                                 transition_function(g, p)));
  }
  out.push_back(make_check("transition_periodic", params, periodicity, tol));

  const double delta = g.b() / 8.0;
  double worst = 0.0;
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) worst = std::max(worst, chart_consistency_check(g, n, m, delta).max_residual);
  }
  ordered_json cp;
  cp["N"] = N;
  cp["delta"] = delta;
  cp["labels"] = N * N;
  out.push_back(make_check("chart_consistency", cp, worst, tol));

  // Dropping the seam factor must be visible.
  const ChartMismatch bare = chart_overlap_mismatch(g, make_torus_Q_basis(g, 0, 0, true),
                                                    ChartPair(g.b(), delta), false);
  out.push_back(make_check("chart_mismatch_without_transition", cp, bare.seam, 0.1, true));

  // Half-integer flux: the holonomy is -1.
  const TorusGeometry half(g.a(), g.b() * (N + 0.5) / N, g.h());
  ordered_json hp;
  hp["area_over_h"] = half.area_over_h();
  hp["holonomy"] = complex_json(holonomy(half));
  out.push_back(make_check("half_integer_area_holonomy_detected", std::move(hp),
                           std::abs(holonomy(half) - 1.0), 0.1, true));
  return out;
}

std::vector<CheckResult> commutator_suite(const TorusGeometry& g, double tol) {
  const int N = *g.N();
  const double hbar = g.hbar();
  const Complex ihbar{0.0, hbar};
  std::mt19937_64 rng(kSuiteSeed);
  double left = 0.0;
  double right = 0.0;
  double mixed = 0.0;
  using K = OperatorKind;
  const std::pair<K, K> mixed_pairs[] = {
      {K::QLeft, K::PRight}, {K::QRight, K::PLeft}, {K::QLeft, K::QRight}, {K::PRight, K::PLeft}};
  for (int s = 0; s < kCommutatorSamples; ++s) {
    const WaveFunction wf = random_wave_function(rng, hbar);
    const double scale = std::max(1.0, wf.max_abs_coefficient());
    left = std::max(left, coefficient_distance(commutator_apply(K::QLeft, K::PLeft, wf), wf * ihbar) / scale);
    right = std::max(right, coefficient_distance(commutator_apply(K::QRight, K::PRight, wf), wf * ihbar) / scale);
    for (const auto& [a, b] : mixed_pairs) {
      mixed = std::max(mixed, commutator_apply(a, b, wf).max_abs_coefficient() / scale);
    }
  }
  ordered_json params;
  params["samples"] = kCommutatorSamples;
  params["hbar"] = hbar;
  params["seed"] = kSuiteSeed;
  std::vector<CheckResult> out;
  out.push_back(make_check("heisenberg_left_pair", params, left, tol));
  out.push_back(make_check("heisenberg_right_pair", params, right, tol));
  out.push_back(make_check("mixed_pairs_commute", params, mixed, tol));
  out.push_back(trace_obstruction_demo(N, kTraceTrials));
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Orthonormality, Suite::Table1, Suite::Weyl, Suite::Dft, Suite::Charts,
                  Suite::Commutators, Suite::All}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Orthonormality: return "orthonormality";
    case Suite::Table1: return "table1";
    case Suite::Weyl: return "weyl";
    case Suite::Dft: return "dft";
    case Suite::Charts: return "charts";
    case Suite::Commutators: return "commutators";
    case Suite::All: return "all";
  }
  return "?";
}

std::string VerificationReport::to_json() const {
  ordered_json out;
  out["schema"] = kReportSchema;
  out["tool_version"] = tool_version;
  ordered_json geo;
  geo["a"] = geometry.a();
  geo["b"] = geometry.b();
  geo["h"] = geometry.h();
  geo["N"] = geometry.N() ? ordered_json(*geometry.N()) : ordered_json(nullptr);
  out["geometry"] = std::move(geo);
  out["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["params"] = c.params;
    j["max_residual"] = c.max_residual;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    out["checks"].push_back(std::move(j));
  }
  out["overall_pass"] = overall_pass();
  out["timestamp"] = timestamp;
  return out.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "phasetorus " << tool_version << "  a=" << geometry.a() << " b=" << geometry.b()
     << " h=" << geometry.h() << " N=";
  if (geometry.N()) {
    os << *geometry.N();
  } else {
    os << "(not quantized)";
  }
  os << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-40s %-12s %-12s\n", "status", "check", "residual", "tolerance");
  os << line;
  for (const auto& c : checks) {
    const std::string tol = (c.expect_large ? ">" : "<=") + format_double(c.tolerance);
    std::snprintf(line, sizeof line, "%-6s %-40s %-12s %-12s", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), format_double(c.max_residual).c_str(), tol.c_str());
    os << line;
    if (c.params.contains("operator")) os << "  " << c.params["operator"].get<std::string>();
    if (c.params.contains("basis")) os << " [" << c.params["basis"].get<std::string>() << "]";
    if (c.params.contains("omega")) {
      os << "  omega=" << c.params["omega"][0].get<double>() << (c.params["omega"][1].get<double>() < 0 ? "" : "+")
         << c.params["omega"][1].get<double>() << "i";
    }
    if (c.params.contains("holonomy")) {
      os << "  holonomy=" << c.params["holonomy"][0].get<double>()
         << (c.params["holonomy"][1].get<double>() < 0 ? "" : "+") << c.params["holonomy"][1].get<double>() << "i";
    }
    os << "\n";
  }
  os << (overall_pass() ? "overall: PASS" : "overall: FAIL") << " (" << checks.size() << " checks)\n";
  return os.str();
}

VerificationReport run_verify(const VerifyOptions& options) {
  const TorusGeometry g = resolve_geometry(options.N, options.h, options.a, options.b);
  if (options.tolerance && !(*options.tolerance >= 0.0 && std::isfinite(*options.tolerance))) {
    throw std::invalid_argument("tolerance must be a nonnegative number");
  }
  const double tol = options.tolerance.value_or(kDefaultTolerance);
  const bool all = options.suite == Suite::All;

  VerificationReport report;
  report.geometry = g;
  report.timestamp = options.timestamp.empty() ? utc_timestamp_now() : options.timestamp;
  auto append = [&](std::vector<CheckResult> checks) {
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  };
  if (all || options.suite == Suite::Orthonormality) append(orthonormality_suite(g, tol));
  if (all || options.suite == Suite::Table1) append(table1_verify(g, tol));
  if (all || options.suite == Suite::Weyl) append(weyl_suite(g, tol));
  if (all || options.suite == Suite::Dft) append(dft_suite(g, tol));
  if (all || options.suite == Suite::Charts) append(chart_suite(g, tol));
  if (all || options.suite == Suite::Commutators) append(commutator_suite(g, tol));
  return report;
}

VerificationReport run_quantize(double a, double b, double h, std::string timestamp) {
  VerificationReport report;
  report.geometry = make_geometry(a, b, h);
  report.timestamp = timestamp.empty() ? utc_timestamp_now() : std::move(timestamp);
  const Complex hol = holonomy(report.geometry);
  ordered_json params;
  params["area_over_h"] = report.geometry.area_over_h();
  params["holonomy"] = complex_json(hol);
  CheckResult check = make_check("area_quantization", std::move(params), std::abs(hol - 1.0), kDefaultTolerance);
  check.pass = check.pass && report.geometry.quantized();
  report.checks.push_back(std::move(check));
  return report;
}

std::string dump_basis_csv(const DumpOptions& options) {
  if (options.kind != "qbasis" && options.kind != "pbasis") {
    throw std::invalid_argument("dump kind must be qbasis or pbasis");
  }
  const TorusGeometry g = resolve_geometry(options.N, options.h, options.a, options.b);
  const int N = options.N;
  int n = options.n;
  int m = options.m;
  if (options.reduce) {
    const EquivalenceLabel r = reduce_label(n, m, N, options.kind == "qbasis" ? Basis::Q : Basis::P);
    n = r.n;
    m = r.m;
  }
  if (n < 0 || n >= N || m < 0 || m >= N) {
    throw std::out_of_range("basis labels must lie in [0, N); pass --reduce to fold them");
  }
  const int M = options.M.value_or(kDefaultGridFactor * N);
  const WaveFunction wf = options.kind == "qbasis" ? make_torus_Q_basis(g, n, m, true)
                                                   : make_torus_P_basis(g, n, m);
  return to_csv(sample(wf, g, M));
}

std::string utc_timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace phasetorus
