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

#include "phasetorus/torus_quantum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace phasetorus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kChartTolerance = 1e-12;
constexpr int kChartStripSamples = 16;
constexpr int kChartPSamples = 64;

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

// e^{2 pi i k / M} from the residue of k, so large k loses no accuracy.
Complex unit_root(long long k, int M) {
  long long r = k % M;
  if (r < 0) r += M;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / M);
}

std::optional<long long> as_integer(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= kQuantizationTolerance * std::max(1.0, std::abs(x))) {
    return static_cast<long long>(r);
  }
  return std::nullopt;
}

// Flux F such that the function is quasi-periodic on the torus, when every
// term is a pure phase with integral winding.
std::optional<int> infer_flux(const WaveFunction& wf, const TorusGeometry& g) {
  std::optional<long long> flux;
  for (const auto& t : wf.terms()) {
    if (!t.prefactor().is_constant()) return std::nullopt;
    const auto& c = t.phase();
    const auto f = as_integer(c.cqp * g.a() * g.b() / g.h());
    if (!f || !as_integer(c.cq * g.b() / g.h()) || !as_integer(c.cp * g.a() / g.h())) {
      return std::nullopt;
    }
    if (flux && *flux != *f) return std::nullopt;
    flux = f;
  }
  return static_cast<int>(flux.value_or(0));
}

}  // namespace

TorusGeometry::TorusGeometry(double a, double b, double h) : a_(a), b_(b), h_(h) {
  if (!positive_finite(a) || !positive_finite(b) || !positive_finite(h)) {
    throw std::invalid_argument("torus periods and Planck constant must be positive");
  }
  const double x = a * b / h;
  const double r = std::round(x);
  if (r >= 1.0 && r <= 2147483647.0 && std::abs(x - r) <= kQuantizationTolerance * x) {
    n_ = static_cast<int>(r);
  }
}

double TorusGeometry::hbar() const { return h_ / kTwoPi; }

int TorusGeometry::require_N() const {
  if (!n_) {
    throw NotQuantizedError("torus area is not an integer multiple of h (area/h = " +
                            std::to_string(area_over_h()) + ")");
  }
  return *n_;
}

TorusGeometry make_geometry(double a, double b, double h) { return TorusGeometry(a, b, h); }

TorusGeometry default_geometry(int N, double h) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const double side = std::sqrt(N * h);
  return TorusGeometry(side, side, h);
}

Complex holonomy(const TorusGeometry& geometry) {
  // a b / hbar = 2 pi (a b / h); only the fractional part matters.
  const double x = geometry.area_over_h();
  return std::polar(1.0, kTwoPi * (x - std::round(x)));
}

Complex transition_function(const TorusGeometry& geometry, double p) {
  return std::polar(1.0, geometry.b() * p / geometry.hbar());
}

WaveFunction make_torus_P_basis(const TorusGeometry& geometry, int n, int m, bool primed) {
  const int N = geometry.require_N();
  const double h = geometry.h();
  const double c0 = primed ? static_cast<double>(n) * m * h / N : 0.0;
  return WaveFunction::plane_phase({c0, m * h / geometry.b(), -n * h / geometry.a(), 0.0},
                                   geometry.hbar());
}

WaveFunction make_torus_Q_basis(const TorusGeometry& geometry, int n, int m, bool primed) {
  geometry.require_N();
  return detail::torus_Q_basis_formula(geometry, n, m, primed);
}

namespace detail {

WaveFunction torus_Q_basis_formula(const TorusGeometry& geometry, int n, int m, bool primed) {
  const double h = geometry.h();
  const double a = geometry.a();
  const double b = geometry.b();
  const double N = geometry.N() ? static_cast<double>(*geometry.N()) : geometry.area_over_h();
  // Phases in action units: 2 pi (...) = (...) h / hbar.
  //   primed:   N h/(a b) (p - m a/N)(q - n b/N)
  //   unprimed: p q - m h q / b - n h p / a
  const double cq = -m * h / b;
  const double cp = -n * h / a;
  if (primed) {
    return WaveFunction::plane_phase({static_cast<double>(n) * m * h / N, cq, cp, N * h / (a * b)},
                                     geometry.hbar());
  }
  return WaveFunction::plane_phase({0.0, cq, cp, 1.0}, geometry.hbar());
}

}  // namespace detail

ChartPair::ChartPair(double b_, double delta_) : b(b_), delta(delta_) {
  if (!(delta > 0.0) || !(delta < b / 4.0)) {
    throw std::invalid_argument("chart overlap delta must satisfy 0 < delta < b/4");
  }
}

ChartMismatch chart_overlap_mismatch(const TorusGeometry& geometry, const WaveFunction& wf,
                                     const ChartPair& charts, bool apply_transition) {
  if (charts.b != geometry.b()) throw std::invalid_argument("chart pair built for another torus");
  const double delta = charts.delta;
  const double b = geometry.b();
  const double a = geometry.a();

  std::vector<double> ps;
  for (int k = 0; k < kChartPSamples; ++k) ps.push_back(k * a / kChartPSamples);
  if (geometry.N()) ps.push_back(a / (2.0 * *geometry.N()));
  ps.push_back(a / 2.0);

  // Both charts use the same expression in their own coordinate ranges.
  auto chart = [&](double q, double p) { return wf.evaluate(q, p); };

  ChartMismatch out;
  for (int k = 1; k < kChartStripSamples; ++k) {
    const double offset = -delta + 2.0 * delta * k / kChartStripSamples;
    for (double p : ps) {
      const double q_mid = b / 2.0 + offset;
      out.interior = std::max(out.interior, std::abs(chart(q_mid, p) - chart(q_mid, p)));

      // Chart I coordinate q in (-delta, delta) is chart II coordinate q + b.
      const double q1 = offset;
      const Complex gauge = apply_transition ? transition_function(geometry, p) : Complex{1.0};
      out.seam = std::max(out.seam, std::abs(chart(q1 + b, p) - gauge * chart(q1, p)));
    }
  }
  return out;
}

CheckResult chart_consistency_check(const TorusGeometry& geometry, int n, int m, double delta) {
  const int N = geometry.require_N();
  const ChartMismatch mm = chart_overlap_mismatch(
      geometry, make_torus_Q_basis(geometry, n, m, true), ChartPair(geometry.b(), delta), true);
  nlohmann::ordered_json params;
  params["N"] = N;
  params["n"] = n;
  params["m"] = m;
  params["delta"] = delta;
  params["interior_mismatch"] = mm.interior;
  params["seam_mismatch"] = mm.seam;
  return make_check("chart_consistency", std::move(params), mm.max(), kChartTolerance);
}

GridFunction::GridFunction(TorusGeometry geometry, int M, std::vector<Complex> values,
                           std::optional<int> flux)
    : geometry_(geometry), m_(M), values_(std::move(values)), flux_(flux) {
  if (M <= 0) throw std::invalid_argument("grid size M must be positive");
  if (values_.size() != static_cast<std::size_t>(M) * M) {
    throw std::invalid_argument("grid values must hold M*M samples");
  }
}

GridFunction sample(const WaveFunction& wf, const TorusGeometry& geometry, int M) {
  if (M <= 0) throw std::invalid_argument("grid size M must be positive");
  if (geometry.N() && M % *geometry.N() != 0) {
    throw std::invalid_argument("grid size M must be a multiple of N");
  }
  std::vector<Complex> values(static_cast<std::size_t>(M) * M);
  for (int i = 0; i < M; ++i) {
    const double p = i * geometry.a() / M;
    for (int j = 0; j < M; ++j) {
      values[static_cast<std::size_t>(i) * M + j] = wf.evaluate(j * geometry.b() / M, p);
    }
  }
  return GridFunction(geometry, M, std::move(values), infer_flux(wf, geometry));
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  if (f.M() != g.M() || !(f.geometry() == g.geometry())) {
    throw std::invalid_argument("inner product needs grids on the same geometry and size");
  }
  Complex sum{};
  for (std::size_t k = 0; k < f.values().size(); ++k) sum += std::conj(f.values()[k]) * g.values()[k];
  return sum / static_cast<double>(f.values().size());
}

Eigen::MatrixXcd gram_matrix(const std::vector<GridFunction>& states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd G(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) G(r, c) = inner_product(states[r], states[c]);
  }
  return G;
}

std::string_view to_string(GridOperator op) {
  switch (op) {
    case GridOperator::ExpPLeft: return "exp(-2 pi i P_LEFT/a)";
    case GridOperator::ExpQLeft: return "exp(2 pi i Q_LEFT/b)";
    case GridOperator::ExpPRight: return "exp(-2 pi i P_RIGHT/a)";
    case GridOperator::ExpQRight: return "exp(2 pi i Q_RIGHT/b)";
  }
  return "?";
}

GridFunction grid_shift_operator(GridOperator op, const GridFunction& f) {
  const int N = f.geometry().require_N();
  if (!f.flux()) {
    throw std::invalid_argument("grid function is not quasi-periodic; shifts are undefined");
  }
  const int M = f.M();
  const int s = M / N;
  const long long F = *f.flux();

  // f at integer grid indices outside [0, M), unwrapped through the
  // quasi-periodicity f(q + tj b, p + ti a) = e^{2 pi i F (ti q/b + tj p/a)} f(q, p).
  auto fetch = [&](int i, int j) {
    const int ti = (i >= 0 ? i : i - M + 1) / M;
    const int tj = (j >= 0 ? j : j - M + 1) / M;
    const int i0 = i - ti * M;
    const int j0 = j - tj * M;
    const Complex base = f.at(i0, j0);
    if (F == 0 || (ti == 0 && tj == 0)) return base;
    return base * unit_root(F * (static_cast<long long>(ti) * j0 + static_cast<long long>(tj) * i0), M);
  };

  std::vector<Complex> out(f.values().size());
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      Complex v;
      switch (op) {
        case GridOperator::ExpPLeft:
          v = fetch(i, j - s);
          break;
        case GridOperator::ExpQLeft:
          v = unit_root(j, M) * fetch(i - s, j);
          break;
        case GridOperator::ExpPRight:
          v = unit_root(-i, M) * fetch(i, j + s);
          break;
        case GridOperator::ExpQRight:
          v = fetch(i - s, j);
          break;
      }
      out[static_cast<std::size_t>(i) * M + j] = v;
    }
  }
  return GridFunction(f.geometry(), M, std::move(out), f.flux());
}

std::string to_csv(const GridFunction& f) {
  std::string out = "i,j,q,p,re,im\n";
  char line[160];
  for (int i = 0; i < f.M(); ++i) {
    for (int j = 0; j < f.M(); ++j) {
      const Complex v = f.at(i, j);
      std::snprintf(line, sizeof line, "%d,%d,%.17g,%.17g,%.17g,%.17g\n", i, j, f.q(j), f.p(i),
                    v.real(), v.imag());
      out += line;
    }
  }
  return out;
}

}  // namespace phasetorus
