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

// Torus phase space [0,b) x [0,a) (q has period b, p has period a) with
// Planck constant h. The constant field 1/hbar makes the line bundle
// consistent only when a*b/h is an integer N.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "phasetorus/check_result.hpp"
#include "phasetorus/symbolic_phase.hpp"

namespace phasetorus {

/// Relative tolerance for recognising a*b/h as an integer.
inline constexpr double kQuantizationTolerance = 1e-9;
inline constexpr int kDefaultGridFactor = 8;

class NotQuantizedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TorusGeometry {
 public:
  /// Throws std::invalid_argument unless a, b, h are positive and finite.
  TorusGeometry(double a, double b, double h);

  double a() const { return a_; }
  double b() const { return b_; }
  double h() const { return h_; }
  double hbar() const;
  double area_over_h() const { return a_ * b_ / h_; }
  std::optional<int> N() const { return n_; }
  bool quantized() const { return n_.has_value(); }

  /// Throws NotQuantizedError when N is absent.
  int require_N() const;

  bool operator==(const TorusGeometry&) const = default;

 private:
  double a_;
  double b_;
  double h_;
  std::optional<int> n_;
};

TorusGeometry make_geometry(double a, double b, double h);

/// Symmetric quantized geometry a = b = sqrt(N h).
TorusGeometry default_geometry(int N, double h = 1.0);

/// e^{i a b / hbar}; 1 exactly when the area is a multiple of h.
Complex holonomy(const TorusGeometry& geometry);

/// Chart-overlap gauge factor e^{i b p / hbar}.
Complex transition_function(const TorusGeometry& geometry, double p);

/// exp(2 pi i (m q / b - n p / a)); with `primed`, times e^{2 pi i n m / N}.
/// The primed phase makes every shift in the operator table phase-free.
WaveFunction make_torus_P_basis(const TorusGeometry& geometry, int n, int m, bool primed = false);

/// exp(2 pi i (p q / h - m q / b - n p / a)), or with `primed`
/// exp(2 pi i N (p/a - m/N)(q/b - n/N)). Q_LEFT eigenvalue n b / N,
/// P_RIGHT eigenvalue m a / N.
WaveFunction make_torus_Q_basis(const TorusGeometry& geometry, int n, int m, bool primed);

namespace detail {
/// The Q-basis expressions evaluated with N = a b / h even when that ratio is
/// not an integer. Only used to demonstrate the non-quantized failure modes.
WaveFunction torus_Q_basis_formula(const TorusGeometry& geometry, int n, int m, bool primed);
}  // namespace detail

/// Two charts I: (-delta, b/2 + delta) and II: (b/2 - delta, b + delta),
/// both for all p. They overlap on an interior strip around q = b/2 and a
/// seam strip around q = 0 (mod b).
struct ChartPair {
  double b = 1.0;
  double delta = 0.125;

  ChartPair(double b, double delta);
};

struct ChartMismatch {
  double interior = 0.0;
  double seam = 0.0;
  double max() const { return interior > seam ? interior : seam; }
};

/// Samples `wf` in both charts on both overlap strips and measures the
/// mismatch, applying the transition function on the seam when
/// `apply_transition` is set. Total on any geometry.
ChartMismatch chart_overlap_mismatch(const TorusGeometry& geometry, const WaveFunction& wf,
                                     const ChartPair& charts, bool apply_transition);

/// Chart consistency of the primed Q-basis state (n, m); tolerance 1e-12.
CheckResult chart_consistency_check(const TorusGeometry& geometry, int n, int m, double delta);

/// Complex samples value(i, j) = f(q = j b / M, p = i a / M), row-major.
///
/// `flux()` is the integer F for which the sampled function is
/// quasi-periodic: f(q + b, p) = e^{2 pi i F p / a} f and
/// f(q, p + a) = e^{2 pi i F q / b} f. It is 0 for the P-basis, N for the
/// Q-basis, and absent for functions without that structure.
class GridFunction {
 public:
  GridFunction(TorusGeometry geometry, int M, std::vector<Complex> values,
               std::optional<int> flux);

  const TorusGeometry& geometry() const { return geometry_; }
  int M() const { return m_; }
  std::optional<int> flux() const { return flux_; }
  const std::vector<Complex>& values() const { return values_; }

  Complex at(int i, int j) const { return values_[static_cast<std::size_t>(i) * m_ + j]; }
  double q(int j) const { return j * geometry_.b() / m_; }
  double p(int i) const { return i * geometry_.a() / m_; }

 private:
  TorusGeometry geometry_;
  int m_;
  std::vector<Complex> values_;
  std::optional<int> flux_;
};

/// Throws on M <= 0 or, for quantized geometries, M not a multiple of N.
GridFunction sample(const WaveFunction& wf, const TorusGeometry& geometry, int M);

/// Left-endpoint Riemann sum of conj(f) g dq dp / (a b).
Complex inner_product(const GridFunction& f, const GridFunction& g);

/// Gram matrix G(r, c) = <states[r], states[c]>.
Eigen::MatrixXcd gram_matrix(const std::vector<GridFunction>& states);

enum class GridOperator { ExpPLeft, ExpQLeft, ExpPRight, ExpQRight };

inline constexpr GridOperator kAllGridOperators[] = {
    GridOperator::ExpPLeft, GridOperator::ExpQLeft, GridOperator::ExpPRight,
    GridOperator::ExpQRight};

std::string_view to_string(GridOperator op);

/// Applies one of
///   exp(-2 pi i P_LEFT / a)  : f(q - b/N, p)
///   exp( 2 pi i Q_LEFT / b)  : e^{2 pi i q / b} f(q, p - a/N)
///   exp(-2 pi i P_RIGHT / a) : e^{-2 pi i p / a} f(q + b/N, p)
///   exp( 2 pi i Q_RIGHT / b) : f(q, p - a/N)
/// as exact index translations by M/N, using the grid's quasi-periodicity to
/// wrap around the fundamental domain. Throws std::invalid_argument when the
/// geometry is not quantized or the grid has no flux.
GridFunction grid_shift_operator(GridOperator op, const GridFunction& f);

/// CSV with header `i,j,q,p,re,im`, one row per sample.
std::string to_csv(const GridFunction& f);

}  // namespace phasetorus
