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

// Exact symbolic algebra on phase-space wave functions of the form
//
//   sum_k  A_k * P_k(q, p) * exp(i (c0 + cq q + cp p + cqp q p) / hbar)
//
// together with the left-invariant pair (Q_LEFT, P_LEFT) and the
// right-invariant pair (Q_RIGHT, P_RIGHT) of first-order operators:
//
//   Q_LEFT  = q + i hbar d/dp        P_LEFT  = -i hbar d/dq
//   Q_RIGHT =     i hbar d/dp        P_RIGHT =  p + i hbar d/dq
//
// The family is closed under all four operators and under their
// exponentials exp(i s Op / hbar), which act as affine substitutions times a
// linear phase.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasetorus/polynomial.hpp"

namespace phasetorus {

/// Absolute tolerance under which two phase tuples are the same phase.
inline constexpr double kPhaseMergeTolerance = 1e-12;
/// Relative tolerance of the eigenvalue ratio test.
inline constexpr double kEigenTolerance = 1e-10;

enum class OperatorKind { QLeft, PLeft, QRight, PRight };

inline constexpr std::array<OperatorKind, 4> kAllOperatorKinds = {
    OperatorKind::QLeft, OperatorKind::PLeft, OperatorKind::QRight,
    OperatorKind::PRight};

std::string_view to_string(OperatorKind kind);

/// Phase c0 + cq q + cp p + cqp q p, in action units (divided by hbar on
/// evaluation).
struct PhaseCoefficients {
  double c0 = 0.0;
  double cq = 0.0;
  double cp = 0.0;
  double cqp = 0.0;

  bool operator==(const PhaseCoefficients&) const = default;
};

bool phases_match(const PhaseCoefficients& a, const PhaseCoefficients& b,
                  double tolerance = kPhaseMergeTolerance);

/// One term A * P(q, p) * exp(i phase(q, p) / hbar).
///
/// Canonical form: either the zero term (amplitude 0, empty prefactor) or
/// amplitude exactly 1 with the scale carried by a nonzero prefactor.
class BilinearPhaseTerm {
 public:
  BilinearPhaseTerm(Complex amplitude, PhaseCoefficients phase,
                    Polynomial prefactor, double hbar);

  Complex amplitude() const { return amplitude_; }
  const PhaseCoefficients& phase() const { return phase_; }
  const Polynomial& prefactor() const { return prefactor_; }
  double hbar() const { return hbar_; }

  bool is_zero() const { return prefactor_.is_zero(); }

  /// amplitude * prefactor, i.e. the un-normalized polynomial.
  Polynomial scaled_prefactor() const { return prefactor_ * amplitude_; }

  Complex evaluate(double q, double p) const;

 private:
  Complex amplitude_;
  PhaseCoefficients phase_;
  Polynomial prefactor_;
  double hbar_;
};

/// Finite sum of BilinearPhaseTerm sharing one hbar. Terms with matching
/// phase tuples are merged; terms are sorted by (c0, cq, cp, cqp).
class WaveFunction {
 public:
  /// The zero wave function.
  explicit WaveFunction(double hbar = 1.0);
  WaveFunction(double hbar, std::vector<BilinearPhaseTerm> terms);

  /// amplitude * exp(i phase / hbar) with unit prefactor.
  static WaveFunction plane_phase(PhaseCoefficients phase, double hbar,
                                  Complex amplitude = 1.0);
  static WaveFunction from_term(Complex amplitude, PhaseCoefficients phase,
                                Polynomial prefactor, double hbar);

  double hbar() const { return hbar_; }
  const std::vector<BilinearPhaseTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex evaluate(double q, double p) const;
  double max_abs_coefficient() const;

  WaveFunction& operator+=(const WaveFunction& other);
  WaveFunction& operator-=(const WaveFunction& other);
  WaveFunction& operator*=(Complex s);
  friend WaveFunction operator+(WaveFunction a, const WaveFunction& b) { return a += b; }
  friend WaveFunction operator-(WaveFunction a, const WaveFunction& b) { return a -= b; }
  friend WaveFunction operator*(WaveFunction a, Complex s) { return a *= s; }
  friend WaveFunction operator*(Complex s, WaveFunction a) { return a *= s; }

 private:
  void canonicalize();

  double hbar_;
  std::vector<BilinearPhaseTerm> terms_;
};

/// d/dq and d/dp of a wave function, exactly.
WaveFunction partial_q(const WaveFunction& wf);
WaveFunction partial_p(const WaveFunction& wf);

/// Multiplies every term by exp(i extra / hbar).
WaveFunction multiply_phase(const WaveFunction& wf, const PhaseCoefficients& extra);

/// f(q, p) -> f(q + dq, p + dp).
WaveFunction translate(const WaveFunction& wf, double dq, double dp);

WaveFunction apply_operator(OperatorKind kind, const WaveFunction& wf);

/// (AB - BA) wf.
WaveFunction commutator_apply(OperatorKind a, OperatorKind b, const WaveFunction& wf);

/// exp(i s Op / hbar) wf for real s. The same convention is used for all four
/// kinds, so exp(-i b P_LEFT / hbar) is exp_operator_apply(PLeft, -b, wf).
WaveFunction exp_operator_apply(OperatorKind kind, double s, const WaveFunction& wf);

/// Eigenvalue of `kind` on `wf` when Op wf = lambda wf, otherwise empty.
std::optional<Complex> is_eigenstate(OperatorKind kind, const WaveFunction& wf);

/// Largest coefficient-wise difference between two wave functions, matching
/// terms by phase. Infinite when hbar differs.
double coefficient_distance(const WaveFunction& a, const WaveFunction& b);

/// Structural canonical-form check; every value built through the public API
/// satisfies it.
bool is_canonical(const WaveFunction& wf);

std::string to_json(const WaveFunction& wf);
WaveFunction wave_function_from_json(std::string_view text);

}  // namespace phasetorus
