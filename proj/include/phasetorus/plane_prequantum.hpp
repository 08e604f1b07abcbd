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

// Constructions on the R^2 phase space: the two plane bases, the
// displacement group law, and the constant-field gauge picture.

#pragma once

#include <string>

#include "phasetorus/symbolic_phase.hpp"

namespace phasetorus {

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

/// e^{i(k q - l p)/hbar}: diagonalizes P_LEFT (eigenvalue k) and Q_RIGHT
/// (eigenvalue l).
WaveFunction make_plane_P_basis(double l, double k, double hbar);

/// e^{i p q/hbar} e^{-i(k q + l p)/hbar}, or with `primed` the equivalent
/// e^{i(p - k)(q - l)/hbar}. Diagonalizes Q_LEFT (l) and P_RIGHT (k).
WaveFunction make_plane_Q_basis(double l, double k, double hbar, bool primed);

/// Label of a displacement operator D(q_shift, p_shift) together with its
/// accumulated cocycle phase.
struct DisplacementLabel {
  double q_shift = 0.0;
  double p_shift = 0.0;
  Complex phase{1.0, 0.0};
};

/// D(b, a) D(q, p) = D(q + b, p + a) e^{i(a q - b p)/(2 hbar)}, where
/// `first` = D(b, a) is the left factor.
DisplacementLabel displacement_compose(const DisplacementLabel& first,
                                       const DisplacementLabel& second, double hbar);

std::string to_json(const DisplacementLabel& d);

/// The constant-field potential A_q = 0, A_p = q / hbar, for which
/// Q_LEFT = i hbar (d/dp - i A_p) and P_LEFT = -i hbar (d/dq - i A_q).
class GaugeField {
 public:
  explicit GaugeField(double hbar);

  double hbar() const { return hbar_; }
  double a_q(double /*q*/, double /*p*/) const { return 0.0; }
  double a_p(double q, double /*p*/) const { return q / hbar_; }

 private:
  double hbar_;
};

/// d_q A_p - d_p A_q; constant 1/hbar for the in-scope field.
double field_strength(const GaugeField& field, PhasePoint at);

/// Covariant derivative D_q wf or D_p wf evaluated at a point.
Complex covariant_derivative_q(const GaugeField& field, const WaveFunction& wf, PhasePoint at);
Complex covariant_derivative_p(const GaugeField& field, const WaveFunction& wf, PhasePoint at);

/// exp(i \int A . dxi) along the standard path (0,0) -> (q,0) -> (q,p).
///
/// The path runs along the q-axis first and then parallel to the p-axis.
/// Running the p-leg first at q = 0 would give phase 1 instead of
/// e^{i p q / hbar}, so this order is the one that produces the Q-basis
/// prefactor.
Complex path_phase(const GaugeField& field, PhasePoint endpoint);

}  // namespace phasetorus
