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

#include "phasetorus/plane_prequantum.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace phasetorus {

namespace {

constexpr double kUnitModulusTolerance = 1e-12;

void require_positive_hbar(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("hbar must be a positive finite number");
  }
}

void require_unit_phase(const DisplacementLabel& d) {
  if (std::abs(std::abs(d.phase) - 1.0) > kUnitModulusTolerance) {
    throw std::invalid_argument("displacement phase must have unit modulus");
  }
}

}  // namespace

WaveFunction make_plane_P_basis(double l, double k, double hbar) {
  require_positive_hbar(hbar);
  return WaveFunction::plane_phase({0.0, k, -l, 0.0}, hbar);
}

WaveFunction make_plane_Q_basis(double l, double k, double hbar, bool primed) {
  require_positive_hbar(hbar);
  // (p - k)(q - l) = pq - k q - l p + k l
  return WaveFunction::plane_phase({primed ? k * l : 0.0, -k, -l, 1.0}, hbar);
}

DisplacementLabel displacement_compose(const DisplacementLabel& first,
                                       const DisplacementLabel& second, double hbar) {
  require_positive_hbar(hbar);
  require_unit_phase(first);
  require_unit_phase(second);
  const double b = first.q_shift;
  const double a = first.p_shift;
  const double q = second.q_shift;
  const double p = second.p_shift;
  const Complex cocycle = std::polar(1.0, (a * q - b * p) / (2.0 * hbar));
  return {q + b, p + a, first.phase * second.phase * cocycle};
}

std::string to_json(const DisplacementLabel& d) {
  nlohmann::ordered_json out;
  out["dq"] = d.q_shift;
  out["dp"] = d.p_shift;
  out["phase"] = {d.phase.real(), d.phase.imag()};
  return out.dump();
}

GaugeField::GaugeField(double hbar) : hbar_(hbar) { require_positive_hbar(hbar); }

double field_strength(const GaugeField& field, PhasePoint /*at*/) {
  // A_p is linear in q with slope 1/hbar and A_q vanishes identically.
  return 1.0 / field.hbar();
}

Complex covariant_derivative_q(const GaugeField& field, const WaveFunction& wf, PhasePoint at) {
  const Complex i{0.0, 1.0};
  return partial_q(wf).evaluate(at.q, at.p) - i * field.a_q(at.q, at.p) * wf.evaluate(at.q, at.p);
}

Complex covariant_derivative_p(const GaugeField& field, const WaveFunction& wf, PhasePoint at) {
  const Complex i{0.0, 1.0};
  return partial_p(wf).evaluate(at.q, at.p) - i * field.a_p(at.q, at.p) * wf.evaluate(at.q, at.p);
}

Complex path_phase(const GaugeField& field, PhasePoint endpoint) {
  if (!std::isfinite(endpoint.q) || !std::isfinite(endpoint.p)) {
    throw std::invalid_argument("path endpoint must be finite");
  }
  // Leg 1, (0,0) -> (q,0): integrand A_q = 0.
  const double leg1 = 0.0;
  // Leg 2, (q,0) -> (q,p): A_p(q, .) is constant along the leg.
  const double leg2 = field.a_p(endpoint.q, 0.0) * endpoint.p;
  return std::polar(1.0, leg1 + leg2);
}

}  // namespace phasetorus
