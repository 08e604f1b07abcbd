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

#include "phasetorus/symbolic_phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace phasetorus {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_hbar(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("hbar must be a positive finite number");
  }
}

auto phase_key(const PhaseCoefficients& c) { return std::tie(c.c0, c.cq, c.cp, c.cqp); }

// Polynomial D with d/dq (P e^{i phi/hbar}) = D e^{i phi/hbar}.
Polynomial derivative_q(const BilinearPhaseTerm& t) {
  const auto& c = t.phase();
  Polynomial gradient = Polynomial::constant(kI * c.cq / t.hbar());
  gradient.add_term({0, 1}, kI * c.cqp / t.hbar());
  Polynomial out = t.prefactor().d_dq();
  Polynomial product;
  for (const auto& [m, g] : gradient.coefficients()) {
    for (const auto& [n, f] : t.prefactor().coefficients()) {
      product.add_term({m.dq + n.dq, m.dp + n.dp}, g * f);
    }
  }
  return out + product;
}

Polynomial derivative_p(const BilinearPhaseTerm& t) {
  const auto& c = t.phase();
  Polynomial gradient = Polynomial::constant(kI * c.cp / t.hbar());
  gradient.add_term({1, 0}, kI * c.cqp / t.hbar());
  Polynomial out = t.prefactor().d_dp();
  Polynomial product;
  for (const auto& [m, g] : gradient.coefficients()) {
    for (const auto& [n, f] : t.prefactor().coefficients()) {
      product.add_term({m.dq + n.dq, m.dp + n.dp}, g * f);
    }
  }
  return out + product;
}

template <typename F>
WaveFunction map_terms(const WaveFunction& wf, F&& f) {
  std::vector<BilinearPhaseTerm> out;
  out.reserve(wf.terms().size());
  for (const auto& t : wf.terms()) out.push_back(f(t));
  return WaveFunction(wf.hbar(), std::move(out));
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::QLeft: return "Q_LEFT";
    case OperatorKind::PLeft: return "P_LEFT";
    case OperatorKind::QRight: return "Q_RIGHT";
    case OperatorKind::PRight: return "P_RIGHT";
  }
  return "?";
}

bool phases_match(const PhaseCoefficients& a, const PhaseCoefficients& b, double tolerance) {
  return std::abs(a.c0 - b.c0) <= tolerance && std::abs(a.cq - b.cq) <= tolerance &&
         std::abs(a.cp - b.cp) <= tolerance && std::abs(a.cqp - b.cqp) <= tolerance;
}

BilinearPhaseTerm::BilinearPhaseTerm(Complex amplitude, PhaseCoefficients phase,
                                     Polynomial prefactor, double hbar)
    : amplitude_(amplitude), phase_(phase), prefactor_(std::move(prefactor)), hbar_(hbar) {
  require_hbar(hbar);
  if (amplitude_ == Complex{} || prefactor_.is_zero()) {
    amplitude_ = 0.0;
    prefactor_ = Polynomial{};
    return;
  }
  // Only multiplications here, so dyadic inputs stay exact.
  if (amplitude_ != Complex{1.0, 0.0}) {
    prefactor_ *= amplitude_;
    amplitude_ = 1.0;
  }
}

Complex BilinearPhaseTerm::evaluate(double q, double p) const {
  if (is_zero()) return {};
  const double arg = (phase_.c0 + phase_.cq * q + phase_.cp * p + phase_.cqp * q * p) / hbar_;
  return amplitude_ * prefactor_.evaluate(q, p) * std::polar(1.0, arg);
}

WaveFunction::WaveFunction(double hbar) : hbar_(hbar) { require_hbar(hbar); }

WaveFunction::WaveFunction(double hbar, std::vector<BilinearPhaseTerm> terms)
    : hbar_(hbar), terms_(std::move(terms)) {
  require_hbar(hbar);
  for (const auto& t : terms_) {
    if (t.hbar() != hbar_) throw std::invalid_argument("terms must share one hbar");
  }
  canonicalize();
}

WaveFunction WaveFunction::plane_phase(PhaseCoefficients phase, double hbar, Complex amplitude) {
  return from_term(amplitude, phase, Polynomial::constant(1.0), hbar);
}

WaveFunction WaveFunction::from_term(Complex amplitude, PhaseCoefficients phase,
                                     Polynomial prefactor, double hbar) {
  return WaveFunction(hbar, {BilinearPhaseTerm(amplitude, phase, std::move(prefactor), hbar)});
}

void WaveFunction::canonicalize() {
  struct Group {
    PhaseCoefficients phase;
    Polynomial sum;
  };
  std::vector<Group> groups;
  for (const auto& t : terms_) {
    if (t.is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return phases_match(g.phase, t.phase()); });
    if (it == groups.end()) {
      groups.push_back({t.phase(), t.scaled_prefactor()});
    } else {
      it->sum += t.scaled_prefactor();
    }
  }
  std::vector<BilinearPhaseTerm> merged;
  merged.reserve(groups.size());
  for (auto& g : groups) {
    if (g.sum.is_zero()) continue;
    merged.emplace_back(1.0, g.phase, std::move(g.sum), hbar_);
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return phase_key(a.phase()) < phase_key(b.phase());
  });
  terms_ = std::move(merged);
}

Complex WaveFunction::evaluate(double q, double p) const {
  Complex sum{};
  for (const auto& t : terms_) sum += t.evaluate(q, p);
  return sum;
}

double WaveFunction::max_abs_coefficient() const {
  double r = 0.0;
  for (const auto& t : terms_) r = std::max(r, t.scaled_prefactor().max_abs_coefficient());
  return r;
}

WaveFunction& WaveFunction::operator+=(const WaveFunction& other) {
  if (other.hbar_ != hbar_) throw std::invalid_argument("cannot add wave functions with different hbar");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

WaveFunction& WaveFunction::operator-=(const WaveFunction& other) { return *this += other * -1.0; }

WaveFunction& WaveFunction::operator*=(Complex s) {
  if (s == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t = BilinearPhaseTerm(t.amplitude() * s, t.phase(), t.prefactor(), hbar_);
  return *this;
}

WaveFunction partial_q(const WaveFunction& wf) {
  return map_terms(wf, [](const BilinearPhaseTerm& t) {
    return BilinearPhaseTerm(t.amplitude(), t.phase(), derivative_q(t), t.hbar());
  });
}

WaveFunction partial_p(const WaveFunction& wf) {
  return map_terms(wf, [](const BilinearPhaseTerm& t) {
    return BilinearPhaseTerm(t.amplitude(), t.phase(), derivative_p(t), t.hbar());
  });
}

WaveFunction multiply_phase(const WaveFunction& wf, const PhaseCoefficients& extra) {
  return map_terms(wf, [&](const BilinearPhaseTerm& t) {
    PhaseCoefficients c = t.phase();
    c.c0 += extra.c0;
    c.cq += extra.cq;
    c.cp += extra.cp;
    c.cqp += extra.cqp;
    return BilinearPhaseTerm(t.amplitude(), c, t.prefactor(), t.hbar());
  });
}

WaveFunction translate(const WaveFunction& wf, double dq, double dp) {
  return map_terms(wf, [&](const BilinearPhaseTerm& t) {
    // phi(q + dq, p + dp) expanded in the monomials 1, q, p, qp.
    const auto& c = t.phase();
    PhaseCoefficients shifted{c.c0 + c.cq * dq + c.cp * dp + c.cqp * dq * dp,
                              c.cq + c.cqp * dp, c.cp + c.cqp * dq, c.cqp};
    return BilinearPhaseTerm(t.amplitude(), shifted,
                             t.prefactor().translate_q(dq).translate_p(dp), t.hbar());
  });
}

WaveFunction apply_operator(OperatorKind kind, const WaveFunction& wf) {
  const Complex ihbar = kI * wf.hbar();
  return map_terms(wf, [&](const BilinearPhaseTerm& t) {
    Polynomial image;
    switch (kind) {
      case OperatorKind::QLeft:
        image = t.prefactor().times_q() + ihbar * derivative_p(t);
        break;
      case OperatorKind::PLeft:
        image = -ihbar * derivative_q(t);
        break;
      case OperatorKind::QRight:
        image = ihbar * derivative_p(t);
        break;
      case OperatorKind::PRight:
        image = t.prefactor().times_p() + ihbar * derivative_q(t);
        break;
    }
    return BilinearPhaseTerm(t.amplitude(), t.phase(), std::move(image), t.hbar());
  });
}

WaveFunction commutator_apply(OperatorKind a, OperatorKind b, const WaveFunction& wf) {
  return apply_operator(a, apply_operator(b, wf)) - apply_operator(b, apply_operator(a, wf));
}

WaveFunction exp_operator_apply(OperatorKind kind, double s, const WaveFunction& wf) {
  switch (kind) {
    case OperatorKind::QRight:  // exp(-s d/dp)
      return translate(wf, 0.0, -s);
    case OperatorKind::PLeft:  // exp(s d/dq)
      return translate(wf, s, 0.0);
    case OperatorKind::QLeft:  // e^{i s q / hbar} exp(-s d/dp)
      return multiply_phase(translate(wf, 0.0, -s), {0.0, s, 0.0, 0.0});
    case OperatorKind::PRight:  // e^{i s p / hbar} exp(-s d/dq)
      return multiply_phase(translate(wf, -s, 0.0), {0.0, 0.0, s, 0.0});
  }
  throw std::logic_error("unknown operator kind");
}

std::optional<Complex> is_eigenstate(OperatorKind kind, const WaveFunction& wf) {
  if (wf.is_zero()) return std::nullopt;
  const WaveFunction image = apply_operator(kind, wf);
  if (image.is_zero()) return Complex{};

  const BilinearPhaseTerm& first = wf.terms().front();
  const auto [lead_monomial, lead] = first.prefactor().leading();
  auto match = std::find_if(image.terms().begin(), image.terms().end(), [&](const auto& t) {
    return phases_match(t.phase(), first.phase());
  });
  if (match == image.terms().end()) return std::nullopt;
  const Complex lambda = match->scaled_prefactor().coefficient(lead_monomial) /
                         (first.amplitude() * lead);

  const double scale = std::max(image.max_abs_coefficient(), std::abs(lambda) * wf.max_abs_coefficient());
  if (coefficient_distance(image, wf * lambda) > kEigenTolerance * scale) return std::nullopt;
  return lambda;
}

double coefficient_distance(const WaveFunction& a, const WaveFunction& b) {
  if (a.hbar() != b.hbar()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(b.terms().size(), false);
  for (const auto& ta : a.terms()) {
    const Polynomial pa = ta.scaled_prefactor();
    Polynomial pb;
    for (std::size_t j = 0; j < b.terms().size(); ++j) {
      if (!used[j] && phases_match(ta.phase(), b.terms()[j].phase())) {
        used[j] = true;
        pb = b.terms()[j].scaled_prefactor();
        break;
      }
    }
    for (const auto& [m, c] : pa.coefficients()) worst = std::max(worst, std::abs(c - pb.coefficient(m)));
    for (const auto& [m, c] : pb.coefficients()) worst = std::max(worst, std::abs(pa.coefficient(m) - c));
  }
  for (std::size_t j = 0; j < b.terms().size(); ++j) {
    if (!used[j]) worst = std::max(worst, b.terms()[j].scaled_prefactor().max_abs_coefficient());
  }
  return worst;
}

bool is_canonical(const WaveFunction& wf) {
  const auto& ts = wf.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    if (t.is_zero() || t.amplitude() == Complex{} || t.hbar() != wf.hbar()) return false;
    if (t.amplitude() != Complex{1.0, 0.0}) return false;
    for (const auto& [m, c] : t.prefactor().coefficients()) {
      if (c == Complex{} || m.dq < 0 || m.dp < 0) return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (phases_match(ts[j].phase(), t.phase())) return false;
      if (!(phase_key(ts[j].phase()) < phase_key(t.phase()))) return false;
    }
  }
  return true;
}

std::string to_json(const WaveFunction& wf) {
  nlohmann::ordered_json out;
  out["hbar"] = wf.hbar();
  out["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : wf.terms()) {
    nlohmann::ordered_json term;
    term["amp"] = {t.amplitude().real(), t.amplitude().imag()};
    term["c0"] = t.phase().c0;
    term["cq"] = t.phase().cq;
    term["cp"] = t.phase().cp;
    term["cqp"] = t.phase().cqp;
    auto pref = nlohmann::ordered_json::array();
    for (const auto& [m, c] : t.prefactor().coefficients()) {
      pref.push_back({m.dq, m.dp, c.real(), c.imag()});
    }
    term["prefactor"] = std::move(pref);
    out["terms"].push_back(std::move(term));
  }
  return out.dump();
}

WaveFunction wave_function_from_json(std::string_view text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
    const double hbar = in.at("hbar").get<double>();
    std::vector<BilinearPhaseTerm> terms;
    for (const auto& t : in.at("terms")) {
      const auto& amp = t.at("amp");
      Polynomial pref;
      for (const auto& e : t.at("prefactor")) {
        const int dq = e.at(0).get<int>();
        const int dp = e.at(1).get<int>();
        if (dq < 0 || dp < 0) throw std::invalid_argument("negative exponent in prefactor");
        pref.add_term({dq, dp}, {e.at(2).get<double>(), e.at(3).get<double>()});
      }
      PhaseCoefficients c{t.at("c0").get<double>(), t.at("cq").get<double>(),
                          t.at("cp").get<double>(), t.at("cqp").get<double>()};
      terms.emplace_back(Complex{amp.at(0).get<double>(), amp.at(1).get<double>()}, c,
                         std::move(pref), hbar);
    }
    return WaveFunction(hbar, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed wave function JSON: ") + e.what());
  }
}

}  // namespace phasetorus
