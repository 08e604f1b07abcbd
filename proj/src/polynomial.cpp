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

#include "phasetorus/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace phasetorus {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// s^e with exact integer powers; std::pow is not guaranteed exact.
double ipow(double s, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= s;
  return r;
}

}  // namespace

Polynomial Polynomial::constant(Complex c) { return monomial({0, 0}, c); }

Polynomial Polynomial::monomial(Monomial m, Complex c) {
  Polynomial out;
  out.add_term(m, c);
  return out;
}

bool Polynomial::is_constant() const {
  return coeffs_.empty() ||
         (coeffs_.size() == 1 && coeffs_.begin()->first == Monomial{0, 0});
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : coeffs_) d = std::max(d, m.dq + m.dp);
  return d;
}

Complex Polynomial::coefficient(Monomial m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void Polynomial::add_term(Monomial m, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (inserted) return;
  const Complex prev = it->second;
  const Complex sum = prev + c;
  if (std::abs(sum) <= kCancelTolerance * (std::abs(prev) + std::abs(c))) {
    coeffs_.erase(it);
  } else {
    it->second = sum;
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.coeffs_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.coeffs_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  if (s == Complex{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, c] : coeffs_) c *= s;
  return *this;
}

Polynomial Polynomial::times_q() const {
  Polynomial out;
  for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(Monomial{m.dq + 1, m.dp}, c);
  return out;
}

Polynomial Polynomial::times_p() const {
  Polynomial out;
  for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(Monomial{m.dq, m.dp + 1}, c);
  return out;
}

Polynomial Polynomial::d_dq() const {
  Polynomial out;
  for (const auto& [m, c] : coeffs_) {
    if (m.dq > 0) out.add_term({m.dq - 1, m.dp}, c * static_cast<double>(m.dq));
  }
  return out;
}

Polynomial Polynomial::d_dp() const {
  Polynomial out;
  for (const auto& [m, c] : coeffs_) {
    if (m.dp > 0) out.add_term({m.dq, m.dp - 1}, c * static_cast<double>(m.dp));
  }
  return out;
}

Polynomial Polynomial::translate_q(double s) const {
  if (s == 0.0) return *this;
  Polynomial out;
  for (const auto& [m, c] : coeffs_) {
    for (int k = 0; k <= m.dq; ++k) {
      out.add_term({k, m.dp}, c * (binomial(m.dq, k) * ipow(s, m.dq - k)));
    }
  }
  return out;
}

Polynomial Polynomial::translate_p(double s) const {
  if (s == 0.0) return *this;
  Polynomial out;
  for (const auto& [m, c] : coeffs_) {
    for (int k = 0; k <= m.dp; ++k) {
      out.add_term({m.dq, k}, c * (binomial(m.dp, k) * ipow(s, m.dp - k)));
    }
  }
  return out;
}

Complex Polynomial::evaluate(double q, double p) const {
  Complex sum{};
  for (const auto& [m, c] : coeffs_) sum += c * (ipow(q, m.dq) * ipow(p, m.dp));
  return sum;
}

double Polynomial::max_abs_coefficient() const {
  double r = 0.0;
  for (const auto& [m, c] : coeffs_) r = std::max(r, std::abs(c));
  return r;
}

}  // namespace phasetorus
