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

#pragma once

#include <complex>
#include <compare>
#include <map>

namespace phasetorus {

using Complex = std::complex<double>;

/// Exponent pair of a monomial q^dq p^dp.
struct Monomial {
  int dq = 0;
  int dp = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Sparse bivariate polynomial in (q, p) with complex coefficients.
///
/// Entries are kept in lexicographic exponent order and never hold an exact
/// zero. Additions that cancel to within kCancelTolerance of the operands'
/// magnitude are treated as exact cancellations.
class Polynomial {
 public:
  static constexpr double kCancelTolerance = 1e-13;

  Polynomial() = default;
  static Polynomial constant(Complex c);
  static Polynomial monomial(Monomial m, Complex c);

  const std::map<Monomial, Complex>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  int degree() const;
  Complex coefficient(Monomial m) const;

  /// Lexicographically first entry; undefined on the zero polynomial.
  std::pair<Monomial, Complex> leading() const { return *coeffs_.begin(); }

  void add_term(Monomial m, Complex c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }

  Polynomial times_q() const;
  Polynomial times_p() const;
  Polynomial d_dq() const;
  Polynomial d_dp() const;

  /// P(q + s, p), expanded binomially.
  Polynomial translate_q(double s) const;
  /// P(q, p + s), expanded binomially.
  Polynomial translate_p(double s) const;

  Complex evaluate(double q, double p) const;

  double max_abs_coefficient() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Monomial, Complex> coeffs_;
};

}  // namespace phasetorus
