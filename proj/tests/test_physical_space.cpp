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


#include <cmath>
#include <numbers>

#include "doctest.h"
#include "phasetorus/physical_space.hpp"

using namespace phasetorus;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd identity(int N) { return Eigen::MatrixXcd::Identity(N, N); }

}  // namespace

TEST_CASE("label reduction") {
  CHECK(reduce_label(7, 3, 4) == EquivalenceLabel{3, 0, 4});
  CHECK(reduce_label(-1, 0, 4) == EquivalenceLabel{3, 0, 4});
  CHECK(reduce_label(0, 0, 1) == EquivalenceLabel{0, 0, 1});
  CHECK(reduce_label(-9, 5, 4, Basis::P) == EquivalenceLabel{0, 1, 4});
  CHECK(reduce_label(-4000000000LL, 0, 7).n == 4);
  CHECK_THROWS_AS(reduce_label(0, 0, 0), std::invalid_argument);
}

TEST_CASE("clock matrix") {
  CHECK(clock_matrix(1).entries == identity(1));
  Eigen::MatrixXcd two = Eigen::MatrixXcd::Zero(2, 2);
  two(0, 0) = 1.0;
  two(1, 1) = -1.0;
  CHECK(max_abs(clock_matrix(2).entries - two) < 1e-15);
  for (int N : {3, 5, 12}) CHECK(max_abs(power(clock_matrix(N), N).entries - identity(N)) <= 1e-12);
  CHECK_THROWS_AS(clock_matrix(0), std::invalid_argument);
}

TEST_CASE("shift matrix") {
  CHECK(shift_matrix(1).entries == identity(1));
  for (int N : {2, 3, 7, 16}) CHECK(power(shift_matrix(N), N).entries == identity(N));
  const FiniteState moved = apply(shift_matrix(3), FiniteState::basis_vector(Basis::Q, 3, 2));
  CHECK(moved.components == FiniteState::basis_vector(Basis::Q, 3, 0).components);
}

TEST_CASE("clock and shift are unitary") {
  for (int N = 1; N <= 64; ++N) {
    const auto C = clock_matrix(N).entries;
    const auto S = shift_matrix(N).entries;
    CHECK(max_abs(C.adjoint() * C - identity(N)) <= 1e-12);
    CHECK(max_abs(S.adjoint() * S - identity(N)) <= 1e-12);
  }
}

TEST_CASE("Weyl commutation phase") {
  CHECK(std::abs(weyl_commutation_check(1) - Complex{1.0}) < 1e-15);
  const Complex w4 = weyl_commutation_check(4);
  CHECK(std::abs(std::pow(w4, 4) - Complex{1.0}) < 1e-12);
  CHECK(std::abs(w4 - Complex{1.0}) > 0.5);
  // Brute force: clock * shift = omega * shift * clock entrywise.
  for (int N : {2, 3, 5, 7}) {
    const Complex w = weyl_commutation_check(N);
    CHECK(std::abs(w - std::polar(1.0, kTwoPi / N)) < 1e-12);
    const auto CS = (clock_matrix(N) * shift_matrix(N)).entries;
    const auto SC = (shift_matrix(N) * clock_matrix(N)).entries;
    CHECK(max_abs(CS - w * SC) < 1e-12);
    Complex wk = 1.0;
    for (int k = 1; k < N; ++k) {
      wk *= w;
      CHECK(std::abs(wk - Complex{1.0}) > 1e-6);
    }
    const auto SN = power(shift_matrix(N), N).entries;
    CHECK(max_abs(clock_matrix(N).entries * SN - SN * clock_matrix(N).entries) <= 1e-12);
  }
}

TEST_CASE("basis change") {
  const auto K1 = dft_basis_change(1).entries;
  CHECK(std::abs(std::abs(K1(0, 0)) - 1.0) < 1e-15);
  CHECK(dft_normalization(4) == doctest::Approx(0.5));
  for (int N : {1, 2, 3, 4, 8}) {
    const auto K = dft_basis_change(N).entries;
    CHECK(max_abs(K.adjoint() * K - identity(N)) <= 1e-12);
    for (GridOperator op : kAllGridOperators) {
      const auto AQ = table_representation(op, N, Basis::Q).entries;
      const auto AP = table_representation(op, N, Basis::P).entries;
      CHECK(max_abs(K * AQ - AP * K) <= 1e-12);
      CHECK(max_abs(K.adjoint() * AP - AQ * K.adjoint()) <= 1e-12);
    }
  }
  // The shift on Q-coefficients becomes diag(e^{-2 pi i m / N}) on P-coefficients.
  const int N = 4;
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(N, N);
  for (int m = 0; m < N; ++m) D(m, m) = std::polar(1.0, -kTwoPi * m / N);
  CHECK(max_abs(dft_basis_change(N).entries * shift_matrix(N).entries - D * dft_basis_change(N).entries) <= 1e-12);
}

TEST_CASE("grid oracle recovers the basis change") {
  for (int N : {1, 2, 3, 4}) {
    const DftOracleResult r = dft_oracle(default_geometry(N));
    CHECK(r.max_entry_deviation <= 1e-10);
    CHECK(r.flagged.empty());
    CHECK(r.measured_normalization == doctest::Approx(dft_normalization(N)).epsilon(1e-10));
    CHECK(r.smallest_singular_value <= 1e-10);
    if (N > 1) CHECK(r.nullspace_gap > 1e-3);
  }
}

TEST_CASE("prequantum overlaps between the bases are not a fixed multiple of the basis change") {
  // The torus Q- and P-basis states are not mutually unbiased as functions of
  // (q, p), so their raw overlaps cannot serve as the basis-change oracle.
  const int N = 2;
  const TorusGeometry g = default_geometry(N);
  const int M = 16 * N;
  const auto K = dft_basis_change(N).entries;
  double lo = 1e300;
  double hi = 0.0;
  for (int n = 0; n < N; ++n) {
    const GridFunction psi = sample(make_torus_Q_basis(g, n, 0, true), g, M);
    for (int s = 0; s < N; ++s) {
      for (int r = 0; r < N; ++r) {
        const double ratio =
            std::abs(inner_product(psi, sample(make_torus_P_basis(g, s, r), g, M))) / std::abs(K(r, n));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
  }
  CHECK(hi - lo > 0.1);
}

TEST_CASE("closed-form representations match grid matrix elements") {
  for (int N : {1, 2, 3, 4}) {
    const TorusGeometry g = default_geometry(N);
    for (GridOperator op : kAllGridOperators) {
      for (Basis b : {Basis::Q, Basis::P}) {
        CHECK(max_abs(reduced_matrix({op}, g, b).entries - table_representation(op, N, b).entries) <= 1e-12);
      }
    }
    CHECK(max_abs(reduced_matrix({GridOperator::ExpQLeft}, g, Basis::Q).entries - clock_matrix(N).entries) <= 1e-12);
    CHECK(max_abs(reduced_matrix({GridOperator::ExpPLeft}, g, Basis::Q).entries - shift_matrix(N).entries) <= 1e-12);
  }
}

TEST_CASE("gauge labels never enter the reduced representation") {
  const int N = 3;
  const TorusGeometry g = default_geometry(N);
  const std::vector<std::vector<GridOperator>> words = {
      {GridOperator::ExpPLeft, GridOperator::ExpQLeft},
      {GridOperator::ExpQLeft, GridOperator::ExpQLeft, GridOperator::ExpPLeft},
      {GridOperator::ExpPLeft, GridOperator::ExpPLeft, GridOperator::ExpPLeft, GridOperator::ExpQLeft}};
  for (const auto& w : words) {
    const auto base = reduced_matrix(w, g, Basis::Q, 0).entries;
    for (int m : {1, 2, 5, -1}) CHECK(max_abs(reduced_matrix(w, g, Basis::Q, m).entries - base) <= 1e-12);
    FiniteOperator expected{Basis::Q, identity(N)};
    for (GridOperator op : w) expected = table_representation(op, N, Basis::Q) * expected;
    CHECK(max_abs(base - expected.entries) <= 1e-12);
  }
}

TEST_CASE("action table cells") {
  for (int N : {1, 2, 4}) {
    const auto checks = table1_verify(default_geometry(N));
    int cells = 0;
    for (const auto& c : checks) {
      CHECK_MESSAGE(c.pass, c.name << " " << c.params.dump());
      if (c.name == "table1_cell") ++cells;
    }
    CHECK(cells == 8);
  }
}

TEST_CASE("trace obstruction") {
  const auto C = clock_matrix(2).entries;
  const auto S = shift_matrix(2).entries;
  CHECK(std::abs((C * S - S * C).trace()) <= 1e-12);
  const auto A = dft_basis_change(5).entries;
  CHECK((A * A - A * A).cwiseAbs().maxCoeff() == 0.0);
  for (int N : {1, 3, 8}) {
    const CheckResult r = trace_obstruction_demo(N, 100);
    CHECK(r.pass);
    CHECK(r.params["trace_of_identity"] == N);
    CHECK(r.params["heisenberg_realizable"] == false);
  }
}

TEST_CASE("finite operator plumbing") {
  const auto j = nlohmann::json::parse(to_json(shift_matrix(2)));
  CHECK(j["dim"] == 2);
  CHECK(j["basis"] == "Q");
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][2] == nlohmann::json::array({1.0, 0.0}));
  CHECK(nlohmann::json::parse(to_json(dft_basis_change(2)))["basis"] == "P");
  CHECK_THROWS_AS(apply(shift_matrix(3), FiniteState::basis_vector(Basis::Q, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(apply(shift_matrix(2), FiniteState::basis_vector(Basis::P, 2, 0)), std::invalid_argument);
  CHECK(power(clock_matrix(3), 0).entries == identity(3));
}
