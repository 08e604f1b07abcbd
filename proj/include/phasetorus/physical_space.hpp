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

// The N-dimensional physical Hilbert space left after identifying torus
// basis states related by shadow operators or by label shifts of N.
//
// Q-basis states Psi_{n m} carry the physical label n and the gauge label m;
// P-basis states Phi_{n m} carry the gauge label n and the physical label m.
// The canonical representative of a class fixes the gauge label to 0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "phasetorus/check_result.hpp"
#include "phasetorus/torus_quantum.hpp"

namespace phasetorus {

enum class Basis { Q, P };

std::string_view to_string(Basis basis);

struct FiniteState {
  Basis basis = Basis::Q;
  Eigen::VectorXcd components;

  int dim() const { return static_cast<int>(components.size()); }
  static FiniteState basis_vector(Basis basis, int N, int index);
};

struct FiniteOperator {
  Basis basis = Basis::Q;
  Eigen::MatrixXcd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Throws std::invalid_argument on dimension or basis mismatch.
FiniteState apply(const FiniteOperator& op, const FiniteState& state);
FiniteOperator operator*(const FiniteOperator& a, const FiniteOperator& b);
FiniteOperator power(const FiniteOperator& op, int exponent);

std::string to_json(const FiniteOperator& op);

struct EquivalenceLabel {
  int n = 0;
  int m = 0;
  int N = 1;

  bool operator==(const EquivalenceLabel&) const = default;
};

/// Least nonnegative residue of the physical label, gauge label set to 0:
/// (n mod N, 0) in the Q-basis and (0, m mod N) in the P-basis.
EquivalenceLabel reduce_label(std::int64_t n, std::int64_t m, int N, Basis basis = Basis::Q);

/// diag(e^{2 pi i n / N}): exp(2 pi i Q_LEFT / b) in the Q-basis.
FiniteOperator clock_matrix(int N);

/// Cyclic shift e_n -> e_{(n+1) mod N}: exp(-2 pi i P_LEFT / a) in the Q-basis.
FiniteOperator shift_matrix(int N);

/// omega with clock * shift = omega * shift * clock. Throws std::logic_error
/// if the two orderings are not proportional.
Complex weyl_commutation_check(int N);

/// Normalization of the basis change, fixed by unitarity: 1 / sqrt(N).
double dft_normalization(int N);

/// K(n, s) = e^{-2 pi i n s / N} / sqrt(N). Column n holds the Q-basis state
/// Psi_n expanded in the P-basis, so K maps Q-basis coefficient vectors to
/// P-basis coefficient vectors and K^dagger maps back. The first index of
/// Psi pairs with the physical (second) index of Phi.
FiniteOperator dft_basis_change(int N);

/// Closed-form reduced matrix of one table operator on the canonical
/// representatives of `basis`.
FiniteOperator table_representation(GridOperator op, int N, Basis basis);

/// Reduced matrix of a word of grid operators (applied first to last),
/// computed from sampled basis states: column c is the canonical state c,
/// row r sums the grid inner products with every sampled representative of
/// class r inside a label window wide enough to contain the image.
/// `gauge_label` is the gauge label of the column states.
FiniteOperator reduced_matrix(const std::vector<GridOperator>& word, const TorusGeometry& geometry,
                              Basis basis, int gauge_label = 0);

/// Eight operator/basis cells of the action table, checked as grid identities
/// on every primed basis state with 0 <= n, m < N, plus the four N-th power
/// identities.
std::vector<CheckResult> table1_verify(const TorusGeometry& geometry, double tolerance = 1e-12);

struct DftOracleResult {
  /// Intertwiner recovered from sampled data, scaled to be unitary and
  /// rotated onto the closed form by one global phase.
  Eigen::MatrixXcd oracle;
  Complex global_phase{1.0, 0.0};
  /// Mean |entry| of the unitary-normalized oracle.
  double measured_normalization = 0.0;
  /// Second-smallest singular value of the intertwining system; nonzero when
  /// the intertwiner is unique up to scale.
  double nullspace_gap = 0.0;
  double smallest_singular_value = 0.0;
  double max_entry_deviation = 0.0;
  /// (n, s) entries where oracle and closed form disagree beyond tolerance.
  std::vector<std::pair<int, int>> flagged;
};

/// Recovers the Q-to-P basis change from grid inner products alone: the
/// reduced matrices of exp(-2 pi i P_LEFT/a) and exp(2 pi i Q_LEFT/b) in both
/// bases determine the intertwiner up to scale.
DftOracleResult dft_oracle(const TorusGeometry& geometry, double tolerance = 1e-10);

/// |tr[A, B]| / (|A| |B|) over random complex pairs; a finite matrix pair can
/// never satisfy [A, B] = i hbar I because the right side has trace i hbar N.
CheckResult trace_obstruction_demo(int N, int trials, std::uint64_t seed = 20261018u,
                                   double tolerance = 1e-10);

}  // namespace phasetorus
