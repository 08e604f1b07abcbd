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

#include "phasetorus/physical_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace phasetorus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWeylTolerance = 1e-12;

void require_dim(int N) {
  if (N < 1) throw std::invalid_argument("dimension N must be at least 1");
}

Complex root_of_unity(std::int64_t k, int N) {
  std::int64_t r = k % N;
  if (r < 0) r += N;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / N);
}

Eigen::MatrixXcd cyclic_shift(int N) {
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 0; n < N; ++n) S((n + 1) % N, n) = 1.0;
  return S;
}

Eigen::MatrixXcd phase_diagonal(int N, int sign) {
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 0; n < N; ++n) D(n, n) = root_of_unity(sign * n, N);
  return D;
}

// Primed basis state with the given physical and gauge labels.
WaveFunction basis_state(const TorusGeometry& g, Basis basis, int physical, int gauge) {
  return basis == Basis::Q ? make_torus_Q_basis(g, physical, gauge, true)
                           : make_torus_P_basis(g, gauge, physical, true);
}

double max_abs_difference(const GridFunction& x, const GridFunction& y, Complex phase) {
  double worst = 0.0;
  for (std::size_t k = 0; k < x.values().size(); ++k) {
    worst = std::max(worst, std::abs(x.values()[k] - phase * y.values()[k]));
  }
  return worst;
}

}  // namespace

std::string_view to_string(Basis basis) { return basis == Basis::Q ? "Q" : "P"; }

FiniteState FiniteState::basis_vector(Basis basis, int N, int index) {
  require_dim(N);
  if (index < 0 || index >= N) throw std::out_of_range("basis index outside [0, N)");
  FiniteState s{basis, Eigen::VectorXcd::Zero(N)};
  s.components(index) = 1.0;
  return s;
}

FiniteState apply(const FiniteOperator& op, const FiniteState& state) {
  if (op.dim() != state.dim()) throw std::invalid_argument("operator and state dimensions differ");
  if (op.basis != state.basis) throw std::invalid_argument("operator and state use different bases");
  return {state.basis, op.entries * state.components};
}

FiniteOperator operator*(const FiniteOperator& a, const FiniteOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimensions differ");
  if (a.basis != b.basis) throw std::invalid_argument("operators use different bases");
  return {a.basis, a.entries * b.entries};
}

FiniteOperator power(const FiniteOperator& op, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative operator power");
  FiniteOperator out{op.basis, Eigen::MatrixXcd::Identity(op.dim(), op.dim())};
  for (int k = 0; k < exponent; ++k) out.entries = out.entries * op.entries;
  return out;
}

std::string to_json(const FiniteOperator& op) {
  nlohmann::ordered_json out;
  out["dim"] = op.dim();
  out["basis"] = std::string(to_string(op.basis));
  auto entries = nlohmann::ordered_json::array();
  for (int r = 0; r < op.dim(); ++r) {
    for (int c = 0; c < op.dim(); ++c) entries.push_back({op.entries(r, c).real(), op.entries(r, c).imag()});
  }
  out["entries"] = std::move(entries);
  return out.dump();
}

EquivalenceLabel reduce_label(std::int64_t n, std::int64_t m, int N, Basis basis) {
  require_dim(N);
  auto residue = [N](std::int64_t x) {
    std::int64_t r = x % N;
    return static_cast<int>(r < 0 ? r + N : r);
  };
  if (basis == Basis::Q) return {residue(n), 0, N};
  return {0, residue(m), N};
}

FiniteOperator clock_matrix(int N) {
  require_dim(N);
  return {Basis::Q, phase_diagonal(N, +1)};
}

FiniteOperator shift_matrix(int N) {
  require_dim(N);
  return {Basis::Q, cyclic_shift(N)};
}

Complex weyl_commutation_check(int N) {
  const Eigen::MatrixXcd C = clock_matrix(N).entries;
  const Eigen::MatrixXcd S = shift_matrix(N).entries;
  const Eigen::MatrixXcd cs = C * S;
  const Eigen::MatrixXcd sc = S * C;
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  sc.cwiseAbs().maxCoeff(&r, &c);
  const Complex omega = cs(r, c) / sc(r, c);
  if ((cs - omega * sc).cwiseAbs().maxCoeff() > kWeylTolerance) {
    throw std::logic_error("clock and shift do not commute up to a scalar");
  }
  return omega;
}

double dft_normalization(int N) {
  require_dim(N);
  return 1.0 / std::sqrt(static_cast<double>(N));
}

FiniteOperator dft_basis_change(int N) {
  const double c = dft_normalization(N);
  Eigen::MatrixXcd K(N, N);
  for (int n = 0; n < N; ++n) {
    for (int s = 0; s < N; ++s) K(s, n) = c * root_of_unity(-static_cast<std::int64_t>(n) * s, N);
  }
  return {Basis::P, K};
}

FiniteOperator table_representation(GridOperator op, int N, Basis basis) {
  require_dim(N);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(N, N);
  switch (op) {
    case GridOperator::ExpPLeft:
      return {basis, basis == Basis::Q ? cyclic_shift(N) : phase_diagonal(N, -1)};
    case GridOperator::ExpQLeft:
      return {basis, basis == Basis::Q ? phase_diagonal(N, +1) : cyclic_shift(N)};
    case GridOperator::ExpPRight:
    case GridOperator::ExpQRight:
      // Shadow operators: a phase set by the gauge label (0 here) or a shift
      // of the gauge label, both trivial on the canonical representatives.
      return {basis, I};
  }
  throw std::logic_error("unknown grid operator");
}

FiniteOperator reduced_matrix(const std::vector<GridOperator>& word, const TorusGeometry& geometry,
                              Basis basis, int gauge_label) {
  const int N = geometry.require_N();
  const int L = static_cast<int>(word.size());
  const int K = L / N + 2;
  // Every label in the window must be distinguishable on the grid.
  const int M = N * std::max({kDefaultGridFactor, 2 * K + 2, (2 * L + 2 + N - 1) / N});

  std::map<std::pair<int, int>, GridFunction> cache;
  auto sampled = [&](int physical, int gauge) -> const GridFunction& {
    auto it = cache.find({physical, gauge});
    if (it == cache.end()) {
      it = cache.emplace(std::pair{physical, gauge},
                         sample(basis_state(geometry, basis, physical, gauge), geometry, M))
               .first;
    }
    return it->second;
  };

  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(N, N);
  for (int c = 0; c < N; ++c) {
    GridFunction image = sampled(c, gauge_label);
    for (GridOperator op : word) image = grid_shift_operator(op, image);
    for (int r = 0; r < N; ++r) {
      Complex sum{};
      for (int k = -K; k <= K; ++k) {
        for (int g = gauge_label - L; g <= gauge_label + L; ++g) {
          sum += inner_product(sampled(r + k * N, g), image);
        }
      }
      R(r, c) = sum;
    }
  }
  return {basis, R};
}

std::vector<CheckResult> table1_verify(const TorusGeometry& geometry, double tolerance) {
  const int N = geometry.require_N();
  const int M = kDefaultGridFactor * N;

  struct Cell {
    GridOperator op;
    Basis basis;
    const char* expected;
  };
  // Image of the primed state (n, m), as (dn, dm, phase exponent k) meaning
  // e^{2 pi i k / N} * state(n + dn, m + dm).
  struct Image {
    int dn;
    int dm;
    std::int64_t k;
  };
  auto image = [](const Cell& cell, int n, int m) -> Image {
    const bool q = cell.basis == Basis::Q;
    switch (cell.op) {
      case GridOperator::ExpPLeft: return q ? Image{1, 0, 0} : Image{0, 0, -m};
      case GridOperator::ExpQLeft: return q ? Image{0, 0, n} : Image{0, 1, 0};
      case GridOperator::ExpPRight: return q ? Image{0, 0, -m} : Image{1, 0, 0};
      case GridOperator::ExpQRight: return q ? Image{0, 1, 0} : Image{0, 0, n};
    }
    return {0, 0, 0};
  };
  const Cell cells[] = {
      {GridOperator::ExpPLeft, Basis::P, "e^{-2 pi i m/N} Phi_{n,m}"},
      {GridOperator::ExpPLeft, Basis::Q, "Psi_{n+1,m}"},
      {GridOperator::ExpQLeft, Basis::P, "Phi_{n,m+1}"},
      {GridOperator::ExpQLeft, Basis::Q, "e^{2 pi i n/N} Psi_{n,m}"},
      {GridOperator::ExpPRight, Basis::P, "Phi_{n+1,m}"},
      {GridOperator::ExpPRight, Basis::Q, "e^{-2 pi i m/N} Psi_{n,m}"},
      {GridOperator::ExpQRight, Basis::P, "e^{2 pi i n/N} Phi_{n,m}"},
      {GridOperator::ExpQRight, Basis::Q, "Psi_{n,m+1}"},
  };

  // State (n, m) in the table's labelling: first index n, second index m.
  auto state = [&](Basis basis, int n, int m) {
    return sample(basis == Basis::Q ? make_torus_Q_basis(geometry, n, m, true)
                                    : make_torus_P_basis(geometry, n, m, true),
                  geometry, M);
  };

  std::vector<CheckResult> out;
  for (const Cell& cell : cells) {
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
      for (int m = 0; m < N; ++m) {
        const Image img = image(cell, n, m);
        const GridFunction lhs = grid_shift_operator(cell.op, state(cell.basis, n, m));
        const GridFunction rhs = state(cell.basis, n + img.dn, m + img.dm);
        worst = std::max(worst, max_abs_difference(lhs, rhs, root_of_unity(img.k, N)));
      }
    }
    nlohmann::ordered_json params;
    params["N"] = N;
    params["M"] = M;
    params["operator"] = std::string(to_string(cell.op));
    params["basis"] = std::string(to_string(cell.basis));
    params["expected"] = cell.expected;
    out.push_back(make_check("table1_cell", std::move(params), worst, tolerance));
  }

  // N-th powers that act as the identity on each basis.
  const struct {
    GridOperator op;
    Basis basis;
  } identities[] = {{GridOperator::ExpQLeft, Basis::Q},
                    {GridOperator::ExpPRight, Basis::Q},
                    {GridOperator::ExpPLeft, Basis::P},
                    {GridOperator::ExpQRight, Basis::P}};
  for (const auto& id : identities) {
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
      for (int m = 0; m < N; ++m) {
        const GridFunction start = state(id.basis, n, m);
        GridFunction g = start;
        for (int k = 0; k < N; ++k) g = grid_shift_operator(id.op, g);
        worst = std::max(worst, max_abs_difference(g, start, 1.0));
      }
    }
    nlohmann::ordered_json params;
    params["N"] = N;
    params["M"] = M;
    params["operator"] = std::string(to_string(id.op)) + "^N";
    params["basis"] = std::string(to_string(id.basis));
    params["expected"] = "identity";
    out.push_back(make_check("table1_power_identity", std::move(params), worst, tolerance));
  }
  return out;
}

DftOracleResult dft_oracle(const TorusGeometry& geometry, double tolerance) {
  const int N = geometry.require_N();
  const int U = N * N;
  const GridOperator generators[] = {GridOperator::ExpPLeft, GridOperator::ExpQLeft};

  // X A_Q(op) - A_P(op) X = 0 for both generators; X(i, k) is unknown i + k N.
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(2 * U, U);
  int block = 0;
  for (GridOperator op : generators) {
    const Eigen::MatrixXcd AQ = reduced_matrix({op}, geometry, Basis::Q).entries;
    const Eigen::MatrixXcd AP = reduced_matrix({op}, geometry, Basis::P).entries;
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        const int row = block * U + i + j * N;
        for (int k = 0; k < N; ++k) {
          system(row, i + k * N) += AQ(k, j);
          system(row, k + j * N) -= AP(i, k);
        }
      }
    }
    ++block;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  DftOracleResult out;
  out.smallest_singular_value = sv(U - 1);
  out.nullspace_gap = U > 1 ? sv(U - 2) : 1.0;

  Eigen::MatrixXcd X(N, N);
  const Eigen::VectorXcd v = svd.matrixV().col(U - 1);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) X(i, k) = v(i + k * N);
  }
  // Unitarity fixes the scale; one global phase is free.
  X *= std::sqrt(static_cast<double>(N)) / X.norm();
  const Eigen::MatrixXcd closed = dft_basis_change(N).entries;
  const Complex overlap = (X.adjoint() * closed).trace();
  out.global_phase = overlap / std::abs(overlap);
  out.oracle = out.global_phase * X;
  out.measured_normalization = out.oracle.cwiseAbs().mean();
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      const double d = std::abs(out.oracle(i, k) - closed(i, k));
      out.max_entry_deviation = std::max(out.max_entry_deviation, d);
      if (d > tolerance) out.flagged.emplace_back(k, i);
    }
  }
  return out;
}

CheckResult trace_obstruction_demo(int N, int trials, std::uint64_t seed, double tolerance) {
  require_dim(N);
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_matrix = [&] {
    Eigen::MatrixXcd A(N, N);
    for (int r = 0; r < N; ++r) {
      for (int c = 0; c < N; ++c) A(r, c) = Complex(gauss(rng), gauss(rng));
    }
    return A;
  };
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXcd A = random_matrix();
    const Eigen::MatrixXcd B = random_matrix();
    const Complex tr = (A * B - B * A).trace();
    worst = std::max(worst, std::abs(tr) / (A.norm() * B.norm()));
  }
  nlohmann::ordered_json params;
  params["N"] = N;
  params["trials"] = trials;
  params["seed"] = seed;
  // [A, B] = i hbar I would need trace i hbar N, never the zero found here.
  params["trace_of_identity"] = N;
  params["heisenberg_realizable"] = false;
  return make_check("trace_obstruction", std::move(params), worst, tolerance);
}

}  // namespace phasetorus
