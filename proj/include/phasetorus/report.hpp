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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasetorus/check_result.hpp"
#include "phasetorus/torus_quantum.hpp"

namespace phasetorus {

inline constexpr int kReportSchema = 1;
inline constexpr double kDefaultTolerance = 1e-12;

struct VerificationReport {
  std::string tool_version = PHASETORUS_VERSION;
  TorusGeometry geometry{1.0, 1.0, 1.0};
  std::vector<CheckResult> checks;
  std::string timestamp;

  bool overall_pass() const { return all_pass(checks); }
  std::string to_json() const;
  std::string to_text() const;
};

enum class Suite { Orthonormality, Table1, Weyl, Dft, Charts, Commutators, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct VerifyOptions {
  int N = 1;
  double h = 1.0;
  /// Periods; both default to sqrt(N h). When given they must satisfy a b = N h.
  std::optional<double> a;
  std::optional<double> b;
  Suite suite = Suite::All;
  /// Replaces the 1e-12 default of the checks that use it.
  std::optional<double> tolerance;
  /// Empty means the current UTC time.
  std::string timestamp;
};

/// Runs the selected suites. Throws std::invalid_argument on bad options.
VerificationReport run_verify(const VerifyOptions& options);

/// Area quantization diagnostic for one geometry; the single check passes iff
/// a b / h is an integer.
VerificationReport run_quantize(double a, double b, double h, std::string timestamp = {});

struct DumpOptions {
  std::string kind;  // "qbasis" or "pbasis"
  int N = 1;
  int n = 0;
  int m = 0;
  std::optional<int> M;  // defaults to 8 N
  bool reduce = false;
  double h = 1.0;
  std::optional<double> a;
  std::optional<double> b;
};

/// Sampled primed Q-basis or P-basis state as CSV. Throws std::out_of_range
/// for labels outside [0, N) and std::invalid_argument for other bad input.
std::string dump_basis_csv(const DumpOptions& options);

std::string utc_timestamp_now();

}  // namespace phasetorus
