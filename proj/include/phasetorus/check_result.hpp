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

#include <string>
#include <vector>

#include "json.hpp"

namespace phasetorus {

/// One named verification outcome: the measured residual against its
/// tolerance. Most checks pass when max_residual <= tolerance; checks that
/// demonstrate a failure mode (an omitted gauge factor, say) pass when the
/// residual is detectably large and record that with `expect_large`.
struct CheckResult {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool expect_large = false;
  bool pass = false;

  /// {"check": name, "max_residual": x, "pass": bool, "params": {...}}
  nlohmann::ordered_json fragment_json() const;
};

/// Builds a CheckResult and evaluates `pass`. Non-finite residuals are
/// clamped to the largest finite double and always fail.
CheckResult make_check(std::string name, nlohmann::ordered_json params, double max_residual,
                       double tolerance, bool expect_large = false);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace phasetorus
