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

#include "phasetorus/check_result.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phasetorus {

nlohmann::ordered_json CheckResult::fragment_json() const {
  nlohmann::ordered_json out;
  out["check"] = name;
  out["max_residual"] = max_residual;
  out["pass"] = pass;
  out["params"] = params;
  return out;
}

CheckResult make_check(std::string name, nlohmann::ordered_json params, double max_residual,
                       double tolerance, bool expect_large) {
  CheckResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.tolerance = tolerance;
  c.expect_large = expect_large;
  if (!std::isfinite(max_residual)) {
    c.max_residual = std::numeric_limits<double>::max();
    c.pass = false;
    return c;
  }
  c.max_residual = std::abs(max_residual);
  c.pass = expect_large ? c.max_residual > tolerance : c.max_residual <= tolerance;
  return c;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace phasetorus
