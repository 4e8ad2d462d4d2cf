/*
   Copyright 2026 The qboson Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qboson/deformation.hpp"
#include "qboson/qpolylog.hpp"

/// Invariant suite run by `qboson verify`: exact identities of the q-calculus
/// and the gas thermodynamics, each reduced to a maximum residual over a
/// fixed grid of points and compared against a threshold.
namespace qboson::verify {

struct CheckResult {
  std::string name;
  double q;
  double max_residual;
  double threshold;

  [[nodiscard]] bool passed() const noexcept { return max_residual <= threshold; }
};

struct StirlingRow {
  std::int64_t n;
  double exact;
  double approximation;
  double relative_error;
};

/// |approx - exact| / |exact| for the q-Stirling form of ln [n]!; infinite
/// at n = 1 where ln [1]! = 0. Requires q > 1.
[[nodiscard]] StirlingRow stirling_row(std::int64_t n, const Deformation& d);

struct Report {
  std::vector<CheckResult> checks;
  double stirling_q;
  std::vector<StirlingRow> stirling;

  [[nodiscard]] bool all_passed() const noexcept;
};

inline const std::vector<double> kDefaultQs = {0.5, 0.8, 1.0, 1.3, 1.5, 2.0};

inline constexpr double kDefaultStirlingQ = 1.5;

/// Runs every check at every q. The q-Stirling report uses `stirling_q`
/// when given, otherwise the first q > 1 in the list (none if there is no
/// such q).
[[nodiscard]] Report run(const std::vector<double>& qs, const qpolylog::SeriesPolicy& policy = {},
                         std::optional<double> stirling_q = std::nullopt);

}  // namespace qboson::verify
