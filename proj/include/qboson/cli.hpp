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

#include <iosfwd>
#include <string>
#include <vector>

/// The `qboson` command line: gfun | tc | cv | stirling | verify.
namespace qboson::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kInvalidConfig = 2,
  kNonConvergence = 3,
};

/// Runs the command line `args` (without the program name). Tabular output
/// goes to --out when given, otherwise to `out`; diagnostics go to `err`.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A value as written to CSV: 15 significant digits.
[[nodiscard]] std::string format_value(double v);

}  // namespace qboson::cli
