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

#include <cmath>

namespace qboson {

inline constexpr double kDefaultLimitEpsilon = 1e-8;

/// The deformation parameter q together with the width of the band around
/// q = 1 inside which every operation switches to its analytic q -> 1 form.
class Deformation {
 public:
  /// Throws DomainError unless q > 0 and limit_epsilon > 0 (both finite).
  explicit Deformation(double q, double limit_epsilon = kDefaultLimitEpsilon);

  [[nodiscard]] double q() const noexcept { return q_; }
  [[nodiscard]] double limit_epsilon() const noexcept { return limit_epsilon_; }

  /// q - 1, exact for q in [0.5, 2].
  [[nodiscard]] double q_minus_one() const noexcept { return q_ - 1.0; }

  /// ln q computed as log1p(q - 1).
  [[nodiscard]] double log_q() const noexcept { return std::log1p(q_ - 1.0); }

  [[nodiscard]] bool near_unity() const noexcept {
    return std::abs(q_ - 1.0) < limit_epsilon_;
  }

  /// q > 1 outside the limit band.
  [[nodiscard]] bool above_unity() const noexcept { return q_ > 1.0 && !near_unity(); }

 private:
  double q_;
  double limit_epsilon_;
};

}  // namespace qboson
