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

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>

#include "qboson/deformation.hpp"
#include "qboson/errors.hpp"

/// q-calculus primitives: basic numbers, q-factorials, q-Stirling and the
/// Jackson derivative.
namespace qboson::qcore {

/// Largest argument accepted by log_basic_factorial.
inline constexpr std::int64_t kMaxFactorialArgument = 50'000'000;

/// The basic number [x] = (q^x - 1)/(q - 1).
[[nodiscard]] double basic_number(double x, const Deformation& d);

/// ln [x] for x > 0, evaluated without forming q^x when that would overflow.
[[nodiscard]] double log_basic_number(double x, const Deformation& d);

/// Inverse of basic_number: ln(1 + (q-1) b)/ln q.
/// Throws DomainError when 1 + (q-1) b <= 0.
[[nodiscard]] double basic_number_inverse(double b, const Deformation& d);

/// ln [n]! as a running sum of ln [k]. Throws OverflowError beyond
/// kMaxFactorialArgument and DomainError for n < 0.
[[nodiscard]] double log_basic_factorial(std::int64_t n, const Deformation& d);

/// q-Stirling form n ln[n] - (n^2/2) ln q, optionally minus n/q^n.
/// Only defined for q > 1; n must be positive.
[[nodiscard]] double q_stirling(std::int64_t n, const Deformation& d, bool include_tail = false);

namespace detail {
/// Centered difference step for the q -> 1 branch of the derivatives.
[[nodiscard]] inline double central_step(double z) {
  return 6.0554544523933395e-06 * std::max(1.0, std::abs(z));  // cbrt(eps)
}
inline void require_nonzero(double z) {
  if (z == 0.0) throw DomainError("Jackson derivative is undefined at z = 0");
}
}  // namespace detail

/// Jackson derivative (f(qz) - f(z))/(z (q - 1)). In the limit band it is a
/// centered finite-difference estimate of f'(z).
template <std::invocable<double> F>
[[nodiscard]] double jackson_derivative(F&& f, double z, const Deformation& d) {
  detail::require_nonzero(z);
  if (d.near_unity()) {
    const double h = detail::central_step(z);
    return (f(z + h) - f(z - h)) / (2.0 * h);
  }
  return (f(d.q() * z) - f(z)) / (z * d.q_minus_one());
}

/// The thermodynamic Jackson derivative ((q-1)/ln q) times the Jackson
/// derivative, i.e. (f(qz) - f(z))/(z ln q).
template <std::invocable<double> F>
[[nodiscard]] double thermo_derivative(F&& f, double z, const Deformation& d) {
  detail::require_nonzero(z);
  if (d.near_unity()) {
    const double h = detail::central_step(z);
    return (f(z + h) - f(z - h)) / (2.0 * h);
  }
  return (f(d.q() * z) - f(z)) / (z * d.log_q());
}

}  // namespace qboson::qcore
