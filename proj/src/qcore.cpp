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

#include "qboson/qcore.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qboson {

Deformation::Deformation(double q, double limit_epsilon) : q_(q), limit_epsilon_(limit_epsilon) {
  if (!std::isfinite(q) || q <= 0.0) {
    throw DomainError("deformation parameter q must be a positive finite number, got " +
                      std::to_string(q));
  }
  if (!std::isfinite(limit_epsilon) || limit_epsilon <= 0.0) {
    throw DomainError("limit_epsilon must be positive");
  }
}

namespace qcore {

double basic_number(double x, const Deformation& d) {
  if (d.near_unity()) {
    // Three-term expansion of (q^x - 1)/(q - 1) in delta = q - 1.
    const double delta = d.q_minus_one();
    return x + delta * x * (x - 1.0) / 2.0 + delta * delta * x * (x - 1.0) * (x - 2.0) / 6.0;
  }
  return std::expm1(x * d.log_q()) / d.q_minus_one();
}

double log_basic_number(double x, const Deformation& d) {
  if (!(x > 0.0)) throw DomainError("ln [x] requires x > 0");
  if (!d.near_unity() && d.q() > 1.0) {
    const double xl = x * d.log_q();
    if (xl > 35.0) {
      // [x] = q^x (1 - q^-x)/(q - 1)
      return xl - std::log(d.q_minus_one()) + std::log1p(-std::exp(-xl));
    }
  }
  return std::log(basic_number(x, d));
}

double basic_number_inverse(double b, const Deformation& d) {
  const double delta = d.q_minus_one();
  if (!(1.0 + delta * b > 0.0)) {
    throw DomainError("basic_number_inverse requires 1 + (q-1) b > 0");
  }
  if (d.near_unity()) {
    return b + delta * b * (1.0 - b) / 2.0 + delta * delta * b * (4.0 * b * b - 3.0 * b - 1.0) / 12.0;
  }
  return std::log1p(delta * b) / d.log_q();
}

double log_basic_factorial(std::int64_t n, const Deformation& d) {
  if (n < 0) throw DomainError("log_basic_factorial requires n >= 0");
  if (n > kMaxFactorialArgument) {
    throw OverflowError("log_basic_factorial argument " + std::to_string(n) +
                        " exceeds the supported range");
  }
  // Neumaier-compensated running sum; [1] = 1 contributes nothing.
  double sum = 0.0;
  double compensation = 0.0;
  for (std::int64_t k = 2; k <= n; ++k) {
    const double term = log_basic_number(static_cast<double>(k), d);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

double q_stirling(std::int64_t n, const Deformation& d, bool include_tail) {
  if (!(d.q() > 1.0)) throw DomainError("q-Stirling approximation is only defined for q > 1");
  if (n < 1) throw DomainError("q-Stirling approximation requires n >= 1");
  const double nn = static_cast<double>(n);
  const double lq = d.log_q();
  double value = nn * log_basic_number(nn, d) - 0.5 * nn * nn * lq;
  if (include_tail) value -= nn * std::exp(-nn * lq);
  return value;
}

}  // namespace qcore
}  // namespace qboson
