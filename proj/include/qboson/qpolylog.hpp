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

#include "qboson/deformation.hpp"
#include "qboson/errors.hpp"

/// The polylogarithm Li_s(z) on [0, 1] and the deformed functions
///
///   g_n(z, q) = (1/ln q) sum_k (q^k - 1) z^k / k^(n+1)
///
/// together with their thermodynamic Jackson derivatives.
namespace qboson::qpolylog {

/// Truncation control shared by every series in this module.
class SeriesPolicy {
 public:
  static constexpr double kDefaultRelTol = 1e-13;
  static constexpr std::int64_t kDefaultMaxTerms = 100'000;

  SeriesPolicy() = default;
  /// Throws DomainError unless rel_tol >= 10 eps and max_terms >= 100.
  SeriesPolicy(double rel_tol, std::int64_t max_terms);

  [[nodiscard]] double rel_tol() const noexcept { return rel_tol_; }
  [[nodiscard]] std::int64_t max_terms() const noexcept { return max_terms_; }

 private:
  double rel_tol_ = kDefaultRelTol;
  std::int64_t max_terms_ = kDefaultMaxTerms;
};

/// Order n of a deformed g_n function; n > 1/2.
class GOrder {
 public:
  explicit GOrder(double n);

  [[nodiscard]] double n() const noexcept { return n_; }

  [[nodiscard]] static GOrder three_halves() { return GOrder(1.5); }
  [[nodiscard]] static GOrder five_halves() { return GOrder(2.5); }
  [[nodiscard]] static GOrder seven_halves() { return GOrder(3.5); }

 private:
  double n_;
};

/// Upper end z_q of the physical fugacity range: 1/q^2 for q > 1 and 1
/// otherwise (including the limit band).
[[nodiscard]] double fugacity_bound(const Deformation& d) noexcept;

/// Li_s(z) = sum_k z^k / k^s for 0 <= z <= 1.
///
/// Any real s is accepted for z < 1. At z = 1 the sum is finite only for
/// s > 1; for s <= 1 it diverges and +inf is returned.
[[nodiscard]] double polylog(double s, double z, const SeriesPolicy& policy = {});

/// g_n(z, q) on the physical range 0 <= z <= z_q. Reduces to Li_n(z) in the
/// limit band. Throws DomainError outside the range.
[[nodiscard]] double g_function(GOrder order, double z, const Deformation& d,
                                const SeriesPolicy& policy = {});

/// Same series as g_function, evaluated on its whole convergence domain
/// (z <= 1/q for q > 1, z <= 1 otherwise) instead of the physical range.
[[nodiscard]] double g_function_extended(GOrder order, double z, const Deformation& d,
                                         const SeriesPolicy& policy = {});

/// z D_z g_n(z, q) from the term-by-term closed form
/// (1/ln^2 q) sum_k (q^k - 1)^2 z^k / k^(n+1). In the limit band this is the
/// ordinary z d/dz Li_n(z) = Li_(n-1)(z). Same domain as g_function.
[[nodiscard]] double g_thermo_derivative(GOrder order, double z, const Deformation& d,
                                         const SeriesPolicy& policy = {});

namespace detail {

/// S_p(s, z; eps) = sum_{k>=1} (e^(k eps) - 1)^p z^k / k^s for p in {0, 1, 2}.
///
/// The terms are summed directly; when they decay slowly the remainder is
/// taken from an Euler-Maclaurin expansion whose error estimate is part of
/// the tolerance test. Requires z >= 0 and e^(p eps) z <= 1 (for eps > 0).
[[nodiscard]] double deformed_power_sum(int power, double s, double z, double log_q,
                                        const SeriesPolicy& policy);

}  // namespace detail

}  // namespace qboson::qpolylog
