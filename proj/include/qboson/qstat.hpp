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
#include <vector>

#include "qboson/deformation.hpp"
#include "qboson/errors.hpp"

/// Statistics of a single q-boson mode and the deformed statistical weight.
namespace qboson::qstat {

/// The Boltzmann-like variable kappa = z exp(-beta eps) of one mode.
///
/// The mean occupation is real and non-negative only for kappa in (0, 1/q)
/// when q > 1 and in (0, 1) when q <= 1; the constructor enforces that range.
class ModePoint {
 public:
  ModePoint(double kappa, const Deformation& d);

  [[nodiscard]] static bool admissible(double kappa, const Deformation& d) noexcept;

  [[nodiscard]] double kappa() const noexcept { return kappa_; }
  [[nodiscard]] const Deformation& deformation() const noexcept { return d_; }

 private:
  double kappa_;
  Deformation d_;
};

/// Mean occupation (1/ln q) ln((1 - kappa)/(1 - q kappa)); the Bose-Einstein
/// value kappa/(1 - kappa) in the limit band.
[[nodiscard]] double occupation(const ModePoint& p);

/// Entropy of one mode holding n quanta on average:
/// -n ln[n] + (n+1) ln[n+1] - n ln q.
[[nodiscard]] double mode_entropy(double n, const Deformation& d);

/// n ln q - ln([n+1] - [n]); vanishes identically.
[[nodiscard]] double last_term_identity(double n, const Deformation& d);

struct ExtremumResiduals {
  double identity_a;  ///< relative residual of q^n(x) = [n(x)+1]/[n(qx)+1]
  double identity_b;  ///< relative residual of [n(qx)+1]/[n(qx)] = q [n(x)+1]/[n(x)]
};

/// Residuals of the two functional identities for a pair of occupations,
/// `n_here` at x and `n_partner` at q x, where x = exp(beta eps)/z = 1/kappa.
[[nodiscard]] ExtremumResiduals extremum_residuals(double n_here, double n_partner,
                                                   const Deformation& d);

/// extremum_residuals evaluated with the true occupations at kappa and at
/// its partner kappa/q. Throws DomainError when either point is inadmissible.
[[nodiscard]] ExtremumResiduals extremum_identities(double kappa, const Deformation& d);

/// Raw residual of the full entropy-extremization condition at kappa, with
/// the reduced energy beta(eps - mu) = -ln kappa.
[[nodiscard]] double extremum_condition_residual(double kappa, const Deformation& d);

/// Occupations n_i and sub-cell degeneracies g_i of a cell partition.
class WeightConfig {
 public:
  WeightConfig(std::vector<std::int64_t> occupations, std::vector<std::int64_t> degeneracies);

  [[nodiscard]] const std::vector<std::int64_t>& occupations() const noexcept { return n_; }
  [[nodiscard]] const std::vector<std::int64_t>& degeneracies() const noexcept { return g_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_.size(); }

 private:
  std::vector<std::int64_t> n_;
  std::vector<std::int64_t> g_;
};

/// ln W_q = sum_i ln( [n_i+g_i-1]! / ([n_i]! [g_i-1]!) ).
[[nodiscard]] double log_statistical_weight(const WeightConfig& w, const Deformation& d);

/// Large-n form of ln W_q obtained with the q-Stirling approximation:
/// sum_i n_i ln([n_i+g_i]/[n_i]) + g_i ln([n_i+g_i]/[g_i]) - n_i g_i ln q.
/// Only meaningful for large occupations; requires q > 1.
[[nodiscard]] double approx_weight_entropy(const WeightConfig& w, const Deformation& d);

}  // namespace qboson::qstat
