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

#include "qboson/qstat.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qboson/qcore.hpp"

namespace qboson::qstat {

using qcore::basic_number;
using qcore::log_basic_number;

ModePoint::ModePoint(double kappa, const Deformation& d) : kappa_(kappa), d_(d) {
  if (!admissible(kappa, d)) {
    throw DomainError("kappa outside the admissible range of the mean occupation");
  }
}

bool ModePoint::admissible(double kappa, const Deformation& d) noexcept {
  if (!(kappa > 0.0)) return false;
  return d.q() > 1.0 ? kappa * d.q() < 1.0 : kappa < 1.0;
}

double occupation(const ModePoint& p) {
  const double kappa = p.kappa();
  const Deformation& d = p.deformation();
  if (d.near_unity()) return kappa / (1.0 - kappa);
  // (1 - kappa)/(1 - q kappa) = 1 + (q - 1) kappa/(1 - q kappa)
  return std::log1p(d.q_minus_one() * kappa / (1.0 - d.q() * kappa)) / d.log_q();
}

double mode_entropy(double n, const Deformation& d) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("mode_entropy requires n >= 0");
  if (n == 0.0) return 0.0;
  // [n+1]/[n] = q + 1/[n] turns the expression into n ln(1 + 1/(q[n])) + ln[n+1].
  if (d.near_unity()) return n * std::log1p(1.0 / n) + std::log1p(n);
  const double inv_q_bn = std::exp(-(d.log_q() + log_basic_number(n, d)));
  return n * std::log1p(inv_q_bn) + log_basic_number(n + 1.0, d);
}

double last_term_identity(double n, const Deformation& d) {
  return n * d.log_q() - std::log(basic_number(n + 1.0, d) - basic_number(n, d));
}

ExtremumResiduals extremum_residuals(double n_here, double n_partner, const Deformation& d) {
  const double q = d.q();
  const double b_here = basic_number(n_here, d);
  const double b_here1 = basic_number(n_here + 1.0, d);
  const double b_partner = basic_number(n_partner, d);
  const double b_partner1 = basic_number(n_partner + 1.0, d);

  const double lhs_a = std::pow(q, n_here);
  const double rhs_a = b_here1 / b_partner1;
  const double lhs_b = b_partner1 / b_partner;
  const double rhs_b = q * b_here1 / b_here;
  return {std::abs(lhs_a - rhs_a) / lhs_a, std::abs(lhs_b - rhs_b) / lhs_b};
}

namespace {

struct OccupationPair {
  double here;
  double partner;
};

OccupationPair occupation_pair(double kappa, const Deformation& d) {
  const double partner = kappa / d.q();
  if (!ModePoint::admissible(kappa, d) || !ModePoint::admissible(partner, d)) {
    throw DomainError("extremum identities need kappa and kappa/q inside the occupation domain");
  }
  return {occupation(ModePoint(kappa, d)), occupation(ModePoint(partner, d))};
}

}  // namespace

ExtremumResiduals extremum_identities(double kappa, const Deformation& d) {
  const auto [here, partner] = occupation_pair(kappa, d);
  return extremum_residuals(here, partner, d);
}

double extremum_condition_residual(double kappa, const Deformation& d) {
  const auto [n, np] = occupation_pair(kappa, d);
  const double q = d.q();
  const double reduced_energy = -std::log(kappa);
  const double b = basic_number(n, d);
  const double b1 = basic_number(n + 1.0, d);
  const double bp = basic_number(np, d);
  const double bp1 = basic_number(np + 1.0, d);
  return np * (std::log(bp1 / (q * bp)) - reduced_energy) - n * (std::log(b1 / b) - reduced_energy) +
         n * d.log_q() - std::log(b1 / bp1);
}

WeightConfig::WeightConfig(std::vector<std::int64_t> occupations,
                           std::vector<std::int64_t> degeneracies)
    : n_(std::move(occupations)), g_(std::move(degeneracies)) {
  if (n_.size() != g_.size()) {
    throw DomainError("occupations and degeneracies must have equal length");
  }
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (n_[i] < 0) throw DomainError("occupation numbers must be non-negative");
    if (g_[i] < 1) throw DomainError("degeneracies must be positive");
  }
}

double log_statistical_weight(const WeightConfig& w, const Deformation& d) {
  std::int64_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t n = w.occupations()[i];
    const std::int64_t g = w.degeneracies()[i];
    if (n > qcore::kMaxFactorialArgument - g + 1) {
      throw OverflowError("statistical weight argument exceeds the q-factorial range");
    }
    top = std::max(top, n + g - 1);
  }
  // Cumulative table ln[k]! for k = 0..top.
  std::vector<double> log_fact(static_cast<std::size_t>(top) + 1, 0.0);
  for (std::int64_t k = 2; k <= top; ++k) {
    log_fact[k] = log_fact[k - 1] + log_basic_number(static_cast<double>(k), d);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t n = w.occupations()[i];
    const std::int64_t g = w.degeneracies()[i];
    total += log_fact[n + g - 1] - log_fact[n] - log_fact[g - 1];
  }
  return total;
}

double approx_weight_entropy(const WeightConfig& w, const Deformation& d) {
  if (!(d.q() > 1.0)) throw DomainError("approx_weight_entropy requires q > 1");
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto n = static_cast<double>(w.occupations()[i]);
    const auto g = static_cast<double>(w.degeneracies()[i]);
    const double l_ng = log_basic_number(n + g, d);
    double term = g * (l_ng - log_basic_number(g, d)) - n * g * d.log_q();
    if (n > 0.0) term += n * (l_ng - log_basic_number(n, d));
    total += term;
  }
  return total;
}

}  // namespace qboson::qstat
