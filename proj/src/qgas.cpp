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

#include "qboson/qgas.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qboson/qstat.hpp"

namespace qboson::qgas {

using qpolylog::g_function;
using qpolylog::g_thermo_derivative;
using qpolylog::GOrder;

namespace {

double g32(double z, const Deformation& d, const SeriesPolicy& p) {
  return g_function(GOrder::three_halves(), z, d, p);
}
double g52(double z, const Deformation& d, const SeriesPolicy& p) {
  return g_function(GOrder::five_halves(), z, d, p);
}

// Fugacity actually used for the power sums: the condensed phase sits at z_q.
double effective_fugacity(const GasPoint& g) {
  return g.regime() == Regime::below ? max_fugacity(g.deformation()) : g.z();
}

void require_reduced_temperature(double t) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw DomainError("reduced temperature must be positive and finite, got " + std::to_string(t));
  }
}

}  // namespace

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::below:
      return "below";
    case Regime::critical:
      return "critical";
    case Regime::above:
      return "above";
  }
  return "unknown";
}

double max_fugacity(const Deformation& d) noexcept { return qpolylog::fugacity_bound(d); }

double solve_fugacity(double t, const Deformation& d, double tol, const SeriesPolicy& policy) {
  require_reduced_temperature(t);
  if (t < 1.0) {
    throw DomainError("fugacity is pinned at z_q below the transition (t < 1)");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("solver tolerance must be positive");
  }
  const double z_max = max_fugacity(d);
  if (t == 1.0) {
    return z_max;
  }
  const double target = g32(z_max, d, policy) * std::pow(t, -1.5);
  // g_3/2 is increasing in z, so the root is bracketed by [0, z_q].
  double lo = 0.0;
  double hi = z_max;
  for (int it = 0; it < kSolverMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double residual = g32(mid, d, policy) - target;
    if (std::abs(residual) <= tol * target) {
      return mid;
    }
    if (mid <= lo || mid >= hi) {
      // Bracket exhausted at machine resolution; the achievable residual
      // is already below tol.
      throw ConvergenceError("fugacity bisection stalled before reaching tolerance");
    }
    (residual < 0.0 ? lo : hi) = mid;
  }
  throw ConvergenceError("fugacity bisection did not converge within the iteration limit");
}

GasPoint GasPoint::at_temperature(const Deformation& d, double t, const SeriesPolicy& policy,
                                  double solver_tol) {
  require_reduced_temperature(t);
  if (t < 1.0) {
    return condensed(d, t, policy);
  }
  if (t == 1.0) {
    return {d, t, max_fugacity(d), Regime::critical, policy};
  }
  return {d, t, solve_fugacity(t, d, solver_tol, policy), Regime::above, policy};
}

GasPoint GasPoint::condensed(const Deformation& d, double t, const SeriesPolicy& policy) {
  require_reduced_temperature(t);
  if (t > 1.0) {
    throw DomainError("no condensate above the transition (t > 1)");
  }
  return {d, t, max_fugacity(d), Regime::below, policy};
}

GasPoint GasPoint::at_fugacity(const Deformation& d, double z, const SeriesPolicy& policy) {
  const double z_max = max_fugacity(d);
  if (!(z > 0.0) || z > z_max) {
    throw DomainError("fugacity must lie in (0, z_q]");
  }
  if (z == z_max) {
    return {d, 1.0, z, Regime::critical, policy};
  }
  const double t = std::pow(g32(z_max, d, policy) / g32(z, d, policy), 2.0 / 3.0);
  return {d, t, z, Regime::above, policy};
}

double pressure(const GasPoint& g) {
  return g52(effective_fugacity(g), g.deformation(), g.policy());
}

Density density(const GasPoint& g) {
  const Deformation& d = g.deformation();
  const double thermal = g32(effective_fugacity(g), d, g.policy());
  if (g.regime() != Regime::below) {
    return {thermal, thermal, 0.0};
  }
  // Below the transition the total density is pinned at its critical value
  // in units of lambda(T_c^q)^3, i.e. thermal * t^(-3/2) at temperature t.
  const double total = thermal * std::pow(g.t(), -1.5);
  return {total, thermal, 1.0 - std::pow(g.t(), 1.5)};
}

double energy(const GasPoint& g) {
  // (2/sqrt(pi)) int x^(3/2) n(x) dx = (2/sqrt(pi)) Gamma(5/2) g_5/2.
  const double prefactor = 2.0 * std::tgamma(2.5) / std::sqrt(std::numbers::pi);
  return prefactor * pressure(g);
}

double entropy_density(const GasPoint& g) {
  const Deformation& d = g.deformation();
  const double z = effective_fugacity(g);
  const double s = 2.5 * g52(z, d, g.policy());
  if (g.regime() == Regime::below) {
    return s;
  }
  return s - g32(z, d, g.policy()) * std::log(z);
}

OneSided transition_entropy(const Deformation& d, const SeriesPolicy& policy) {
  const double z = max_fugacity(d);
  const double below = 2.5 * g52(z, d, policy);
  return {below, below - g32(z, d, policy) * std::log(z)};
}

double tc_ratio(const Deformation& d, const SeriesPolicy& policy) {
  if (d.near_unity()) {
    return 1.0;
  }
  const double zeta = qpolylog::polylog(1.5, 1.0, policy);
  return std::pow(zeta / g32(max_fugacity(d), d, policy), 2.0 / 3.0);
}

double latent_heat_over_T(const Deformation& d, const SeriesPolicy& policy) {
  const double z = max_fugacity(d);
  return 2.5 * g52(z, d, policy) / g32(z, d, policy);
}

double clausius_check(const Deformation& d, double t, double step, const SeriesPolicy& policy) {
  require_reduced_temperature(t);
  if (!(step > 0.0) || !(t - step > 0.0) || !(t + step < 1.0)) {
    throw DomainError("clausius_check needs 0 < t - step < t + step < 1");
  }
  // Temperatures in units of T_c^q, lengths in units of lambda(T_c^q):
  // P(T) = T^(5/2) g_5/2(z_q) in the condensed phase.
  auto coexistence_pressure = [&](double temp) {
    return std::pow(temp, 2.5) * pressure(GasPoint::at_temperature(d, temp, policy));
  };
  const double dp_dt = (coexistence_pressure(t + step) - coexistence_pressure(t - step)) / (2.0 * step);
  // L = T * latent_heat_over_T; v_c = lambda(T)^3 / g_3/2(z_q) = T^(-3/2) / g_3/2(z_q).
  const double v_c = std::pow(t, -1.5) / g32(max_fugacity(d), d, policy);
  const double rhs = latent_heat_over_T(d, policy) / v_c;
  return std::abs(dp_dt - rhs) / std::abs(rhs);
}

double fugacity_beta_logderivative(const GasPoint& g) {
  if (g.regime() == Regime::below) {
    throw DomainError("fugacity is constant below the transition");
  }
  const Deformation& d = g.deformation();
  const double zd5 = g_thermo_derivative(GOrder::five_halves(), g.z(), d, g.policy());
  const double zd3 = g_thermo_derivative(GOrder::three_halves(), g.z(), d, g.policy());
  return 1.5 * zd5 / zd3;
}

double heat_capacity(const GasPoint& g) {
  const Deformation& d = g.deformation();
  const SeriesPolicy& p = g.policy();
  const double z = effective_fugacity(g);
  const double zd7 = g_thermo_derivative(GOrder::seven_halves(), z, d, p);
  const double n = g32(z, d, p);
  if (g.regime() == Regime::below) {
    return 3.75 * zd7 / n * std::pow(g.t(), 1.5);
  }
  const double zd5 = g_thermo_derivative(GOrder::five_halves(), z, d, p);
  const double zd3 = g_thermo_derivative(GOrder::three_halves(), z, d, p);
  // In the undeformed limit zd3 = Li_1/2(1) is infinite at z = 1 and the
  // ratio term correctly vanishes.
  return 3.75 * zd7 / n - 2.25 * (zd5 / n) * (zd5 / zd3);
}

double cv_jump(const Deformation& d, const SeriesPolicy& policy) {
  if (d.near_unity()) {
    return 0.0;
  }
  const double below = heat_capacity(GasPoint::condensed(d, 1.0, policy));
  const double above = heat_capacity(GasPoint::at_temperature(d, 1.0, policy));
  return below - above;
}

double classical_cv(const Deformation& d) noexcept {
  if (d.near_unity()) {
    return 1.5;
  }
  return 1.5 * d.q_minus_one() / d.log_q();
}

Observables observables(const GasPoint& g) {
  return {pressure(g),        density(g).total, entropy_density(g),
          energy(g),          heat_capacity(g), density(g).condensate_fraction};
}

ModeSpectrum::ModeSpectrum(std::vector<double> energies, std::vector<double> weights)
    : energies_(std::move(energies)), weights_(std::move(weights)) {
  if (energies_.size() != weights_.size()) {
    throw DomainError("mode spectrum needs one weight per energy");
  }
  for (std::size_t i = 0; i < energies_.size(); ++i) {
    if (!(energies_[i] >= 0.0) || !std::isfinite(energies_[i])) {
      throw DomainError("mode energies must be finite and non-negative");
    }
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw DomainError("mode weights must be finite and positive");
    }
    if (i > 0 && energies_[i] < energies_[i - 1]) {
      throw DomainError("mode energies must be sorted ascending");
    }
  }
}

ModeSpectrum ModeSpectrum::sqrt_density_of_states(double spacing, double cutoff) {
  if (!(spacing > 0.0) || !(cutoff > spacing) || !std::isfinite(cutoff)) {
    throw DomainError("need 0 < spacing < cutoff");
  }
  const auto count = static_cast<std::size_t>(std::ceil(cutoff / spacing));
  std::vector<double> x(count);
  std::vector<double> w(count);
  const double norm = 2.0 / std::sqrt(std::numbers::pi);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = (static_cast<double>(i) + 0.5) * spacing;
    w[i] = norm * std::sqrt(x[i]) * spacing;
  }
  return {std::move(x), std::move(w)};
}

ModeSums discrete_oracle(const ModeSpectrum& spectrum, double z, const Deformation& d) {
  if (!(z > 0.0)) {
    throw DomainError("fugacity must be positive");
  }
  ModeSums sums{0.0, 0.0, 0.0, 0.0};
  const auto& x = spectrum.energies();
  const auto& w = spectrum.weights();
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double kappa = z * std::exp(-x[i]);
    const qstat::ModePoint mode(kappa, d);
    const double n = qstat::occupation(mode);
    sums.particles += w[i] * n;
    sums.energy += w[i] * x[i] * n;
    sums.entropy += w[i] * qstat::mode_entropy(n, d);
    sums.log_partition -= w[i] * std::log1p(-kappa);
  }
  return sums;
}

double loop_closure_residual(const ModeSums& sums, double z) noexcept {
  const double legendre = sums.log_partition + sums.energy - sums.particles * std::log(z);
  return std::abs(sums.entropy - legendre) / std::abs(sums.entropy);
}

}  // namespace qboson::qgas
