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

#include <string_view>
#include <vector>

#include "qboson/deformation.hpp"
#include "qboson/errors.hpp"
#include "qboson/qpolylog.hpp"

/// Thermodynamics of the ideal q-Bose gas in the thermodynamic limit.
///
/// All observables are dimensionless. Extensive densities are in units of
/// the thermal volume lambda^3 at the current temperature, energies in
/// units of T, and the temperature itself is the reduced t = T/T_c^q.
namespace qboson::qgas {

using qpolylog::SeriesPolicy;

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr int kSolverMaxIterations = 200;

enum class Regime { below, critical, above };

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

/// z_q: 1/q^2 for q > 1, otherwise 1.
[[nodiscard]] double max_fugacity(const Deformation& d) noexcept;

/// Fugacity above the transition: the z in (0, z_q] with
/// g_3/2(z, q) = g_3/2(z_q, q) t^(-3/2), found by bisection. The residual is
/// measured relative to the target value. Requires t >= 1.
[[nodiscard]] double solve_fugacity(double t, const Deformation& d, double tol = kDefaultSolverTol,
                                    const SeriesPolicy& policy = {});

/// A resolved thermodynamic state. At t = 1 the regime is `critical` and the
/// above-transition expressions are used (the limit t -> 1+).
class GasPoint {
 public:
  /// State at reduced temperature t > 0.
  [[nodiscard]] static GasPoint at_temperature(const Deformation& d, double t,
                                               const SeriesPolicy& policy = {},
                                               double solver_tol = kDefaultSolverTol);
  /// Condensed-phase state at 0 < t <= 1 (z pinned at z_q). At t = 1 this
  /// is the limit t -> 1- of the transition.
  [[nodiscard]] static GasPoint condensed(const Deformation& d, double t,
                                          const SeriesPolicy& policy = {});
  /// Non-condensed state with fugacity 0 < z <= z_q; t follows from z.
  [[nodiscard]] static GasPoint at_fugacity(const Deformation& d, double z,
                                            const SeriesPolicy& policy = {});

  [[nodiscard]] const Deformation& deformation() const noexcept { return d_; }
  [[nodiscard]] double t() const noexcept { return t_; }
  [[nodiscard]] double z() const noexcept { return z_; }
  [[nodiscard]] Regime regime() const noexcept { return regime_; }
  [[nodiscard]] const SeriesPolicy& policy() const noexcept { return policy_; }

 private:
  GasPoint(const Deformation& d, double t, double z, Regime r, const SeriesPolicy& p)
      : d_(d), t_(t), z_(z), regime_(r), policy_(p) {}

  Deformation d_;
  double t_;
  double z_;
  Regime regime_;
  SeriesPolicy policy_;
};

/// P lambda^3 / T.
[[nodiscard]] double pressure(const GasPoint& g);

struct Density {
  double total;                ///< N lambda^3 / V
  double thermal;              ///< non-condensed part
  double condensate_fraction;  ///< n_0 / N
};

[[nodiscard]] Density density(const GasPoint& g);

/// U lambda^3 / (V T) from the energy-weighted occupation integral.
[[nodiscard]] double energy(const GasPoint& g);

/// S lambda^3 / V.
[[nodiscard]] double entropy_density(const GasPoint& g);

struct OneSided {
  double from_below;
  double from_above;
};

/// Entropy density at the transition from either side. For q > 1 the two
/// differ by g_3/2(z_q, q) ln q^2.
[[nodiscard]] OneSided transition_entropy(const Deformation& d, const SeriesPolicy& policy = {});

/// Ratio T_c^q / T_c of condensation temperatures at equal density,
/// (zeta(3/2)/g_3/2(z_q, q))^(2/3).
[[nodiscard]] double tc_ratio(const Deformation& d, const SeriesPolicy& policy = {});

/// L_q / T = (5/2) g_5/2(z_q, q) / g_3/2(z_q, q).
[[nodiscard]] double latent_heat_over_T(const Deformation& d, const SeriesPolicy& policy = {});

/// Relative residual between a central-difference dP/dT of the condensed
/// phase and L_q/(T v_c), at reduced temperature 0 < t < 1.
[[nodiscard]] double clausius_check(const Deformation& d, double t, double step,
                                    const SeriesPolicy& policy = {});

/// beta (1/z) dz/dbeta at fixed V, N. Only defined above the transition.
[[nodiscard]] double fugacity_beta_logderivative(const GasPoint& g);

/// C_v / N.
[[nodiscard]] double heat_capacity(const GasPoint& g);

/// C_v/N(t -> 1-) - C_v/N(t -> 1+); zero in the limit band.
[[nodiscard]] double cv_jump(const Deformation& d, const SeriesPolicy& policy = {});

/// (3/2)(q - 1)/ln q, the z -> 0 limit of C_v/N.
[[nodiscard]] double classical_cv(const Deformation& d) noexcept;

struct Observables {
  double pressure;
  double density;
  double entropy_density;
  double energy;
  double cv_per_particle;
  double condensate_fraction;
};

[[nodiscard]] Observables observables(const GasPoint& g);

/// Reduced single-particle energies beta*eps_i (ascending, non-negative)
/// with positive degeneracy weights.
class ModeSpectrum {
 public:
  ModeSpectrum(std::vector<double> energies, std::vector<double> weights);

  /// Midpoint discretization of the free-particle density of states
  /// (2/sqrt(pi)) x^(1/2) dx on [0, cutoff] with the given spacing, so that
  /// mode sums approximate the thermodynamic-limit integrals per lambda^3.
  [[nodiscard]] static ModeSpectrum sqrt_density_of_states(double spacing, double cutoff);

  [[nodiscard]] const std::vector<double>& energies() const noexcept { return energies_; }
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }
  [[nodiscard]] std::size_t size() const noexcept { return energies_.size(); }

 private:
  std::vector<double> energies_;
  std::vector<double> weights_;
};

struct ModeSums {
  double particles;      ///< N
  double energy;         ///< beta U
  double entropy;        ///< S
  double log_partition;  ///< ln Z
};

/// Weighted mode sums for the discrete spectrum at fugacity z.
[[nodiscard]] ModeSums discrete_oracle(const ModeSpectrum& spectrum, double z, const Deformation& d);

/// |S - (ln Z + beta U - N ln z)| / |S|.
[[nodiscard]] double loop_closure_residual(const ModeSums& sums, double z) noexcept;

}  // namespace qboson::qgas
