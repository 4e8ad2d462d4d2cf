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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qboson/qgas.hpp"
#include "qboson/qpolylog.hpp"

using namespace qboson;
using namespace qboson::qgas;
using qpolylog::polylog;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

constexpr double kZeta32 = 2.6123753486854883433;
constexpr double kZeta52 = 1.3414872572509171798;
constexpr double kZeta72 = 1.1267338673170566464;

TEST(MaxFugacityTest, Values) {
  EXPECT_DOUBLE_EQ(max_fugacity(Deformation(2.0)), 0.25);
  EXPECT_EQ(max_fugacity(Deformation(0.5)), 1.0);
  EXPECT_EQ(max_fugacity(Deformation(1.0)), 1.0);
}

TEST(SolveFugacityTest, Boundaries) {
  for (double q : {0.7, 1.0, 1.3}) {
    const Deformation d(q);
    EXPECT_EQ(solve_fugacity(1.0, d), max_fugacity(d));
    EXPECT_LT(solve_fugacity(1e6, d), 1e-8);
  }
  EXPECT_THROW((void)solve_fugacity(0.9, Deformation(1.2)), DomainError);
  EXPECT_THROW((void)solve_fugacity(2.0, Deformation(1.2), 0.0), DomainError);
}

TEST(SolveFugacityTest, StandardGasReference) {
  // Li_3/2(z) = zeta(3/2)/2^(3/2), 40-digit reference.
  EXPECT_LT(rel(solve_fugacity(2.0, Deformation(1.0)), 0.6634175305902536312), 1e-11);
  EXPECT_LT(rel(solve_fugacity(2.0, Deformation(1.05)), 0.48720795673422208), 1e-11);
  EXPECT_LT(rel(solve_fugacity(2.0, Deformation(1.3)), 0.26226029639899380), 1e-11);
  EXPECT_LT(rel(solve_fugacity(2.0, Deformation(0.8)), 0.52981623391657823), 1e-11);
}

TEST(SolveFugacityTest, MonotoneAndComposesWithDensity) {
  for (double q : {0.6, 1.0, 1.1, 1.8}) {
    const Deformation d(q);
    const double n_c = qpolylog::g_function(qpolylog::GOrder(1.5), max_fugacity(d), d);
    double previous = 2.0;
    for (double t : {1.0, 1.01, 1.3, 2.0, 5.0, 50.0}) {
      const auto p = GasPoint::at_temperature(d, t);
      EXPECT_LT(p.z(), previous);
      previous = p.z();
      EXPECT_LT(rel(density(p).total * std::pow(t, 1.5), n_c), 10 * kDefaultSolverTol) << q << " " << t;
    }
  }
}

TEST(GasPointTest, Regimes) {
  const Deformation d(1.2);
  EXPECT_EQ(GasPoint::at_temperature(d, 0.5).regime(), Regime::below);
  EXPECT_EQ(GasPoint::at_temperature(d, 0.5).z(), max_fugacity(d));
  EXPECT_EQ(GasPoint::at_temperature(d, 1.0).regime(), Regime::critical);
  EXPECT_EQ(GasPoint::at_temperature(d, 1.5).regime(), Regime::above);
  EXPECT_EQ(GasPoint::condensed(d, 1.0).regime(), Regime::below);
  EXPECT_THROW((void)GasPoint::condensed(d, 1.1), DomainError);
  EXPECT_THROW((void)GasPoint::at_temperature(d, 0.0), DomainError);
  EXPECT_THROW((void)GasPoint::at_fugacity(d, 0.8), DomainError);
  const auto p = GasPoint::at_fugacity(d, 0.3);
  EXPECT_GT(p.t(), 1.0);
  EXPECT_LT(rel(GasPoint::at_temperature(d, p.t()).z(), 0.3), 1e-10);
  EXPECT_EQ(to_string(Regime::critical), "critical");
}

TEST(PressureTest, Values) {
  const Deformation d(1.3);
  EXPECT_EQ(pressure(GasPoint::at_temperature(d, 0.3)), pressure(GasPoint::at_temperature(d, 0.8)));
  EXPECT_LT(rel(pressure(GasPoint::at_temperature(Deformation(1.0), 0.5)), kZeta52), 1e-13);
  for (double q : {0.5, 2.0}) {
    const Deformation dq(q);
    const double z = 1e-9;
    EXPECT_LT(rel(pressure(GasPoint::at_fugacity(dq, z)), z * (q - 1.0) / std::log(q)), 1e-8);
  }
}

TEST(DensityTest, CondensateFraction) {
  for (double q : {0.7, 1.0, 1.4}) {
    const Deformation d(q);
    EXPECT_EQ(density(GasPoint::at_temperature(d, 1.0)).condensate_fraction, 0.0);
    EXPECT_EQ(density(GasPoint::at_temperature(d, 2.0)).condensate_fraction, 0.0);
    EXPECT_NEAR(density(GasPoint::at_temperature(d, 0.5)).condensate_fraction, 1.0 - std::pow(0.5, 1.5), 1e-15);
    EXPECT_GT(density(GasPoint::at_temperature(d, 1e-6)).condensate_fraction, 0.999999);
  }
}

TEST(TcRatioTest, Values) {
  // (zeta(3/2)/g_3/2(z_q, q))^(2/3), 40-digit references.
  const struct {
    double q, value;
  } cases[] = {{1.01, 1.1202945781731542735}, {1.05, 1.2991393605512568779}, {1.1, 1.4573004657200222617},
               {0.8, 1.3544660001765976765}, {1.5, 2.3826348511363566772}};
  for (const auto& c : cases) {
    EXPECT_LT(rel(tc_ratio(Deformation(c.q)), c.value), 1e-13) << c.q;
  }
  EXPECT_EQ(tc_ratio(Deformation(1.0)), 1.0);
}

TEST(TcRatioTest, NeverBelowStandardGas) {
  for (double q = 0.51; q < 2.0; q += 0.01) {
    EXPECT_GE(tc_ratio(Deformation(q)), 1.0) << q;
  }
}

TEST(TcRatioTest, SquareRootApproachToUnity) {
  // tc_ratio - 1 vanishes like sqrt|q - 1| (the series at z_q has a
  // square-root branch point), so halving |q - 1| by 100 shrinks it ~10x.
  for (double sign : {1.0, -1.0}) {
    const double a = tc_ratio(Deformation(1.0 + sign * 1e-5)) - 1.0;
    const double b = tc_ratio(Deformation(1.0 + sign * 1e-7)) - 1.0;
    EXPECT_GT(a, 0.0);
    EXPECT_GT(b, 0.0);
    EXPECT_NEAR(a / b, 10.0, 0.5) << sign;
    EXPECT_LT(b, 5e-4);
  }
}

TEST(EntropyTest, StandardGasAndThirdLaw) {
  // Standard boson gas at t = 1.5 and t = 3 (40-digit references).
  const Deformation d(1.0);
  EXPECT_LT(rel(entropy_density(GasPoint::at_temperature(d, 1.5)), 2.86558673308975), 1e-11);
  EXPECT_LT(rel(entropy_density(GasPoint::at_temperature(d, 3.0)), 1.57983250340605), 1e-11);
  EXPECT_LT(rel(heat_capacity(GasPoint::at_temperature(d, 1.5)), 1.71034420459435), 1e-10);
  EXPECT_LT(rel(heat_capacity(GasPoint::at_temperature(d, 3.0)), 1.56923444339790), 1e-10);
  EXPECT_LT(rel(pressure(GasPoint::at_temperature(d, 1.5)), 1.054575930837369), 1e-11);

  // Below the transition S/N restored to fixed units scales as t^(3/2).
  for (double q : {0.8, 1.3}) {
    const Deformation dq(q);
    auto per_particle = [&](double t) {
      const auto p = GasPoint::condensed(dq, t);
      return entropy_density(p) / density(p).total;
    };
    EXPECT_LT(rel(per_particle(0.4) / per_particle(0.2), std::pow(2.0, 1.5)), 1e-13);
    EXPECT_LT(rel(per_particle(0.8) / per_particle(0.4), std::pow(2.0, 1.5)), 1e-13);
  }
}

TEST(EntropyTest, OneSidedValuesAtTransition) {
  {
    const auto s = transition_entropy(Deformation(0.8));
    EXPECT_DOUBLE_EQ(s.from_below, s.from_above);
  }
  const Deformation d(1.2);
  const auto s = transition_entropy(d);
  const double g32 = qpolylog::g_function(qpolylog::GOrder(1.5), max_fugacity(d), d);
  EXPECT_LT(rel(s.from_above - s.from_below, g32 * std::log(1.44)), 1e-13);
  EXPECT_LT(rel(entropy_density(GasPoint::at_temperature(d, 1.0)), s.from_above), 1e-15);
  EXPECT_LT(rel(entropy_density(GasPoint::condensed(d, 1.0)), s.from_below), 1e-15);
}

TEST(LatentHeatTest, Values) {
  EXPECT_LT(rel(latent_heat_over_T(Deformation(1.0)), 1.2837811169879696623), 1e-13);
  const Deformation d(1.05);
  const double l = latent_heat_over_T(d);
  EXPECT_TRUE(std::isfinite(l));
  EXPECT_GT(l, 0.0);
  const auto p = GasPoint::at_temperature(d, 0.6);
  EXPECT_LT(rel(l, 2.5 * pressure(p) / density(p).thermal), 1e-15);
}

TEST(ClausiusTest, Closure) {
  for (double q : {0.8, 1.0, 1.3, 1.05}) {
    EXPECT_LT(clausius_check(Deformation(q), 0.5, 1e-4), 1e-6) << q;
  }
  EXPECT_THROW((void)clausius_check(Deformation(1.3), 0.99, 0.02), DomainError);
}

TEST(EnergyTest, ThreeHalvesPressure) {
  for (double q : {0.5, 1.0, 1.3, 2.0}) {
    for (double t : {0.2, 0.9, 1.0, 1.7, 10.0}) {
      const auto p = GasPoint::at_temperature(Deformation(q), t);
      EXPECT_LT(rel(energy(p), 1.5 * pressure(p)), 1e-12) << q << " " << t;
      const auto o = observables(p);
      EXPECT_EQ(o.energy, energy(p));
      EXPECT_GE(o.condensate_fraction, 0.0);
      EXPECT_LE(o.condensate_fraction, 1.0);
    }
  }
}

TEST(BetaLogDerivativeTest, Values) {
  // Classical ratio of equal leading terms.
  for (double q : {1.0, 1.5}) {
    const auto p = GasPoint::at_fugacity(Deformation(q), 1e-9);
    EXPECT_NEAR(fugacity_beta_logderivative(p), 1.5, 1e-8) << q;
  }
  // Standard gas: (3/2) g_3/2(z) / g_1/2(z).
  const auto p = GasPoint::at_fugacity(Deformation(1.0), 0.4);
  EXPECT_LT(rel(fugacity_beta_logderivative(p), 1.5 * polylog(1.5, 0.4) / polylog(0.5, 0.4)), 1e-13);
  EXPECT_THROW((void)fugacity_beta_logderivative(GasPoint::at_temperature(Deformation(1.5), 0.5)), DomainError);
}

TEST(BetaLogDerivativeTest, TwoPointQuotientAndIsochore) {
  // Deformed case: ratio of exact two-point Jackson quotients.
  const Deformation d(1.5);
  const double z = 0.2;
  auto quotient = [&](double n) {
    return (qpolylog::g_function_extended(qpolylog::GOrder(n), 1.5 * z, d) -
            qpolylog::g_function_extended(qpolylog::GOrder(n), z, d)) /
           std::log(1.5);
  };
  EXPECT_LT(rel(fugacity_beta_logderivative(GasPoint::at_fugacity(d, z)), 1.5 * quotient(2.5) / quotient(1.5)), 1e-12);
  // Undeformed case: finite difference of ln z along the isochore in ln beta.
  const Deformation one(1.0);
  const double t = 1.7;
  const double h = 1e-5;
  const double dlnz = (std::log(solve_fugacity(t * std::exp(-h), one)) - std::log(solve_fugacity(t * std::exp(h), one))) /
                      (2.0 * h);
  EXPECT_LT(rel(fugacity_beta_logderivative(GasPoint::at_temperature(one, t)), dlnz), 1e-5);
}

TEST(HeatCapacityTest, StandardGas) {
  const Deformation d(1.0);
  const double at_tc = 3.75 * kZeta52 / kZeta32;
  EXPECT_LT(rel(heat_capacity(GasPoint::at_temperature(d, 1.0)), 1.9256716754819544934), 1e-12);
  EXPECT_LT(rel(heat_capacity(GasPoint::condensed(d, 1.0)), at_tc), 1e-12);
  EXPECT_NEAR(heat_capacity(GasPoint::at_temperature(d, 1e4)), 1.5, 1e-5);
  EXPECT_LT(rel(heat_capacity(GasPoint::condensed(d, 0.5)), 3.75 * kZeta52 / kZeta32 * std::pow(0.5, 1.5)), 1e-12);
  (void)kZeta72;
}

TEST(HeatCapacityTest, OneSidedReferences) {
  // 40-digit references at the transition: (above, below).
  const struct {
    double q, above, below;
  } cases[] = {{1.02, 1.96471170693243, 2.37431271837272}, {1.05, 1.99980195648805, 2.63385354475960},
               {1.1, 2.05044888773149, 2.92642528787904},  {1.2, 2.14200942886038, 3.34316253128018},
               {0.8, 1.38211263766227, 2.22177294333604}};
  for (const auto& c : cases) {
    const Deformation d(c.q);
    EXPECT_NEAR(heat_capacity(GasPoint::at_temperature(d, 1.0)), c.above, 1e-12) << c.q;
    EXPECT_NEAR(heat_capacity(GasPoint::condensed(d, 1.0)), c.below, 1e-12) << c.q;
    EXPECT_NEAR(cv_jump(d), c.below - c.above, 1e-12) << c.q;
  }
}

TEST(HeatCapacityTest, ClassicalLimit) {
  for (double q : {0.5, 1.0, 1.5, 2.0}) {
    const Deformation d(q);
    EXPECT_LT(rel(heat_capacity(GasPoint::at_fugacity(d, 1e-7)), classical_cv(d)), 1e-4) << q;
  }
  EXPECT_EQ(classical_cv(Deformation(1.0)), 1.5);
  EXPECT_NEAR(classical_cv(Deformation(2.0)), 1.5 / std::log(2.0), 1e-15);
}

TEST(HeatCapacityTest, ContinuousAboveTransition) {
  const Deformation d(1.05);
  const double h = 0.01;
  std::vector<double> cv;
  for (double t = 1.0 + h; t < 3.0; t += h) cv.push_back(heat_capacity(GasPoint::at_temperature(d, t)));
  for (std::size_t i = 1; i + 1 < cv.size(); ++i) {
    // Adjacent differences bounded by a few times the local slope estimate.
    const double local = std::max(std::abs(cv[i + 1] - cv[i]), std::abs(cv[i] - cv[i - 1]));
    const double centred = std::abs(cv[i + 1] - cv[i - 1]) / 2.0;
    EXPECT_LT(local, 3.0 * centred + 1e-12) << i;
  }
}

TEST(CvJumpTest, SignAndMonotonicity) {
  EXPECT_EQ(cv_jump(Deformation(1.0)), 0.0);
  EXPECT_GT(cv_jump(Deformation(1.05)), 0.0);
  double previous = 0.0;
  for (double q = 1.005; q <= 1.3 + 1e-12; q += 0.005) {
    const double j = cv_jump(Deformation(q));
    EXPECT_GT(j, previous) << q;
    previous = j;
  }
}

TEST(ModeSpectrumTest, Validation) {
  EXPECT_THROW(ModeSpectrum({1.0, 2.0}, {1.0}), DomainError);
  EXPECT_THROW(ModeSpectrum({2.0, 1.0}, {1.0, 1.0}), DomainError);
  EXPECT_THROW(ModeSpectrum({-1.0}, {1.0}), DomainError);
  EXPECT_THROW(ModeSpectrum({1.0}, {0.0}), DomainError);
  EXPECT_EQ(ModeSpectrum::sqrt_density_of_states(0.1, 10.0).size(), 100u);
}

TEST(DiscreteOracleTest, SingleStandardMode) {
  const ModeSpectrum one({1.0}, {1.0});
  const double z = 0.3;
  const double kappa = z * std::exp(-1.0);
  const auto s = discrete_oracle(one, z, Deformation(1.0));
  const double n = kappa / (1.0 - kappa);
  EXPECT_LT(rel(s.particles, n), 1e-15);
  EXPECT_LT(rel(s.energy, n), 1e-15);
  EXPECT_LT(rel(s.log_partition, -std::log(1.0 - kappa)), 1e-15);
  EXPECT_LT(rel(s.entropy, (n + 1.0) * std::log(n + 1.0) - n * std::log(n)), 1e-14);
  EXPECT_LT(loop_closure_residual(s, z), 1e-12);
}

TEST(DiscreteOracleTest, LoopClosure) {
  const ModeSpectrum spectrum({0.0, 0.1, 0.5, 0.5, 2.0, 7.0}, {1.0, 3.0, 0.5, 2.0, 10.0, 4.0});
  for (double q : {0.5, 1.0, 1.4, 2.0}) {
    const Deformation d(q);
    for (double f : {0.05, 0.4, 0.9, 0.999}) {
      const double z = f * max_fugacity(d);
      EXPECT_LT(loop_closure_residual(discrete_oracle(spectrum, z, d), z), 1e-10) << q << " " << z;
    }
  }
  EXPECT_THROW((void)discrete_oracle(spectrum, 0.7, Deformation(1.5)), DomainError);
}

TEST(DiscreteOracleTest, ContinuumConvergence) {
  const Deformation d(1.2);
  const double z = 0.5;
  const double target = qpolylog::g_function(qpolylog::GOrder(1.5), z, d);
  double previous = 1.0;
  for (double h : {0.04, 0.02, 0.01, 0.005}) {
    const double err = std::abs(discrete_oracle(ModeSpectrum::sqrt_density_of_states(h, 45.0), z, d).particles - target);
    EXPECT_LT(err, previous / 2.0) << h;
    previous = err;
  }
}

}  // namespace
