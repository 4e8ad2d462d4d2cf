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

#include "qboson/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "qboson/qcore.hpp"
#include "qboson/qgas.hpp"
#include "qboson/qstat.hpp"

namespace qboson::verify {

namespace {

using qpolylog::GOrder;
using qpolylog::SeriesPolicy;

constexpr double kIdentityThreshold = 1e-10;
constexpr double kTwoRouteThreshold = 1e-12;
// In the limit band route B is a centred difference with O(h^2) error.
constexpr double kTwoRouteLimitThreshold = 1e-8;

double relative(double a, double b) {
  const double scale = std::max(std::abs(b), std::numeric_limits<double>::min());
  return std::abs(a - b) / scale;
}

// Admissible kappa values: fractions of the upper end of the mode range,
// shrunk by min(1, q) so that the extremum partner kappa/q stays admissible.
std::vector<double> kappa_grid(const Deformation& d) {
  const double bound = d.above_unity() ? 1.0 / d.q() : 1.0;
  const double shrink = std::min(1.0, d.q());
  std::vector<double> out;
  for (double f : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    out.push_back(f * bound * shrink);
  }
  return out;
}

const std::vector<double>& x_grid() {
  static const std::vector<double> g = {0.1, 0.5, 1.0, 2.5, 7.0, 15.0};
  return g;
}

CheckResult check(std::string name, const Deformation& d, double threshold,
                  const std::function<double()>& body) {
  return {std::move(name), d.q(), body(), threshold};
}

void qcore_checks(const Deformation& d, std::vector<CheckResult>& out) {
  using qcore::basic_number;
  const double q = d.q();
  out.push_back(check("non_additivity", d, kIdentityThreshold, [&] {
    double worst = 0.0;
    for (double x : x_grid()) {
      for (double y : x_grid()) {
        const double bx = basic_number(x, d);
        const double by = basic_number(y, d);
        worst = std::max(worst, relative(basic_number(x + y, d), bx + by + d.q_minus_one() * bx * by));
      }
    }
    return worst;
  }));
  out.push_back(check("recurrence", d, kIdentityThreshold, [&] {
    double worst = 0.0;
    for (double x : x_grid()) {
      worst = std::max(worst, relative(basic_number(x + 1.0, d), q * basic_number(x, d) + 1.0));
    }
    return worst;
  }));
}

void qstat_checks(const Deformation& d, std::vector<CheckResult>& out) {
  using qcore::basic_number;
  const double q = d.q();
  out.push_back(check("occupation_relation", d, kIdentityThreshold, [&] {
    double worst = 0.0;
    for (double kappa : kappa_grid(d)) {
      const double n = qstat::occupation(qstat::ModePoint(kappa, d));
      const double expected = d.near_unity() ? kappa / (1.0 - kappa) : kappa / (1.0 - q * kappa);
      worst = std::max(worst, relative(basic_number(n, d), expected));
    }
    return worst;
  }));
  out.push_back(check("last_term_identity", d, kIdentityThreshold, [&] {
    double worst = 0.0;
    for (double kappa : kappa_grid(d)) {
      const double n = qstat::occupation(qstat::ModePoint(kappa, d));
      worst = std::max(worst, std::abs(qstat::last_term_identity(n, d)));
    }
    return worst;
  }));
  out.push_back(check("extremum_identities", d, kIdentityThreshold, [&] {
    double worst = 0.0;
    for (double kappa : kappa_grid(d)) {
      const auto r = qstat::extremum_identities(kappa, d);
      worst = std::max({worst, r.identity_a, r.identity_b});
    }
    return worst;
  }));
}

void polylog_checks(const Deformation& d, const SeriesPolicy& policy, std::vector<CheckResult>& out) {
  const double threshold = d.near_unity() ? kTwoRouteLimitThreshold : kTwoRouteThreshold;
  out.push_back(check("jackson_two_route", d, threshold, [&] {
    double worst = 0.0;
    const double z_max = qgas::max_fugacity(d);
    for (double n : {1.5, 2.5, 3.5}) {
      const GOrder order(n);
      auto g = [&](double z) { return qpolylog::g_function_extended(order, z, d, policy); };
      for (double f : {0.05, 0.3, 0.6, 0.9, 0.99}) {
        // The centred difference is not accurate next to the z = 1 branch point.
        if (d.near_unity() && f > 0.9) continue;
        const double z = f * z_max;
        const double closed = qpolylog::g_thermo_derivative(order, z, d, policy);
        const double two_point = z * qcore::thermo_derivative(g, z, d);
        worst = std::max(worst, relative(two_point, closed));
      }
    }
    return worst;
  }));
}

void gas_checks(const Deformation& d, const SeriesPolicy& policy, std::vector<CheckResult>& out) {
  const std::vector<double> temps = {0.3, 0.7, 1.0, 1.5, 3.0};
  out.push_back(check("energy_pressure", d, kIdentityThreshold, [&] {
    double worst = 0.0;
    for (double t : temps) {
      const auto point = qgas::GasPoint::at_temperature(d, t, policy);
      worst = std::max(worst, relative(qgas::energy(point), 1.5 * qgas::pressure(point)));
    }
    return worst;
  }));
  out.push_back(check("loop_closure", d, kIdentityThreshold, [&] {
    const auto spectrum = qgas::ModeSpectrum::sqrt_density_of_states(0.05, 30.0);
    double worst = 0.0;
    const double z_max = qgas::max_fugacity(d);
    for (double f : {0.1, 0.5, 0.9, 0.999}) {
      const double z = f * z_max;
      worst = std::max(worst, qgas::loop_closure_residual(qgas::discrete_oracle(spectrum, z, d), z));
    }
    return worst;
  }));
  // S/N = (5/2) g_5/2(z_q) t^(3/2) / g_3/2(z_q) below the transition: the
  // log-log slope of the entropy per particle must be exactly 3/2.
  out.push_back(check("third_law_scaling", d, kIdentityThreshold, [&] {
    auto per_particle = [&](double t) {
      const auto point = qgas::GasPoint::condensed(d, t, policy);
      return qgas::entropy_density(point) / qgas::density(point).total;
    };
    double worst = 0.0;
    for (double t : {1e-1, 1e-2, 1e-3}) {
      const double slope = std::log(per_particle(t) / per_particle(0.5 * t)) / std::log(2.0);
      worst = std::max(worst, relative(slope, 1.5));
    }
    return worst;
  }));
}

}  // namespace

StirlingRow stirling_row(std::int64_t n, const Deformation& d) {
  const double exact = qcore::log_basic_factorial(n, d);
  const double approx = qcore::q_stirling(n, d);
  const double err = exact == 0.0 ? std::numeric_limits<double>::infinity()
                                  : std::abs(approx - exact) / std::abs(exact);
  return {n, exact, approx, err};
}

bool Report::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

Report run(const std::vector<double>& qs, const SeriesPolicy& policy, std::optional<double> stirling_q) {
  Report report{{}, std::numeric_limits<double>::quiet_NaN(), {}};
  for (double q : qs) {
    const Deformation d(q);
    qcore_checks(d, report.checks);
    qstat_checks(d, report.checks);
    polylog_checks(d, policy, report.checks);
    gas_checks(d, policy, report.checks);
  }
  if (!stirling_q) {
    const auto it = std::find_if(qs.begin(), qs.end(), [](double q) { return Deformation(q).above_unity(); });
    if (it != qs.end()) stirling_q = *it;
  }
  if (stirling_q) {
    const Deformation d(*stirling_q);
    report.stirling_q = d.q();
    double previous = std::numeric_limits<double>::infinity();
    double worst_increase = 0.0;
    for (std::int64_t n : {100, 1000, 5000}) {
      report.stirling.push_back(stirling_row(n, d));
      worst_increase = std::max(worst_increase, report.stirling.back().relative_error - previous);
      previous = report.stirling.back().relative_error;
    }
    // The approximation is asymptotic: its relative error must shrink with n.
    report.checks.push_back({"stirling_error_decreasing", d.q(), std::max(0.0, worst_increase), 0.0});
  }
  return report;
}

}  // namespace qboson::verify
