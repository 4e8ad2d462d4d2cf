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

#include "qboson/qpolylog.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace qboson::qpolylog {

SeriesPolicy::SeriesPolicy(double rel_tol, std::int64_t max_terms)
    : rel_tol_(rel_tol), max_terms_(max_terms) {
  if (!(rel_tol >= 10.0 * std::numeric_limits<double>::epsilon()) || !std::isfinite(rel_tol)) {
    throw DomainError("series rel_tol must be at least 10 machine epsilon");
  }
  if (max_terms < 100) throw DomainError("series max_terms must be at least 100");
}

GOrder::GOrder(double n) : n_(n) {
  if (!(n > 0.5) || !std::isfinite(n)) {
    throw DomainError("g-function order must exceed 1/2, got " + std::to_string(n));
  }
}

double fugacity_bound(const Deformation& d) noexcept {
  return d.above_unity() ? 1.0 / (d.q() * d.q()) : 1.0;
}

namespace detail {
namespace {

// B_2, B_4, ..., B_16 divided by (2m)!.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};
constexpr int kCorrectionTerms = 6;
constexpr std::int64_t kFirstTailCut = 64;
// The certified geometric remainder is driven well below rel_tol so that
// differences of series values (two-point quotients) keep their accuracy.
constexpr double kGeometricSafety = 1e-2;

double binomial(int r, int j) {
  double b = 1.0;
  for (int i = 1; i <= j; ++i) b = b * (r - j + i) / i;
  return b;
}

// Summand (e^(x eps) - 1)^p z^x x^(-s) as a function of continuous x, and a
// decomposition into pure exponentials sum_i c_i e^(-nu_i x) x^(-s) used for
// derivatives.
class Summand {
 public:
  Summand(int power, double s, double z, double eps) : p_(power), s_(s), eps_(eps) {
    log_z_ = std::log(z);
    lead_ = log_z_ + (eps > 0.0 ? power * eps : 0.0);
    // z_q q^2 = 1 up to rounding; treat a few ulps above as exactly on the bound.
    if (lead_ > 0.0 && lead_ < 64.0 * std::numeric_limits<double>::epsilon()) lead_ = 0.0;
    if (lead_ > 0.0) throw DomainError("series argument outside its convergence domain");
    static constexpr std::array<std::array<double, 3>, 3> kCoeff = {
        {{1.0, 0.0, 0.0}, {-1.0, 1.0, 0.0}, {1.0, -2.0, 1.0}}};
    count_ = power + 1;
    for (int i = 0; i < count_; ++i) {
      coeff_[i] = kCoeff[power][i];
      decay_[i] = -(log_z_ + i * eps);
    }
    if (eps > 0.0) decay_[power] = -lead_;
  }

  [[nodiscard]] double operator()(double x) const {
    const double base = -s_ * std::log(x);
    if (p_ == 0) return std::exp(x * log_z_ + base);
    if (eps_ > 0.0) {
      const double g = -std::expm1(-x * eps_);
      return (p_ == 1 ? g : g * g) * std::exp(x * lead_ + base);
    }
    const double g = std::expm1(x * eps_);
    return (p_ == 1 ? g : g * g) * std::exp(x * log_z_ + base);
  }

  // d^r/dx^r of the summand at x.
  [[nodiscard]] double derivative(int r, double x) const {
    double total = 0.0;
    for (int i = 0; i < count_; ++i) {
      const double nu = decay_[i];
      const double envelope = std::exp(-nu * x - s_ * std::log(x));
      if (envelope == 0.0) continue;
      double inner = 0.0;
      double rising = 1.0;  // (s)_j
      for (int j = 0; j <= r; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        inner += binomial(r, j) * std::pow(-nu, r - j) * sign * rising * std::pow(x, -j);
        rising *= s_ + j;
      }
      total += coeff_[i] * envelope * inner;
    }
    return total;
  }

  [[nodiscard]] double lead() const noexcept { return lead_; }
  [[nodiscard]] double s() const noexcept { return s_; }
  [[nodiscard]] int power() const noexcept { return p_; }
  [[nodiscard]] double eps() const noexcept { return eps_; }

 private:
  int p_;
  double s_;
  double eps_;
  double log_z_ = 0.0;
  double lead_ = 0.0;
  int count_ = 1;
  std::array<double, 3> coeff_{};
  std::array<double, 3> decay_{};
};

struct TailEstimate {
  double value;
  double error;
};

// sum_{j > cut} f(j) by Euler-Maclaurin at the cut.
TailEstimate euler_maclaurin_tail(const Summand& f, double cut, double rel_tol) {
  double integral = 0.0;
  double quad_error = 0.0;
  if (f.power() == 0 && f.lead() == 0.0) {
    integral = std::pow(cut, 1.0 - f.s()) / (f.s() - 1.0);
  } else {
    thread_local boost::math::quadrature::exp_sinh<double> integrator;
    try {
      integral = integrator.integrate(f, cut, std::numeric_limits<double>::infinity(),
                                      std::max(0.01 * rel_tol, 1e-15), &quad_error);
    } catch (const std::exception& e) {
      throw ConvergenceError(std::string("tail quadrature failed: ") + e.what());
    }
  }
  double value = integral - 0.5 * f(cut);
  for (int m = 1; m <= kCorrectionTerms; ++m) {
    value -= kBernoulliOverFactorial[m - 1] * f.derivative(2 * m - 1, cut);
  }
  const double truncation =
      std::abs(kBernoulliOverFactorial[kCorrectionTerms] * f.derivative(2 * kCorrectionTerms + 1, cut));
  return {value, truncation + quad_error};
}

class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double deformed_power_sum(int power, double s, double z, double log_q, const SeriesPolicy& policy) {
  if (power < 0 || power > 2) throw DomainError("deformed_power_sum supports powers 0, 1, 2");
  if (!(z >= 0.0)) throw DomainError("series argument must be non-negative");
  if (z == 0.0) return 0.0;
  if (power > 0 && log_q == 0.0) return 0.0;

  const Summand f(power, s, z, log_q);
  const double lead = f.lead();
  if (lead == 0.0 && s <= 1.0) {
    const bool negative = log_q < 0.0 && power == 1;
    return negative ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  }

  const double tol = policy.rel_tol();
  const std::int64_t max_terms = policy.max_terms();
  std::int64_t next_cut = kFirstTailCut;
  CompensatedSum sum;
  for (std::int64_t k = 1; k <= max_terms; ++k) {
    const double kd = static_cast<double>(k);
    sum.add(f(kd));
    const double partial = sum.value();

    if (lead < 0.0) {
      // |term_j| <= e^(lead j) j^(-s); bound the rest by a geometric series.
      const double growth = s < 0.0 ? std::pow((kd + 2.0) / (kd + 1.0), -s) : 1.0;
      const double ratio = std::exp(lead) * growth;
      if (ratio < 1.0) {
        const double bound = std::exp(lead * (kd + 1.0) - s * std::log(kd + 1.0)) / (1.0 - ratio);
        if (bound <= kGeometricSafety * tol * std::abs(partial)) return partial;
      }
    }

    if (k == next_cut || k == max_terms) {
      const TailEstimate tail = euler_maclaurin_tail(f, kd, tol);
      const double total = partial + tail.value;
      if (std::isfinite(total) && tail.error <= 0.5 * tol * std::abs(total)) return total;
      next_cut *= 2;
    }
  }
  throw ConvergenceError("series for s = " + std::to_string(s) + ", z = " + std::to_string(z) +
                         " did not reach rel_tol within " + std::to_string(max_terms) + " terms");
}

}  // namespace detail

double polylog(double s, double z, const SeriesPolicy& policy) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("polylog argument must lie in [0, 1]");
  if (!std::isfinite(s)) throw DomainError("polylog order must be finite");
  return detail::deformed_power_sum(0, s, z, 0.0, policy);
}

namespace {

double convergence_bound(const Deformation& d) noexcept {
  return d.above_unity() ? 1.0 / d.q() : 1.0;
}

void require_range(double z, double upper, const char* what) {
  if (!(z >= 0.0) || z > upper) {
    throw DomainError(std::string(what) + ": fugacity " + std::to_string(z) +
                      " outside [0, " + std::to_string(upper) + "]");
  }
}

}  // namespace

double g_function_extended(GOrder order, double z, const Deformation& d, const SeriesPolicy& policy) {
  require_range(z, convergence_bound(d), "g_function");
  if (z == 0.0) return 0.0;
  if (d.near_unity()) return polylog(order.n(), z, policy);
  const double lq = d.log_q();
  return detail::deformed_power_sum(1, order.n() + 1.0, z, lq, policy) / lq;
}

double g_function(GOrder order, double z, const Deformation& d, const SeriesPolicy& policy) {
  require_range(z, fugacity_bound(d), "g_function");
  return g_function_extended(order, z, d, policy);
}

double g_thermo_derivative(GOrder order, double z, const Deformation& d, const SeriesPolicy& policy) {
  require_range(z, fugacity_bound(d), "g_thermo_derivative");
  if (z == 0.0) return 0.0;
  if (d.near_unity()) return polylog(order.n() - 1.0, z, policy);
  const double lq = d.log_q();
  return detail::deformed_power_sum(2, order.n() + 1.0, z, lq, policy) / (lq * lq);
}

}  // namespace qboson::qpolylog
