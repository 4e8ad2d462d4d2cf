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

#include "qboson/sweep.hpp"

#include <algorithm>
#include <cmath>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "qboson/errors.hpp"

namespace qboson::sweep {

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::abs(v)); }

}  // namespace

std::vector<double> make_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw DomainError("grid bounds and step must be finite");
  }
  if (!(step > 0.0)) {
    throw DomainError("grid step must be positive");
  }
  if (start > stop) {
    throw DomainError("grid start must not exceed grid stop");
  }
  const double span = (stop - start) / step;
  if (span + 1.0 > static_cast<double>(kMaxGridPoints)) {
    throw DomainError("grid has too many points");
  }
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;

  std::vector<double> grid(count);
  const double inverse = 1.0 / step;
  if (near_integer(inverse) && near_integer(start * inverse)) {
    // Points are k / m with integers k, m: one rounding per point.
    const double m = std::round(inverse);
    const double k0 = std::round(start * inverse);
    for (std::size_t i = 0; i < count; ++i) {
      grid[i] = (k0 + static_cast<double>(i)) / m;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      grid[i] = start + static_cast<double>(i) * step;
    }
  }
  return grid;
}

int parallel_threads() noexcept {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qboson::sweep
