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

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

/// Grid sweeps: evaluate a pure function at every point of a parameter grid.
///
/// The parallel backend fans the points out over OpenMP threads; results are
/// gathered by index, so the output never depends on scheduling. If any
/// evaluation throws, the exception raised at the lowest grid index is
/// rethrown after the sweep, which again is independent of thread count.
namespace qboson::sweep {

enum class Backend { serial, parallel };

/// Inclusive arithmetic grid start, start + step, ... up to stop (with a
/// relative slack of 1e-9 steps). Decimal steps whose reciprocal is an
/// integer produce correctly rounded points (0.3, not 0.30000000000000004).
/// Throws DomainError unless start <= stop, step > 0 and the grid has at most
/// kMaxGridPoints points.
[[nodiscard]] std::vector<double> make_grid(double start, double stop, double step);

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// Number of threads the parallel backend would use.
[[nodiscard]] int parallel_threads() noexcept;

template <class F>
[[nodiscard]] auto map_grid(const std::vector<double>& grid, F&& f, Backend backend = Backend::parallel)
    -> std::vector<std::invoke_result_t<F&, double>> {
  using Result = std::invoke_result_t<F&, double>;
  const std::size_t count = grid.size();
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);

  auto evaluate = [&](std::size_t i) {
    try {
      slots[i].emplace(f(grid[i]));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (backend == Backend::parallel) {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
      evaluate(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      evaluate(i);
    }
  }

  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace qboson::sweep
