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

// Serial reference against the OpenMP backend for the figure sweeps.

#include <benchmark/benchmark.h>

#include "qboson/qgas.hpp"
#include "qboson/sweep.hpp"

using namespace qboson;

namespace {

void BM_CvCurve(benchmark::State& state) {
  const auto backend = static_cast<sweep::Backend>(state.range(0));
  const Deformation d(1.05);
  const auto ts = sweep::make_grid(0.2, 2.0, 0.01);
  for (auto _ : state) {
    auto cv = sweep::map_grid(
        ts, [&](double t) { return qgas::heat_capacity(qgas::GasPoint::at_temperature(d, t)); }, backend);
    benchmark::DoNotOptimize(cv.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ts.size()));
  state.SetLabel(backend == sweep::Backend::serial ? "serial" : "openmp");
}

void BM_TcCurve(benchmark::State& state) {
  const auto backend = static_cast<sweep::Backend>(state.range(0));
  const auto qs = sweep::make_grid(0.6, 1.5, 0.005);
  for (auto _ : state) {
    auto tc = sweep::map_grid(qs, [](double q) { return qgas::tc_ratio(Deformation(q)); }, backend);
    benchmark::DoNotOptimize(tc.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
  state.SetLabel(backend == sweep::Backend::serial ? "serial" : "openmp");
}

void BM_JumpCurve(benchmark::State& state) {
  const auto backend = static_cast<sweep::Backend>(state.range(0));
  const auto qs = sweep::make_grid(1.005, 1.3, 0.005);
  for (auto _ : state) {
    auto jump = sweep::map_grid(qs, [](double q) { return qgas::cv_jump(Deformation(q)); }, backend);
    benchmark::DoNotOptimize(jump.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
  state.SetLabel(backend == sweep::Backend::serial ? "serial" : "openmp");
}

constexpr int kSerial = static_cast<int>(sweep::Backend::serial);
constexpr int kParallel = static_cast<int>(sweep::Backend::parallel);

}  // namespace

BENCHMARK(BM_CvCurve)->Arg(kSerial)->Arg(kParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TcCurve)->Arg(kSerial)->Arg(kParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JumpCurve)->Arg(kSerial)->Arg(kParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
