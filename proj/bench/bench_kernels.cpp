// Copyright 2026 The vlcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "vlcsim/kernels.hpp"
#include "vlcsim/raytrace.hpp"
#include "vlcsim/scenario.hpp"

using namespace vlcsim;

namespace {

const Scenario& scenario() {
  static const Scenario s = preset_scenario(find_preset("table1:8deg"));
  return s;
}

template <auto Kernel>
void plane_power(benchmark::State& state) {
  const Scenario& s = scenario();
  const auto n = static_cast<std::size_t>(state.range(0));
  const kernels::PlaneGrid grid{n, n, s.room.size_x, s.room.size_y, s.plane_z};
  std::vector<double> out(grid.size() * s.leds.size());
  for (auto _ : state) {
    Kernel(s.leds, grid, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * out.size()));
}

template <auto Kernel>
void reflection_paths(benchmark::State& state) {
  const Scenario& s = scenario();
  const std::vector<SurfacePatch> patches = discretize_surfaces(s.room, 1.0 / static_cast<double>(state.range(0)));
  std::vector<PathContribution> out(patches.size());
  for (auto _ : state) {
    Kernel(s.leds[0], s.pds[3], patches, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * patches.size()));
}

// Range arguments: grid points per side, and patches per metre.
BENCHMARK(plane_power<kernels::plane_power_serial>)->Name("plane_power/serial")->Arg(81)->Arg(321);
BENCHMARK(plane_power<kernels::plane_power_omp>)->Name("plane_power/omp")->Arg(81)->Arg(321);
BENCHMARK(reflection_paths<kernels::reflection_paths_serial>)->Name("reflection_paths/serial")->Arg(10)->Arg(20);
BENCHMARK(reflection_paths<kernels::reflection_paths_omp>)->Name("reflection_paths/omp")->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
