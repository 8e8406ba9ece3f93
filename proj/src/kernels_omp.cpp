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

#include <exception>

#include "vlcsim/kernels.hpp"

namespace vlcsim::kernels {

namespace {

// Exceptions may not cross an OpenMP region; the first one caught is
// rethrown on the calling thread once the loop finishes.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(vlcsim_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

void channel_matrix_omp(std::span<const LedSource> leds, std::span<const Photodetector> pds,
                        std::span<double> out) {
  const std::size_t n_tx = leds.size();
  parallel_for(pds.size() * n_tx, [&](std::size_t e) { out[e] = los_gain(leds[e % n_tx], pds[e / n_tx]); });
}

void plane_power_omp(std::span<const LedSource> leds, const PlaneGrid& grid, std::span<double> out) {
  const std::size_t n_leds = leds.size();
  parallel_for(grid.size(), [&](std::size_t p) {
    const Photodetector probe = probe_at(grid.x(p % grid.nx), grid.y(p / grid.nx), grid.z);
    for (std::size_t k = 0; k < n_leds; ++k) out[p * n_leds + k] = leds[k].tx_power * los_gain(leds[k], probe);
  });
}

void reflection_paths_omp(const LedSource& tx, const Photodetector& rx, std::span<const SurfacePatch> patches,
                          std::span<PathContribution> out) {
  parallel_for(patches.size(), [&](std::size_t k) { out[k] = reflection_path(tx, rx, patches[k]); });
}

}  // namespace vlcsim::kernels
