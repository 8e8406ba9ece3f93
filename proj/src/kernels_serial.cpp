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

#include "vlcsim/kernels.hpp"

namespace vlcsim::kernels {

Photodetector probe_at(double x, double y, double z) {
  return Photodetector{Pose({x, y, z}, {0.0, 0.0, 1.0})};
}

void channel_matrix_serial(std::span<const LedSource> leds, std::span<const Photodetector> pds,
                           std::span<double> out) {
  const std::size_t n_tx = leds.size();
  for (std::size_t i = 0; i < pds.size(); ++i)
    for (std::size_t j = 0; j < n_tx; ++j) out[i * n_tx + j] = los_gain(leds[j], pds[i]);
}

void plane_power_serial(std::span<const LedSource> leds, const PlaneGrid& grid, std::span<double> out) {
  const std::size_t n_leds = leds.size();
  for (std::size_t j = 0; j < grid.ny; ++j)
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const Photodetector probe = probe_at(grid.x(i), grid.y(j), grid.z);
      const std::size_t p = j * grid.nx + i;
      for (std::size_t k = 0; k < n_leds; ++k) out[p * n_leds + k] = leds[k].tx_power * los_gain(leds[k], probe);
    }
}

void reflection_paths_serial(const LedSource& tx, const Photodetector& rx, std::span<const SurfacePatch> patches,
                             std::span<PathContribution> out) {
  for (std::size_t k = 0; k < patches.size(); ++k) out[k] = reflection_path(tx, rx, patches[k]);
}

}  // namespace vlcsim::kernels
