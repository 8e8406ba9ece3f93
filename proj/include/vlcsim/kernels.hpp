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

#pragma once

// Inner loops of the simulator in two flavours: a plain serial reference and
// an OpenMP version. Every output element is written by exactly one iteration
// and nothing is reduced across iterations, so both flavours agree bit for bit.

#include <cstddef>
#include <span>

#include "vlcsim/los_channel.hpp"
#include "vlcsim/raytrace.hpp"

namespace vlcsim::kernels {

/// Working-plane grid the sweeps evaluate on.
struct PlaneGrid {
  std::size_t nx;
  std::size_t ny;
  double size_x;
  double size_y;
  double z;

  double x(std::size_t i) const { return static_cast<double>(i) * size_x / static_cast<double>(nx - 1); }
  double y(std::size_t j) const { return static_cast<double>(j) * size_y / static_cast<double>(ny - 1); }
  std::size_t size() const { return nx * ny; }
};

/// Upward-facing probe with default area and FOV at (x, y, z).
Photodetector probe_at(double x, double y, double z);

// out[i * n_tx + j] = los_gain(leds[j], pds[i])
void channel_matrix_serial(std::span<const LedSource> leds, std::span<const Photodetector> pds,
                           std::span<double> out);
void channel_matrix_omp(std::span<const LedSource> leds, std::span<const Photodetector> pds,
                        std::span<double> out);

// out[p * n_leds + k] = tx_power_k * los_gain(led k -> probe at grid point p)
void plane_power_serial(std::span<const LedSource> leds, const PlaneGrid& grid, std::span<double> out);
void plane_power_omp(std::span<const LedSource> leds, const PlaneGrid& grid, std::span<double> out);

// out[k] = reflection_path(tx, rx, patches[k])
void reflection_paths_serial(const LedSource& tx, const Photodetector& rx, std::span<const SurfacePatch> patches,
                             std::span<PathContribution> out);
void reflection_paths_omp(const LedSource& tx, const Photodetector& rx, std::span<const SurfacePatch> patches,
                          std::span<PathContribution> out);

}  // namespace vlcsim::kernels
