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

#include <cstddef>
#include <vector>

#include "vlcsim/exec.hpp"
#include "vlcsim/scenario.hpp"

namespace vlcsim {

inline constexpr double kSpeedOfLight = 2.998e8;  // [m/s]
inline constexpr double kDefaultPatchSize = 0.05;  // [m]
inline constexpr double kDefaultBinWidth = 0.2e-9;  // [s]

/// Flat reflecting element of a room surface; the normal points into the room.
/// `edge_u` and `edge_v` are the full edge vectors of the rectangle.
struct SurfacePatch {
  Vec3 center;
  Vec3 normal;
  Vec3 edge_u;
  Vec3 edge_v;
  double area = 0.0;
  double reflectivity = 0.0;
  Surface surface = Surface::floor;
};

/// Tiles all six surfaces with square patches of side <= patch_size; the last
/// row and column along each edge may be narrower. Throws InvalidArgument
/// unless 0 < patch_size <= smallest room dimension.
std::vector<SurfacePatch> discretize_surfaces(const Room& room, double patch_size);

/// One single-bounce path: gain and total propagation delay (d1 + d2) / c.
struct PathContribution {
  double gain = 0.0;
  double delay = 0.0;
};

/// Gain of the paths LED -> patch -> detector with an ideal Lambertian
/// (rho cos / pi) re-emission at the patch:
///
///   h = integral over patch of  R(theta_tx) cos(phi_in) / d1^2
///                              * rho * cos(theta_out) cos(phi_rx) A / (pi d2^2) dA
///
/// integrated with a 6x6 Gauss-Legendre rule over the patch. Points behind
/// either endpoint or outside the detector FOV contribute nothing. The delay
/// is that of the path through the patch center; a patch whose center
/// touches an endpoint yields an empty contribution.
PathContribution reflection_path(const LedSource& tx, const Photodetector& rx, const SurfacePatch& patch);

/// First-order contributions of every patch, in patch order.
std::vector<PathContribution> first_order_paths(const LedSource& tx, const Photodetector& rx,
                                                const std::vector<SurfacePatch>& patches,
                                                Exec exec = Exec::parallel);

/// LOS spike plus a time-binned diffuse tail. Bin k covers
/// [t_start + k * bin_width, t_start + (k + 1) * bin_width); t_start = 0.
struct ImpulseResponse {
  double bin_width = kDefaultBinWidth;
  double t_start = 0.0;
  std::vector<double> bins;
  double los_gain = 0.0;
  double los_delay = 0.0;

  double bin_center(std::size_t k) const { return t_start + (static_cast<double>(k) + 0.5) * bin_width; }
};

/// Impulse response from scenario.leds[tx_index] to scenario.pds[rx_index]
/// with first-order wall, floor and ceiling reflections. Throws
/// InvalidArgument for bad indices, patch size or bin width.
ImpulseResponse impulse_response(const Scenario& scenario, std::size_t tx_index, std::size_t rx_index,
                                 double patch_size = kDefaultPatchSize, double bin_width = kDefaultBinWidth,
                                 Exec exec = Exec::parallel);

/// Sum of the binned reflections (no LOS).
double first_order_gain(const ImpulseResponse& ir);

/// LOS gain plus all bins.
double total_gain(const ImpulseResponse& ir);

/// Gain-weighted RMS delay spread of the binned tail (bin centers) [s].
/// Zero when the tail is empty.
double rms_delay_spread(const ImpulseResponse& ir);

}  // namespace vlcsim
