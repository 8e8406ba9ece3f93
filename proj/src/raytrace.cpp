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

#include "vlcsim/raytrace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vlcsim/errors.hpp"
#include "vlcsim/kernels.hpp"

namespace vlcsim {

namespace {

struct SurfaceFrame {
  Surface surface;
  Vec3 origin;
  Vec3 axis_u;  // unit, spans extent_u
  Vec3 axis_v;  // unit, spans extent_v
  double extent_u;
  double extent_v;
  Vec3 normal;
};

std::array<SurfaceFrame, 6> surface_frames(const Room& r) {
  const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  return {{
      {Surface::floor, {0, 0, 0}, ex, ey, r.size_x, r.size_y, ez},
      {Surface::ceiling, {0, 0, r.size_z}, ex, ey, r.size_x, r.size_y, -ez},
      {Surface::wall_x0, {0, 0, 0}, ey, ez, r.size_y, r.size_z, ex},
      {Surface::wall_x1, {r.size_x, 0, 0}, ey, ez, r.size_y, r.size_z, -ex},
      {Surface::wall_y0, {0, 0, 0}, ex, ez, r.size_x, r.size_z, ey},
      {Surface::wall_y1, {0, r.size_y, 0}, ex, ez, r.size_x, r.size_z, -ey},
  }};
}

// Cell edges along one axis: full cells of `step`, last cell clipped to `extent`.
std::vector<double> cell_edges(double extent, double step) {
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(extent / step - 1e-9)));
  std::vector<double> edges(n + 1);
  for (std::size_t k = 0; k < n; ++k) edges[k] = static_cast<double>(k) * step;
  edges[n] = extent;
  return edges;
}

}  // namespace

std::vector<SurfacePatch> discretize_surfaces(const Room& room, double patch_size) {
  const double smallest = std::min({room.size_x, room.size_y, room.size_z});
  if (!(patch_size > 0.0) || patch_size > smallest)
    throw InvalidArgument("patch size must lie in (0, smallest room dimension]");

  std::vector<SurfacePatch> patches;
  for (const SurfaceFrame& f : surface_frames(room)) {
    const std::vector<double> eu = cell_edges(f.extent_u, patch_size);
    const std::vector<double> ev = cell_edges(f.extent_v, patch_size);
    const double rho = room.rho(f.surface);
    for (std::size_t b = 0; b + 1 < ev.size(); ++b)
      for (std::size_t a = 0; a + 1 < eu.size(); ++a) {
        const double cu = 0.5 * (eu[a] + eu[a + 1]);
        const double cv = 0.5 * (ev[b] + ev[b + 1]);
        const double area = (eu[a + 1] - eu[a]) * (ev[b + 1] - ev[b]);
        patches.push_back({f.origin + f.axis_u * cu + f.axis_v * cv, f.normal, f.axis_u * (eu[a + 1] - eu[a]),
                           f.axis_v * (ev[b + 1] - ev[b]), area, rho, f.surface});
      }
  }
  return patches;
}

namespace {

// 6-point Gauss-Legendre rule on [-1, 1]. Even order keeps nodes off the
// patch center, where the detector horizon (cos = 0 kink) often lies.
constexpr std::array<double, 6> kGaussNodes = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                                               0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
constexpr std::array<double, 6> kGaussWeights = {0.1713244923791704, 0.3607615730331442, 0.4679139345726910,
                                                 0.4679139345726910, 0.3607615730331442, 0.1713244923791704};

// Single-bounce gain per unit reflector area at `point`, reflectivity excluded.
double bounce_density(const LedSource& tx, const Photodetector& rx, const Vec3& point, const Vec3& normal) {
  const Vec3 to_point = point - tx.pose.position();
  const double d1 = norm(to_point);
  const Vec3 to_rx = rx.pose.position() - point;
  const double d2 = norm(to_rx);
  if (d1 == 0.0 || d2 == 0.0) return 0.0;
  const Vec3 u1 = to_point / d1;
  const Vec3 u2 = to_rx / d2;
  const double cos_in = dot(normal, -u1);
  const double cos_out = dot(normal, u2);
  if (dot(tx.pose.normal(), u1) <= 0.0 || cos_in <= 0.0 || cos_out <= 0.0) return 0.0;

  const double phi_rx = angle_between(rx.pose.normal(), -u2);
  if (phi_rx > rx.fov.radians || phi_rx >= std::numbers::pi / 2.0) return 0.0;

  const double irradiance = radiant_intensity(tx.pattern, angle_between(tx.pose.normal(), u1)) * cos_in / (d1 * d1);
  return irradiance * cos_out * std::cos(phi_rx) * rx.area / (std::numbers::pi * d2 * d2);
}

}  // namespace

PathContribution reflection_path(const LedSource& tx, const Photodetector& rx, const SurfacePatch& patch) {
  const double d1 = norm(patch.center - tx.pose.position());
  const double d2 = norm(rx.pose.position() - patch.center);
  if (d1 == 0.0 || d2 == 0.0) return {};

  double sum = 0.0;
  for (std::size_t a = 0; a < kGaussNodes.size(); ++a)
    for (std::size_t b = 0; b < kGaussNodes.size(); ++b) {
      const Vec3 p = patch.center + patch.edge_u * (0.5 * kGaussNodes[a]) + patch.edge_v * (0.5 * kGaussNodes[b]);
      sum += kGaussWeights[a] * kGaussWeights[b] * bounce_density(tx, rx, p, patch.normal);
    }
  return {0.25 * sum * patch.reflectivity * patch.area, (d1 + d2) / kSpeedOfLight};
}

std::vector<PathContribution> first_order_paths(const LedSource& tx, const Photodetector& rx,
                                                const std::vector<SurfacePatch>& patches, Exec exec) {
  std::vector<PathContribution> paths(patches.size());
  if (exec == Exec::serial)
    kernels::reflection_paths_serial(tx, rx, patches, paths);
  else
    kernels::reflection_paths_omp(tx, rx, patches, paths);
  return paths;
}

ImpulseResponse impulse_response(const Scenario& scenario, std::size_t tx_index, std::size_t rx_index,
                                 double patch_size, double bin_width, Exec exec) {
  scenario.validate();
  if (tx_index >= scenario.leds.size()) throw InvalidArgument("transmitter index out of range");
  if (rx_index >= scenario.pds.size()) throw InvalidArgument("detector index out of range");
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) throw InvalidArgument("bin width must be positive");

  const LedSource& tx = scenario.leds[tx_index];
  const Photodetector& rx = scenario.pds[rx_index];

  ImpulseResponse ir;
  ir.bin_width = bin_width;
  ir.los_gain = los_gain(tx, rx);
  ir.los_delay = link_geometry(tx.pose, rx.pose).d / kSpeedOfLight;

  const std::vector<PathContribution> paths =
      first_order_paths(tx, rx, discretize_surfaces(scenario.room, patch_size), exec);

  // Accumulate in patch order so the result does not depend on the kernel.
  for (const PathContribution& p : paths) {
    if (p.gain <= 0.0) continue;
    const auto bin = static_cast<std::size_t>(std::floor((p.delay - ir.t_start) / bin_width));
    if (bin >= ir.bins.size()) ir.bins.resize(bin + 1, 0.0);
    ir.bins[bin] += p.gain;
  }
  return ir;
}

double first_order_gain(const ImpulseResponse& ir) {
  double sum = 0.0;
  for (double b : ir.bins) sum += b;
  return sum;
}

double total_gain(const ImpulseResponse& ir) { return ir.los_gain + first_order_gain(ir); }

double rms_delay_spread(const ImpulseResponse& ir) {
  double weight = 0.0, mean = 0.0;
  for (std::size_t k = 0; k < ir.bins.size(); ++k) {
    weight += ir.bins[k];
    mean += ir.bins[k] * ir.bin_center(k);
  }
  if (weight <= 0.0) return 0.0;
  mean /= weight;
  double var = 0.0;
  for (std::size_t k = 0; k < ir.bins.size(); ++k) {
    const double dt = ir.bin_center(k) - mean;
    var += ir.bins[k] * dt * dt;
  }
  return std::sqrt(var / weight);
}

}  // namespace vlcsim
