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

#include "vlcsim/power_map.hpp"

#include <algorithm>
#include <cmath>

#include "vlcsim/errors.hpp"
#include "vlcsim/kernels.hpp"

namespace vlcsim {

namespace {

kernels::PlaneGrid plane_grid(const Scenario& scenario, const GridSpec& grid) {
  return {grid.nx, grid.ny, scenario.room.size_x, scenario.room.size_y, scenario.plane_z};
}

// Per-point, per-LED received power, layout [point][led].
std::vector<double> per_led_power(const Scenario& scenario, const GridSpec& grid, Exec exec) {
  scenario.validate();
  grid.validate();
  const kernels::PlaneGrid pg = plane_grid(scenario, grid);
  std::vector<double> power(pg.size() * scenario.leds.size(), 0.0);
  if (exec == Exec::serial)
    kernels::plane_power_serial(scenario.leds, pg, power);
  else
    kernels::plane_power_omp(scenario.leds, pg, power);
  return power;
}

}  // namespace

void GridSpec::validate() const {
  if (nx < 2 || ny < 2) throw InvalidArgument("grid needs at least 2 points along each axis");
}

PowerMap sweep_plane(const Scenario& scenario, GridSpec grid, Exec exec) {
  const std::vector<double> power = per_led_power(scenario, grid, exec);
  const std::size_t n_leds = scenario.leds.size();
  PowerMap map{grid, scenario.room.size_x, scenario.room.size_y, scenario.plane_z,
               std::vector<double>(grid.nx * grid.ny, 0.0)};
  for (std::size_t p = 0; p < map.values.size(); ++p) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n_leds; ++k) sum += power[p * n_leds + k];
    map.values[p] = sum;
  }
  return map;
}

double interpolate(const PowerMap& map, double x, double y) {
  const auto locate = [](double v, double size, std::size_t n, std::size_t& lo, double& t) {
    const double f = std::clamp(v / size, 0.0, 1.0) * static_cast<double>(n - 1);
    lo = std::min(static_cast<std::size_t>(std::floor(f)), n - 2);
    t = f - static_cast<double>(lo);
  };
  std::size_t i = 0, j = 0;
  double tx = 0.0, ty = 0.0;
  locate(x, map.size_x, map.grid.nx, i, tx);
  locate(y, map.size_y, map.grid.ny, j, ty);
  const double v00 = map.at(i, j), v10 = map.at(i + 1, j);
  const double v01 = map.at(i, j + 1), v11 = map.at(i + 1, j + 1);
  return (1.0 - ty) * ((1.0 - tx) * v00 + tx * v10) + ty * ((1.0 - tx) * v01 + tx * v11);
}

double to_dbm(double watts) {
  if (watts <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(watts / 1e-3);
}

CoverageMetrics coverage_metrics(const PowerMap& map, double relative_threshold_db) {
  if (map.values.empty()) throw InvalidArgument("coverage metrics need a non-empty map");
  if (!(relative_threshold_db >= 0.0)) throw InvalidArgument("relative threshold must be >= 0 dB");

  const auto [lo, hi] = std::minmax_element(map.values.begin(), map.values.end());
  CoverageMetrics m;
  m.peak_w = *hi;
  m.min_w = *lo;
  m.peak_dbm = to_dbm(m.peak_w);
  m.min_dbm = to_dbm(m.min_w);
  if (m.peak_w <= 0.0) {
    m.all_zero = true;
    m.covered_fraction = 0.0;
    m.dynamic_range_db = 0.0;
    return m;
  }
  m.dynamic_range_db =
      m.min_w > 0.0 ? 10.0 * std::log10(m.peak_w / m.min_w) : std::numeric_limits<double>::infinity();
  const double limit = m.peak_w * std::pow(10.0, -relative_threshold_db / 10.0);
  const auto covered = std::count_if(map.values.begin(), map.values.end(), [&](double v) { return v >= limit; });
  m.covered_fraction = static_cast<double>(covered) / static_cast<double>(map.values.size());
  return m;
}

double InterferenceMap::mean_ratio() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const InterferencePoint& p : points)
    if (p.defined) {
      sum += p.ratio;
      ++n;
    }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

InterferenceMap interference_map(const Scenario& scenario, GridSpec grid, Exec exec) {
  if (scenario.leds.size() < 2) throw InvalidArgument("interference map needs at least two LEDs");
  const std::vector<double> power = per_led_power(scenario, grid, exec);
  const std::size_t n_leds = scenario.leds.size();
  InterferenceMap out{grid, scenario.room.size_x, scenario.room.size_y, scenario.plane_z,
                      std::vector<InterferencePoint>(grid.nx * grid.ny)};
  for (std::size_t p = 0; p < out.points.size(); ++p) {
    const double* row = power.data() + p * n_leds;
    std::size_t dominant = 0;
    for (std::size_t k = 1; k < n_leds; ++k)
      if (row[k] > row[dominant]) dominant = k;
    double others = 0.0;
    for (std::size_t k = 0; k < n_leds; ++k)
      if (k != dominant) others += row[k];
    InterferencePoint& ip = out.points[p];
    ip.dominant = dominant;
    ip.defined = row[dominant] > 0.0;
    ip.ratio = ip.defined ? others / row[dominant] : 0.0;
  }
  return out;
}

}  // namespace vlcsim
