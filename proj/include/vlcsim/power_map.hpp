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
#include <limits>
#include <vector>

#include "vlcsim/exec.hpp"
#include "vlcsim/scenario.hpp"

namespace vlcsim {

/// Evaluation grid over the full floor extent; point (i, j) sits at
/// x = i * size_x / (nx - 1), y = j * size_y / (ny - 1).
struct GridSpec {
  std::size_t nx = 81;
  std::size_t ny = 81;

  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

/// Gridded received power [W]. Values are stored x-fastest: index = j * nx + i.
struct PowerMap {
  GridSpec grid;
  double size_x = 0.0;
  double size_y = 0.0;
  double plane_z = 0.0;
  std::vector<double> values;

  double x(std::size_t i) const { return static_cast<double>(i) * size_x / static_cast<double>(grid.nx - 1); }
  double y(std::size_t j) const { return static_cast<double>(j) * size_y / static_cast<double>(grid.ny - 1); }
  double at(std::size_t i, std::size_t j) const { return values[j * grid.nx + i]; }
};

/// Received power of an upward-facing probe detector (default area and FOV)
/// at every grid point on the scenario's working plane, summed over all LEDs.
PowerMap sweep_plane(const Scenario& scenario, GridSpec grid = {}, Exec exec = Exec::parallel);

/// Bilinear interpolation of the map at (x, y); clamps to the map extent.
double interpolate(const PowerMap& map, double x, double y);

/// 10 log10(P / 1 mW); -infinity for P = 0.
double to_dbm(double watts);

struct CoverageMetrics {
  double peak_w = 0.0;
  double peak_dbm = -std::numeric_limits<double>::infinity();
  double min_w = 0.0;
  double min_dbm = -std::numeric_limits<double>::infinity();
  double dynamic_range_db = 0.0;  // +inf when the minimum is zero
  double covered_fraction = 0.0;  // share of points within threshold of the peak
  bool all_zero = false;          // peak undefined; covered_fraction forced to 0
};

/// Throws InvalidArgument for an empty map or a negative threshold.
CoverageMetrics coverage_metrics(const PowerMap& map, double relative_threshold_db);

struct InterferencePoint {
  std::size_t dominant = 0;  // LED with the largest received power, lowest index on ties
  double ratio = 0.0;        // (total - dominant) / dominant
  bool defined = false;      // false when the dominant power is zero
};

struct InterferenceMap {
  GridSpec grid;
  double size_x = 0.0;
  double size_y = 0.0;
  double plane_z = 0.0;
  std::vector<InterferencePoint> points;  // x-fastest, same layout as PowerMap

  double x(std::size_t i) const { return static_cast<double>(i) * size_x / static_cast<double>(grid.nx - 1); }
  double y(std::size_t j) const { return static_cast<double>(j) * size_y / static_cast<double>(grid.ny - 1); }
  const InterferencePoint& at(std::size_t i, std::size_t j) const { return points[j * grid.nx + i]; }

  /// Mean ratio over points where it is defined, summed in grid order.
  double mean_ratio() const;
};

/// Co-channel interference at every grid point. Throws InvalidArgument for
/// fewer than two LEDs.
InterferenceMap interference_map(const Scenario& scenario, GridSpec grid = {}, Exec exec = Exec::parallel);

}  // namespace vlcsim
