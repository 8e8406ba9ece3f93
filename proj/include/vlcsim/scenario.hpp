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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlcsim/los_channel.hpp"

namespace vlcsim {

enum class Surface { floor, ceiling, wall_x0, wall_x1, wall_y0, wall_y1 };

inline constexpr std::array<Surface, 6> kAllSurfaces = {Surface::floor,   Surface::ceiling, Surface::wall_x0,
                                                        Surface::wall_x1, Surface::wall_y0, Surface::wall_y1};

/// Key used for the surface in scenario files ("floor", "wall_x0", ...).
std::string_view surface_name(Surface s);

inline constexpr double kDefaultReflectivity = 0.8;

/// Axis-aligned box [0, size_x] x [0, size_y] x [0, size_z].
struct Room {
  double size_x = 4.0;
  double size_y = 4.0;
  double size_z = 3.0;
  std::array<double, 6> reflectivity{kDefaultReflectivity, kDefaultReflectivity, kDefaultReflectivity,
                                     kDefaultReflectivity, kDefaultReflectivity, kDefaultReflectivity};

  double rho(Surface s) const { return reflectivity[static_cast<std::size_t>(s)]; }
  double& rho(Surface s) { return reflectivity[static_cast<std::size_t>(s)]; }

  bool contains(const Vec3& p) const {
    return p.x >= 0.0 && p.x <= size_x && p.y >= 0.0 && p.y <= size_y && p.z >= 0.0 && p.z <= size_z;
  }

  bool operator==(const Room&) const = default;
};

inline constexpr double kDefaultPlaneZ = 0.75;

struct Scenario {
  Room room;
  std::vector<LedSource> leds;
  std::vector<Photodetector> pds;
  double plane_z = kDefaultPlaneZ;

  /// Throws ValidationError naming the first offending field, using the same
  /// paths as the scenario file ("/leds/2/tx_power_w").
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

/// One row of the built-in simulation table.
struct ScenarioPreset {
  std::string_view name;
  double led_spacing;       // side of the LED square [m]
  double irradiance_angle;  // LED semi-angle [deg]
  double detector_spacing;  // side of the detector square [m]
};

/// The four built-in presets, ordered by semi-angle: 4, 5, 7, 8 degrees.
std::span<const ScenarioPreset> table1_presets();

/// Throws InvalidArgument("unknown preset ...") for names other than
/// table1:4deg, table1:5deg, table1:7deg, table1:8deg.
const ScenarioPreset& find_preset(std::string_view name);

/// 4 x 4 x 3 m room, four downward LEDs on the ceiling and four upward
/// detectors on the 0.75 m working plane, each set a square centered at
/// (2, 2). Throws InvalidArgument unless `preset` equals one of the table rows.
Scenario preset_scenario(const ScenarioPreset& preset);

}  // namespace vlcsim
