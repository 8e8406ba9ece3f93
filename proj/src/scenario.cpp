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

#include "vlcsim/scenario.hpp"

#include <cmath>
#include <numbers>

#include "vlcsim/errors.hpp"

namespace vlcsim {

namespace {

constexpr std::array<ScenarioPreset, 4> kPresets = {{
    {"table1:4deg", 1.5, 4.0, 0.5},
    {"table1:5deg", 1.5, 5.0, 0.5},
    {"table1:7deg", 1.5, 7.0, 0.5},
    {"table1:8deg", 1.5, 8.0, 0.5},
}};

std::string index_path(std::string_view list, std::size_t i, std::string_view field) {
  return "/" + std::string(list) + "/" + std::to_string(i) + "/" + std::string(field);
}

}  // namespace

std::string_view surface_name(Surface s) {
  switch (s) {
    case Surface::floor: return "floor";
    case Surface::ceiling: return "ceiling";
    case Surface::wall_x0: return "wall_x0";
    case Surface::wall_x1: return "wall_x1";
    case Surface::wall_y0: return "wall_y0";
    case Surface::wall_y1: return "wall_y1";
  }
  return "?";
}

void Scenario::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(room.size_x)) throw ValidationError("/room/size_x", "must be positive");
  if (!positive(room.size_y)) throw ValidationError("/room/size_y", "must be positive");
  if (!positive(room.size_z)) throw ValidationError("/room/size_z", "must be positive");
  for (Surface s : kAllSurfaces) {
    const double r = room.rho(s);
    if (!(r >= 0.0 && r <= 1.0))
      throw ValidationError("/room/reflectivity/" + std::string(surface_name(s)), "must lie in [0, 1]");
  }
  for (std::size_t i = 0; i < leds.size(); ++i) {
    const LedSource& led = leds[i];
    if (!room.contains(led.pose.position())) throw ValidationError(index_path("leds", i, "position"), "outside the room");
    if (!(led.tx_power > 0.0) || !std::isfinite(led.tx_power))
      throw ValidationError(index_path("leds", i, "tx_power_w"), "must be positive");
  }
  for (std::size_t i = 0; i < pds.size(); ++i) {
    const Photodetector& pd = pds[i];
    if (!room.contains(pd.pose.position())) throw ValidationError(index_path("pds", i, "position"), "outside the room");
    if (!(pd.area > 0.0) || !std::isfinite(pd.area)) throw ValidationError(index_path("pds", i, "area_m2"), "must be positive");
    if (!(pd.fov.radians > 0.0 && pd.fov.radians <= std::numbers::pi / 2.0))
      throw ValidationError(index_path("pds", i, "fov_deg"), "must lie in (0, 90]");
  }
  if (!(plane_z >= 0.0 && plane_z <= room.size_z)) throw ValidationError("/plane_z", "must lie in [0, size_z]");
}

std::span<const ScenarioPreset> table1_presets() { return kPresets; }

const ScenarioPreset& find_preset(std::string_view name) {
  for (const ScenarioPreset& p : kPresets)
    if (p.name == name) return p;
  throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

Scenario preset_scenario(const ScenarioPreset& preset) {
  bool known = false;
  for (const ScenarioPreset& p : kPresets)
    known = known || (p.led_spacing == preset.led_spacing && p.irradiance_angle == preset.irradiance_angle &&
                      p.detector_spacing == preset.detector_spacing);
  if (!known) throw InvalidArgument("unknown preset '" + std::string(preset.name) + "'");

  Scenario s;
  const double cx = s.room.size_x / 2.0;
  const double cy = s.room.size_y / 2.0;
  const double led_half = preset.led_spacing / 2.0;
  const double pd_half = preset.detector_spacing / 2.0;
  const LambertianPattern pattern = LambertianPattern::from_degrees(preset.irradiance_angle);
  constexpr std::array<double, 2> kSigns = {-1.0, 1.0};
  for (double sx : kSigns)
    for (double sy : kSigns) {
      s.leds.push_back({Pose({cx + sx * led_half, cy + sy * led_half, s.room.size_z}, {0.0, 0.0, -1.0}), pattern,
                        kDefaultTxPowerW});
      s.pds.push_back({Pose({cx + sx * pd_half, cy + sy * pd_half, s.plane_z}, {0.0, 0.0, 1.0})});
    }
  s.validate();
  return s;
}

}  // namespace vlcsim
