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

#include <filesystem>
#include <string>
#include <string_view>

#include "vlcsim/scenario.hpp"

namespace vlcsim {

/// Reads a JSON scenario document:
///
///   {
///     "room": {"size_x": 4, "size_y": 4, "size_z": 3,
///              "reflectivity": {"floor": 0.8, "ceiling": 0.8, "wall_x0": 0.8, ...}},
///     "leds": [{"position": [x, y, z], "normal": [0, 0, -1],
///               "semi_angle_deg": 4, "tx_power_w": 1}],
///     "pds":  [{"position": [x, y, z], "normal": [0, 0, 1],
///               "area_m2": 1e-4, "fov_deg": 90}],
///     "plane_z": 0.75
///   }
///
/// Only room sizes, LED position/semi-angle and detector position are
/// required. Throws ParseError for malformed JSON (message carries line and
/// column) and ValidationError naming the field for everything else,
/// including unknown keys.
Scenario parse_scenario(std::string_view text);

/// Canonical JSON: every field written explicitly, keys sorted, numbers in
/// shortest round-trip form, LF line endings. parse_scenario(emit_scenario(s))
/// == s for every valid scenario.
std::string emit_scenario(const Scenario& scenario);

/// Reads and parses a scenario file; I/O failures throw std::runtime_error.
Scenario load_scenario_file(const std::filesystem::path& path);

}  // namespace vlcsim
