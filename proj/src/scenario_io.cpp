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

#include "vlcsim/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "vlcsim/errors.hpp"

namespace vlcsim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError(path + "/" + key, "unknown field");
  }
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw ValidationError(path, "expected an object");
  return v;
}

std::optional<double> number_field(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_number()) throw ValidationError(path + "/" + key, "expected a number");
  return it->get<double>();
}

double required_number(const json& obj, const std::string& path, const char* key) {
  const std::optional<double> v = number_field(obj, path, key);
  if (!v) throw ValidationError(path + "/" + key, "missing required field");
  return *v;
}

std::optional<Vec3> vec3_field(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  const std::string p = path + "/" + key;
  if (!it->is_array() || it->size() != 3) throw ValidationError(p, "expected an array of three numbers");
  for (const json& c : *it)
    if (!c.is_number()) throw ValidationError(p, "expected an array of three numbers");
  const Vec3 v{(*it)[0].get<double>(), (*it)[1].get<double>(), (*it)[2].get<double>()};
  if (!is_finite(v)) throw ValidationError(p, "components must be finite");
  return v;
}

Pose make_pose(const json& obj, const std::string& path, const Vec3& default_normal) {
  const std::optional<Vec3> position = vec3_field(obj, path, "position");
  if (!position) throw ValidationError(path + "/position", "missing required field");
  const Vec3 normal = vec3_field(obj, path, "normal").value_or(default_normal);
  if (!is_unit(normal)) throw ValidationError(path + "/normal", "must be a unit vector");
  return Pose(*position, normal);
}

Room parse_room(const json& doc) {
  const auto it = doc.find("room");
  if (it == doc.end()) throw ValidationError("/room", "missing required field");
  const json& obj = require_object(*it, "/room");
  reject_unknown_keys(obj, "/room", {"size_x", "size_y", "size_z", "reflectivity"});
  Room room;
  room.size_x = required_number(obj, "/room", "size_x");
  room.size_y = required_number(obj, "/room", "size_y");
  room.size_z = required_number(obj, "/room", "size_z");
  if (const auto r = obj.find("reflectivity"); r != obj.end()) {
    const json& refl = require_object(*r, "/room/reflectivity");
    reject_unknown_keys(refl, "/room/reflectivity", {"floor", "ceiling", "wall_x0", "wall_x1", "wall_y0", "wall_y1"});
    for (Surface s : kAllSurfaces)
      if (const auto v = number_field(refl, "/room/reflectivity", std::string(surface_name(s)).c_str())) room.rho(s) = *v;
  }
  return room;
}

LedSource parse_led(const json& obj, const std::string& path) {
  require_object(obj, path);
  reject_unknown_keys(obj, path, {"position", "normal", "semi_angle_deg", "tx_power_w"});
  const Pose pose = make_pose(obj, path, {0.0, 0.0, -1.0});
  const double semi_angle = required_number(obj, path, "semi_angle_deg");
  if (!(semi_angle > 0.0 && semi_angle < 90.0))
    throw ValidationError(path + "/semi_angle_deg", "must lie strictly between 0 and 90 degrees");
  std::optional<LambertianPattern> pattern;
  try {
    pattern.emplace(Angle::from_degrees(semi_angle));
  } catch (const OutOfDomain& e) {
    throw ValidationError(path + "/semi_angle_deg", e.what());
  }
  return {pose, *pattern, number_field(obj, path, "tx_power_w").value_or(kDefaultTxPowerW)};
}

Photodetector parse_pd(const json& obj, const std::string& path) {
  require_object(obj, path);
  reject_unknown_keys(obj, path, {"position", "normal", "area_m2", "fov_deg"});
  Photodetector pd{make_pose(obj, path, {0.0, 0.0, 1.0})};
  pd.area = number_field(obj, path, "area_m2").value_or(kDefaultDetectorAreaM2);
  pd.fov = Angle::from_degrees(number_field(obj, path, "fov_deg").value_or(kDefaultFovDeg));
  return pd;
}

template <typename T, typename Fn>
std::vector<T> parse_list(const json& doc, const char* key, Fn&& parse_one) {
  std::vector<T> out;
  const auto it = doc.find(key);
  if (it == doc.end()) return out;
  const std::string path = std::string("/") + key;
  if (!it->is_array()) throw ValidationError(path, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) out.push_back(parse_one((*it)[i], path + "/" + std::to_string(i)));
  return out;
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ValidationError("", "document root must be an object");
  reject_unknown_keys(doc, "", {"room", "leds", "pds", "plane_z"});

  Scenario s;
  s.room = parse_room(doc);
  s.leds = parse_list<LedSource>(doc, "leds", parse_led);
  s.pds = parse_list<Photodetector>(doc, "pds", parse_pd);
  s.plane_z = number_field(doc, "", "plane_z").value_or(kDefaultPlaneZ);
  s.validate();
  return s;
}

std::string emit_scenario(const Scenario& scenario) {
  json room = {{"size_x", scenario.room.size_x}, {"size_y", scenario.room.size_y}, {"size_z", scenario.room.size_z}};
  json refl = json::object();
  for (Surface s : kAllSurfaces) refl[std::string(surface_name(s))] = scenario.room.rho(s);
  room["reflectivity"] = refl;

  json leds = json::array();
  for (const LedSource& led : scenario.leds)
    leds.push_back({{"position", to_json(led.pose.position())},
                    {"normal", to_json(led.pose.normal())},
                    {"semi_angle_deg", led.pattern.semi_angle().degrees},
                    {"tx_power_w", led.tx_power}});
  json pds = json::array();
  for (const Photodetector& pd : scenario.pds)
    pds.push_back({{"position", to_json(pd.pose.position())},
                   {"normal", to_json(pd.pose.normal())},
                   {"area_m2", pd.area},
                   {"fov_deg", pd.fov.degrees}});

  const json doc = {{"room", room}, {"leds", leds}, {"pds", pds}, {"plane_z", scenario.plane_z}};
  return doc.dump(2) + "\n";
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace vlcsim
