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

#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "vlcsim/errors.hpp"
#include "vlcsim/scenario_io.hpp"

using namespace vlcsim;

namespace {

std::string field_of(const std::string& doc) {
  try {
    parse_scenario(doc);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("minimal document takes every default") {
  const Scenario s = parse_scenario(R"({
    "room": {"size_x": 4, "size_y": 4, "size_z": 3},
    "leds": [{"position": [2, 2, 3], "semi_angle_deg": 60}]
  })");
  CHECK(s.room.size_z == 3.0);
  for (Surface f : kAllSurfaces) CHECK(s.room.rho(f) == 0.8);
  REQUIRE(s.leds.size() == 1);
  CHECK(s.leds[0].pose.normal() == Vec3{0, 0, -1});
  CHECK(s.leds[0].tx_power == 1.0);
  CHECK(s.leds[0].pattern.order() == doctest::Approx(1.0));
  CHECK(s.pds.empty());
  CHECK(s.plane_z == 0.75);

  const Scenario with_pd = parse_scenario(R"({"room": {"size_x": 4, "size_y": 4, "size_z": 3},
    "pds": [{"position": [1, 1, 0.75]}]})");
  REQUIRE(with_pd.pds.size() == 1);
  CHECK(with_pd.pds[0].pose.normal() == Vec3{0, 0, 1});
  CHECK(with_pd.pds[0].area == 1e-4);
  CHECK(with_pd.pds[0].fov.degrees == 90.0);
}

TEST_CASE("validation errors name the field") {
  const std::string room = R"("room": {"size_x": 4, "size_y": 4, "size_z": 3})";
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2,3], "semi_angle_deg": 95}]})") == "/leds/0/semi_angle_deg");
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2,3], "semi_angle_deg": 0}]})") == "/leds/0/semi_angle_deg");
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2,3.5], "semi_angle_deg": 10}]})") == "/leds/0/position");
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2,3], "semi_angle_deg": 10, "tx_power_w": 0}]})") == "/leds/0/tx_power_w");
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2], "semi_angle_deg": 10}]})") == "/leds/0/position");
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2,3], "normal": [0,0,-2], "semi_angle_deg": 10}]})") == "/leds/0/normal");
  CHECK(field_of("{" + room + R"(, "leds": [{"position": [2,2,3]}]})") == "/leds/0/semi_angle_deg");
  CHECK(field_of("{" + room + R"(, "pds": [{"position": [1,1,1]}, {"position": [1,1,1], "fov_deg": 120}]})") == "/pds/1/fov_deg");
  CHECK(field_of("{" + room + R"(, "pds": [{"position": [1,1,1], "area_m2": -1}]})") == "/pds/0/area_m2");
  CHECK(field_of(R"({"room": {"size_x": 4, "size_y": 4, "size_z": 3, "reflectivity": {"floor": 1.2}}})") == "/room/reflectivity/floor");
  CHECK(field_of(R"({"room": {"size_x": 4, "size_y": 4, "size_z": 3, "reflectivity": {"roof": 0.5}}})") == "/room/reflectivity/roof");
  CHECK(field_of(R"({"room": {"size_x": 4, "size_y": -4, "size_z": 3}})") == "/room/size_y");
  CHECK(field_of(R"({"room": {"size_x": 4, "size_z": 3}})") == "/room/size_y");
  CHECK(field_of(R"({"room": {"size_x": "4", "size_y": 4, "size_z": 3}})") == "/room/size_x");
  CHECK(field_of("{" + room + R"(, "plane_z": 3.5})") == "/plane_z");
  CHECK(field_of("{" + room + R"(, "colour": "blue"})") == "/colour");
  CHECK(field_of(R"({"leds": []})") == "/room");
}

TEST_CASE("malformed JSON reports its location") {
  CHECK_THROWS_WITH_AS(parse_scenario("{\n  \"room\": {\"size_x\": 4,,}\n}"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_scenario(""), ParseError);
}

TEST_CASE("preset round trip and canonical form") {
  for (const ScenarioPreset& p : table1_presets()) {
    const Scenario s = preset_scenario(p);
    const std::string doc = emit_scenario(s);
    CHECK(parse_scenario(doc) == s);
    CHECK(emit_scenario(s) == doc);
    CHECK(doc.find('\r') == std::string::npos);
    CHECK(doc.back() == '\n');
  }
}

TEST_CASE("emit writes defaults explicitly") {
  const std::string doc = emit_scenario(Scenario{});
  for (const char* key : {"\"reflectivity\"", "\"ceiling\"", "\"wall_y1\"", "\"plane_z\"", "\"leds\"", "\"pds\""})
    CHECK(doc.find(key) != std::string::npos);
  const Scenario one = parse_scenario(R"({"room": {"size_x": 4, "size_y": 4, "size_z": 3},
    "leds": [{"position": [2, 2, 3], "semi_angle_deg": 60}], "pds": [{"position": [1, 1, 0.5]}]})");
  const std::string full = emit_scenario(one);
  for (const char* key : {"\"normal\"", "\"tx_power_w\"", "\"area_m2\"", "\"fov_deg\""})
    CHECK(full.find(key) != std::string::npos);
}

TEST_CASE("parse(emit(s)) == s on random scenarios") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Scenario s = testing::random_scenario(rng);
    REQUIRE_NOTHROW(s.validate());
    const std::string doc = emit_scenario(s);
    const Scenario back = parse_scenario(doc);
    CHECK(back == s);
    CHECK(emit_scenario(back) == doc);
  }
}
