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

#include <array>
#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "vlcsim/errors.hpp"
#include "vlcsim/lambertian.hpp"

using namespace vlcsim;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
constexpr std::array<double, 4> kTableAngles = {4.0, 5.0, 7.0, 8.0};
}  // namespace

TEST_CASE("lambertian_order at 60 degrees is exactly one") {
  CHECK(std::abs(lambertian_order(60.0 * kDeg) - 1.0) <= 1e-12);
}

TEST_CASE("lambertian_order matches the extended-precision oracle") {
  // Frozen from a 40-digit evaluation of -ln 2 / ln cos(theta_half).
  CHECK(lambertian_order(4.0 * kDeg) == doctest::Approx(284.20233394963656757).epsilon(1e-12));
  CHECK(lambertian_order(5.0 * kDeg) == doctest::Approx(181.80621198630842269).epsilon(1e-12));
  CHECK(lambertian_order(7.0 * kDeg) == doctest::Approx(92.644848548383942281).epsilon(1e-12));
  CHECK(lambertian_order(8.0 * kDeg) == doctest::Approx(70.876872679127208727).epsilon(1e-12));
  for (double a : {0.5, 4.0, 17.0, 45.0, 80.0, 89.5})
    CHECK(lambertian_order(a * kDeg) ==
          doctest::Approx(static_cast<double>(testing::reference_order(a))).epsilon(1e-12));
}

TEST_CASE("lambertian_order domain") {
  CHECK_THROWS_AS(lambertian_order(0.0), OutOfDomain);
  CHECK_THROWS_AS(lambertian_order(-0.1), OutOfDomain);
  CHECK_THROWS_AS(lambertian_order(std::numbers::pi / 2), OutOfDomain);
  CHECK_THROWS_AS(lambertian_order(2.0), OutOfDomain);
  CHECK_THROWS_AS(lambertian_order(NAN), OutOfDomain);
  CHECK_THROWS_AS(LambertianPattern::from_degrees(90.0), OutOfDomain);
}

TEST_CASE("lambertian_order is strictly decreasing") {
  double prev = lambertian_order(0.2 * kDeg);
  for (double a = 0.4; a < 89.9; a += 0.2) {
    const double m = lambertian_order(a * kDeg);
    CHECK(m < prev);
    prev = m;
  }
}

TEST_CASE("radiant_intensity examples") {
  const LambertianPattern p = LambertianPattern::from_degrees(60.0);
  CHECK(radiant_intensity(p, 0.0) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
  CHECK(radiant_intensity(p, std::numbers::pi / 2) == 0.0);
  CHECK(radiant_intensity(p, 2.0) == 0.0);
  CHECK(radiant_intensity(p, std::numbers::pi) == 0.0);
}

TEST_CASE("half-power property and round trip for the table angles") {
  for (double a : kTableAngles) {
    CAPTURE(a);
    const LambertianPattern p = LambertianPattern::from_degrees(a);
    CHECK(std::abs(radiant_intensity(p, p.semi_angle().radians) / radiant_intensity(p, 0.0) - 0.5) <= 1e-9);
    CHECK(std::abs(std::pow(std::cos(p.semi_angle().radians), p.order()) - 0.5) <= 1e-9);
  }
}

TEST_CASE("radiant intensity integrates to one over the forward hemisphere") {
  for (double a : {60.0, 8.0, 4.0}) {
    CAPTURE(a);
    const LambertianPattern p = LambertianPattern::from_degrees(a);
    const long double total = testing::adaptive_simpson(
        [&](long double t) {
          return static_cast<long double>(radiant_intensity(p, static_cast<double>(t))) * 2.0L *
                 std::numbers::pi_v<long double> * std::sin(t);
        },
        0.0L, std::numbers::pi_v<long double> / 2.0L, 1e-12L);
    CHECK(std::fabs(total - 1.0L) <= 1e-6L);
  }
}

TEST_CASE("radiant intensity is strictly decreasing on the forward hemisphere") {
  for (double a : {4.0, 8.0, 30.0, 60.0, 85.0}) {
    const LambertianPattern p = LambertianPattern::from_degrees(a);
    double prev = radiant_intensity(p, 0.0);
    // Stop before cos^m underflows to zero for the narrow patterns.
    for (double t = 0.01; t < std::min(1.5, 40.0 * a * kDeg); t += 0.01) {
      const double r = radiant_intensity(p, t);
      CHECK(r < prev);
      prev = r;
    }
  }
}
