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

#include "vlcsim/lambertian.hpp"

#include <cmath>
#include <numbers>

#include "vlcsim/errors.hpp"

namespace vlcsim {

namespace {

// ln cos(theta) without the cancellation of log(cos(theta)) near theta = 0:
// cos(theta) = 1 - 2 sin^2(theta / 2).
double log_cos(double theta) {
  const double s = std::sin(0.5 * theta);
  return std::log1p(-2.0 * s * s);
}

}  // namespace

double lambertian_order(double semi_angle) {
  if (!(semi_angle > 0.0 && semi_angle < std::numbers::pi / 2.0))
    throw OutOfDomain("semi-angle must lie strictly between 0 and 90 degrees");
  const double lc = log_cos(semi_angle);
  if (!(lc < 0.0)) throw OutOfDomain("semi-angle too small for a finite Lambertian order");
  return -std::numbers::ln2 / lc;
}

double cos_pow(double m, double theta) {
  if (theta >= std::numbers::pi / 2.0) return 0.0;
  if (std::cos(theta) <= 0.0) return 0.0;
  return std::exp(m * log_cos(theta));
}

LambertianPattern::LambertianPattern(Angle semi_angle)
    : semi_angle_(semi_angle), order_(lambertian_order(semi_angle.radians)) {}

double radiant_intensity(const LambertianPattern& pattern, double theta) {
  const double m = pattern.order();
  return (m + 1.0) * cos_pow(m, theta) / (2.0 * std::numbers::pi);
}

}  // namespace vlcsim
