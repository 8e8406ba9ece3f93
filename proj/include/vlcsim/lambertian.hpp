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

#include "vlcsim/geometry.hpp"

namespace vlcsim {

/// Lambertian order m = -ln 2 / ln cos(semi_angle). `semi_angle` is the
/// half-power semi-angle in radians and must lie in (0, pi/2); anything else
/// throws OutOfDomain.
double lambertian_order(double semi_angle);

/// cos^m(theta) evaluated as exp(m ln cos theta); 0 for theta >= pi/2.
/// ln cos is taken via log1p so that large m near the axis stays accurate.
double cos_pow(double m, double theta);

/// Emission pattern of an LED. Only constructible from the semi-angle, so the
/// order always agrees with it.
class LambertianPattern {
 public:
  /// Throws OutOfDomain unless 0 < semi_angle < 90 degrees.
  explicit LambertianPattern(Angle semi_angle);

  static LambertianPattern from_degrees(double deg) { return LambertianPattern(Angle::from_degrees(deg)); }

  const Angle& semi_angle() const noexcept { return semi_angle_; }
  double order() const noexcept { return order_; }

  bool operator==(const LambertianPattern&) const = default;

 private:
  Angle semi_angle_;
  double order_;
};

/// Normalized radiant intensity R(theta) = (m+1) cos^m(theta) / (2 pi) [1/sr].
/// Zero outside the forward hemisphere.
double radiant_intensity(const LambertianPattern& pattern, double theta);

}  // namespace vlcsim
