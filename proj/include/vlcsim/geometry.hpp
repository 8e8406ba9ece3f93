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

#include <cmath>
#include <numbers>

namespace vlcsim {

/// Cartesian vector in meters (positions) or dimensionless (directions).
/// Right-handed, z up, floor at z = 0.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  bool operator==(const Vec3&) const = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Tolerance on |n| - 1 for anything treated as a unit vector.
inline constexpr double kUnitTolerance = 1e-9;

inline bool is_unit(const Vec3& v) { return std::abs(norm(v) - 1.0) <= kUnitTolerance; }

/// Angle that remembers the degree value it was entered with, so that values
/// read from files in degrees serialize back bit-exactly.
struct Angle {
  double degrees = 0.0;
  double radians = 0.0;

  static Angle from_degrees(double deg) { return {deg, deg * std::numbers::pi / 180.0}; }
  static Angle from_radians(double rad) { return {rad * 180.0 / std::numbers::pi, rad}; }

  bool operator==(const Angle&) const = default;
};

/// Position plus unit normal. Emitters measure the irradiance angle against
/// the normal, detectors the incidence angle.
class Pose {
 public:
  Pose() = default;

  /// Throws InvalidArgument on non-finite components or a non-unit normal.
  Pose(const Vec3& position, const Vec3& normal);

  const Vec3& position() const noexcept { return position_; }
  const Vec3& normal() const noexcept { return normal_; }

  bool operator==(const Pose&) const = default;

 private:
  Vec3 position_{};
  Vec3 normal_{0.0, 0.0, 1.0};
};

struct LinkGeometry {
  double theta = 0.0;  // irradiance angle at the emitter [rad]
  double phi = 0.0;    // incidence angle at the detector [rad]
  double d = 0.0;      // line-of-sight distance [m]
};

/// Angle between two unit vectors in [0, pi]. Throws InvalidArgument when
/// either input is not unit length within kUnitTolerance.
double angle_between(const Vec3& u, const Vec3& v);

/// Irradiance angle, incidence angle and distance of the straight path from
/// `tx` to `rx`. Throws DegenerateGeometry when the positions coincide.
LinkGeometry link_geometry(const Pose& tx, const Pose& rx);

}  // namespace vlcsim
