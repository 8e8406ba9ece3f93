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

#include "vlcsim/geometry.hpp"

#include <algorithm>

#include "vlcsim/errors.hpp"

namespace vlcsim {

Pose::Pose(const Vec3& position, const Vec3& normal) : position_(position), normal_(normal) {
  if (!is_finite(position)) throw InvalidArgument("pose position must be finite");
  if (!is_finite(normal) || !is_unit(normal)) throw InvalidArgument("pose normal must be a unit vector");
}

double angle_between(const Vec3& u, const Vec3& v) {
  if (!is_unit(u) || !is_unit(v)) throw InvalidArgument("angle_between requires unit vectors");
  return std::acos(std::clamp(dot(u, v), -1.0, 1.0));
}

LinkGeometry link_geometry(const Pose& tx, const Pose& rx) {
  const Vec3 delta = rx.position() - tx.position();
  const double d = norm(delta);
  if (d == 0.0) throw DegenerateGeometry("emitter and detector positions coincide");
  const Vec3 dir = delta / d;
  return {angle_between(tx.normal(), dir), angle_between(rx.normal(), -dir), d};
}

}  // namespace vlcsim
