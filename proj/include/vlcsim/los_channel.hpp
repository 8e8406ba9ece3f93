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

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "vlcsim/exec.hpp"
#include "vlcsim/geometry.hpp"
#include "vlcsim/lambertian.hpp"

namespace vlcsim {

inline constexpr double kDefaultTxPowerW = 1.0;
inline constexpr double kDefaultDetectorAreaM2 = 1e-4;
inline constexpr double kDefaultFovDeg = 90.0;

struct LedSource {
  Pose pose;
  LambertianPattern pattern;
  double tx_power = kDefaultTxPowerW;  // [W], > 0

  bool operator==(const LedSource&) const = default;
};

struct Photodetector {
  Pose pose;
  double area = kDefaultDetectorAreaM2;        // [m^2], > 0
  Angle fov = Angle::from_degrees(kDefaultFovDeg);  // half-angle, (0, pi/2]

  bool operator==(const Photodetector&) const = default;
};

/// Throws InvalidArgument when an LED or detector violates its invariants.
void validate(const LedSource& led);
void validate(const Photodetector& pd);

/// DC gain of one line-of-sight link:
///   h = (m+1) A cos^m(theta) cos(phi) / (2 pi d^2)
/// when phi <= fov and both angles are below 90 degrees, else 0.
double los_gain(const LedSource& tx, const Photodetector& rx);

/// n_rx x n_tx gains, entry (i, j) = los_gain(led j -> detector i).
class ChannelMatrix {
 public:
  ChannelMatrix(std::size_t n_rx, std::size_t n_tx);

  std::size_t n_rx() const noexcept { return n_rx_; }
  std::size_t n_tx() const noexcept { return n_tx_; }

  double operator()(std::size_t rx, std::size_t tx) const { return gains_[rx * n_tx_ + tx]; }
  double& operator()(std::size_t rx, std::size_t tx) { return gains_[rx * n_tx_ + tx]; }

  std::span<const double> data() const noexcept { return gains_; }
  std::span<double> data() noexcept { return gains_; }

  bool operator==(const ChannelMatrix&) const = default;

 private:
  std::size_t n_rx_;
  std::size_t n_tx_;
  std::vector<double> gains_;
};

ChannelMatrix channel_matrix(std::span<const LedSource> leds, std::span<const Photodetector> pds,
                             Exec exec = Exec::parallel);

/// Received optical power per detector, P[i] = sum_j H(i, j) * P_tx[j].
std::vector<double> received_power(std::span<const LedSource> leds, const ChannelMatrix& h);

}  // namespace vlcsim
