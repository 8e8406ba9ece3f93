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

#include "vlcsim/los_channel.hpp"

#include <cmath>

#include "vlcsim/errors.hpp"
#include "vlcsim/kernels.hpp"

namespace vlcsim {

void validate(const LedSource& led) {
  if (!(led.tx_power > 0.0) || !std::isfinite(led.tx_power))
    throw InvalidArgument("LED transmit power must be positive and finite");
}

void validate(const Photodetector& pd) {
  if (!(pd.area > 0.0) || !std::isfinite(pd.area)) throw InvalidArgument("detector area must be positive and finite");
  if (!(pd.fov.radians > 0.0 && pd.fov.radians <= std::numbers::pi / 2.0))
    throw InvalidArgument("detector field of view must lie in (0, 90] degrees");
}

double los_gain(const LedSource& tx, const Photodetector& rx) {
  const LinkGeometry g = link_geometry(tx.pose, rx.pose);
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (g.phi > rx.fov.radians || g.theta >= kHalfPi || g.phi >= kHalfPi) return 0.0;
  return radiant_intensity(tx.pattern, g.theta) * rx.area * std::cos(g.phi) / (g.d * g.d);
}

ChannelMatrix::ChannelMatrix(std::size_t n_rx, std::size_t n_tx)
    : n_rx_(n_rx), n_tx_(n_tx), gains_(n_rx * n_tx, 0.0) {
  if (n_rx == 0 || n_tx == 0) throw InvalidArgument("channel matrix dimensions must be positive");
}

ChannelMatrix channel_matrix(std::span<const LedSource> leds, std::span<const Photodetector> pds, Exec exec) {
  if (leds.empty()) throw InvalidArgument("channel_matrix needs at least one LED");
  if (pds.empty()) throw InvalidArgument("channel_matrix needs at least one detector");
  ChannelMatrix h(pds.size(), leds.size());
  if (exec == Exec::serial)
    kernels::channel_matrix_serial(leds, pds, h.data());
  else
    kernels::channel_matrix_omp(leds, pds, h.data());
  return h;
}

std::vector<double> received_power(std::span<const LedSource> leds, const ChannelMatrix& h) {
  if (leds.size() != h.n_tx()) throw InvalidArgument("LED count does not match channel matrix columns");
  std::vector<double> p(h.n_rx(), 0.0);
  for (std::size_t i = 0; i < h.n_rx(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < h.n_tx(); ++j) sum += h(i, j) * leds[j].tx_power;
    p[i] = sum;
  }
  return p;
}

}  // namespace vlcsim
