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

#include <iosfwd>
#include <string>

#include "vlcsim/los_channel.hpp"
#include "vlcsim/power_map.hpp"
#include "vlcsim/raytrace.hpp"

namespace vlcsim::csv {

/// 9 significant digits; scientific notation when 0 < |v| < 1e-3.
std::string format_number(double v);

/// 9 significant digits, always scientific ("6.28760269e-06").
std::string format_scientific(double v);

/// `x_m,y_m,p_w,p_dbm`, one row per grid point, x fastest. p_dbm is empty
/// for zero power.
void write_power_map(std::ostream& out, const PowerMap& map);

/// `x_m,y_m,dominant_tx,interference_ratio`; ratio empty where undefined.
void write_interference_map(std::ostream& out, const InterferenceMap& map);

/// `rx_index,tx_0,tx_1,...`, one row per detector.
void write_channel_matrix(std::ostream& out, const ChannelMatrix& h);

/// `t_ns,h`: LOS impulse first, then one row per non-empty bin at its center.
void write_impulse_response(std::ostream& out, const ImpulseResponse& ir);

/// Reads a map written by write_power_map. The working-plane height is not
/// stored in the file and comes back as 0. Throws ParseError on malformed
/// input.
PowerMap read_power_map(std::istream& in);

}  // namespace vlcsim::csv
