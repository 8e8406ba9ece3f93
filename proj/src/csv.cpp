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

#include "vlcsim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "vlcsim/errors.hpp"

namespace vlcsim::csv {

namespace {

std::string printf_double(const char* fmt, double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, fmt, v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line_no) + ": invalid number '" + s + "'");
}

}  // namespace

std::string format_number(double v) {
  if (v != 0.0 && std::abs(v) < 1e-3) return format_scientific(v);
  return printf_double("%.9g", v);
}

std::string format_scientific(double v) { return printf_double("%.8e", v); }

void write_power_map(std::ostream& out, const PowerMap& map) {
  out << "x_m,y_m,p_w,p_dbm\n";
  for (std::size_t j = 0; j < map.grid.ny; ++j)
    for (std::size_t i = 0; i < map.grid.nx; ++i) {
      const double p = map.at(i, j);
      out << format_number(map.x(i)) << ',' << format_number(map.y(j)) << ',' << format_number(p) << ',';
      if (p > 0.0) out << format_number(to_dbm(p));
      out << '\n';
    }
}

void write_interference_map(std::ostream& out, const InterferenceMap& map) {
  out << "x_m,y_m,dominant_tx,interference_ratio\n";
  for (std::size_t j = 0; j < map.grid.ny; ++j)
    for (std::size_t i = 0; i < map.grid.nx; ++i) {
      const InterferencePoint& p = map.at(i, j);
      out << format_number(map.x(i)) << ',' << format_number(map.y(j)) << ',' << p.dominant << ',';
      if (p.defined) out << format_number(p.ratio);
      out << '\n';
    }
}

void write_channel_matrix(std::ostream& out, const ChannelMatrix& h) {
  out << "rx_index";
  for (std::size_t j = 0; j < h.n_tx(); ++j) out << ",tx_" << j;
  out << '\n';
  for (std::size_t i = 0; i < h.n_rx(); ++i) {
    out << i;
    for (std::size_t j = 0; j < h.n_tx(); ++j) out << ',' << format_scientific(h(i, j));
    out << '\n';
  }
}

void write_impulse_response(std::ostream& out, const ImpulseResponse& ir) {
  out << "t_ns,h\n";
  out << format_number(ir.los_delay * 1e9) << ',' << format_number(ir.los_gain) << '\n';
  for (std::size_t k = 0; k < ir.bins.size(); ++k)
    if (ir.bins[k] > 0.0) out << format_number(ir.bin_center(k) * 1e9) << ',' << format_number(ir.bins[k]) << '\n';
}

PowerMap read_power_map(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x_m,y_m,p_w,p_dbm") throw ParseError("line 1: expected header 'x_m,y_m,p_w,p_dbm'");

  std::vector<double> xs, ys, ps;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line);
    if (f.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
    xs.push_back(parse_double(f[0], line_no));
    ys.push_back(parse_double(f[1], line_no));
    ps.push_back(parse_double(f[2], line_no));
    if (!(ps.back() >= 0.0) || !std::isfinite(ps.back()))
      throw ParseError("line " + std::to_string(line_no) + ": power must be finite and non-negative");
  }
  if (ps.empty()) throw ParseError("power map has no rows");

  std::size_t nx = 1;
  while (nx < ys.size() && ys[nx] == ys[0]) ++nx;
  if (ps.size() % nx != 0) throw ParseError("row count is not a multiple of the grid width");
  const std::size_t ny = ps.size() / nx;
  for (std::size_t p = 0; p < ps.size(); ++p)
    if (xs[p] != xs[p % nx] || ys[p] != ys[(p / nx) * nx])
      throw ParseError("line " + std::to_string(p + 2) + ": rows are not on a regular x-fastest grid");
  if (nx < 2 || ny < 2) throw ParseError("power map grid must be at least 2x2");

  PowerMap map;
  map.grid = {nx, ny};
  map.size_x = xs[nx - 1];
  map.size_y = ys.back();
  map.values = std::move(ps);
  return map;
}

}  // namespace vlcsim::csv
