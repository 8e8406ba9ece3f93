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

#include "vlcsim/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "vlcsim/csv.hpp"
#include "vlcsim/errors.hpp"
#include "vlcsim/los_channel.hpp"
#include "vlcsim/power_map.hpp"
#include "vlcsim/raytrace.hpp"
#include "vlcsim/scenario_io.hpp"

namespace vlcsim {

namespace {

struct SourceOptions {
  std::string preset;
  std::string scenario_file;

  void add_to(CLI::App& cmd) {
    auto* p = cmd.add_option("--preset", preset, "Built-in scenario (see `scenarios list`)");
    auto* s = cmd.add_option("--scenario", scenario_file, "Scenario JSON file");
    p->excludes(s);
  }

  Scenario load() const {
    if (!preset.empty()) return preset_scenario(find_preset(preset));
    if (!scenario_file.empty()) return load_scenario_file(scenario_file);
    throw InvalidArgument("one of --preset or --scenario is required");
  }
};

// Writes through `write` to `path`, or to `fallback` when no path is given.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

GridSpec parse_grid(const std::string& text) {
  static const std::regex kGrid(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, kGrid)) throw InvalidArgument("--grid expects NXxNY, e.g. 81x81");
  GridSpec g{std::stoul(m[1].str()), std::stoul(m[2].str())};
  g.validate();
  return g;
}

std::string metric_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return csv::format_number(v);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"vlcsim - indoor visible-light channel simulator"};
  app.name("vlcsim");
  app.require_subcommand(1);

  auto* scenarios = app.add_subcommand("scenarios", "Built-in scenarios");
  scenarios->require_subcommand(1);
  auto* list = scenarios->add_subcommand("list", "Print the four built-in presets");
  std::string show_name;
  auto* show = scenarios->add_subcommand("show", "Print a preset as scenario JSON");
  show->add_option("name", show_name, "Preset name")->required();

  SourceOptions map_src;
  std::string grid_text = "81x81", map_out, interference_out;
  auto* power_map = app.add_subcommand("power-map", "Received power over the working plane");
  map_src.add_to(*power_map);
  power_map->add_option("--grid", grid_text, "Grid resolution NXxNY")->capture_default_str();
  power_map->add_option("--out", map_out, "Output CSV (default: stdout)");
  power_map->add_option("--interference", interference_out, "Also write the co-channel interference CSV here");

  SourceOptions h_src;
  std::string h_out;
  auto* channel = app.add_subcommand("channel-matrix", "LOS MIMO channel matrix");
  h_src.add_to(*channel);
  channel->add_option("--out", h_out, "Output CSV (default: stdout)");

  SourceOptions ir_src;
  std::size_t tx_index = 0, rx_index = 0;
  double patch = kDefaultPatchSize, bin_ns = kDefaultBinWidth * 1e9;
  std::string ir_out;
  auto* impulse = app.add_subcommand("impulse-response", "LOS plus first-order reflection impulse response");
  ir_src.add_to(*impulse);
  impulse->add_option("--tx", tx_index, "LED index")->required();
  impulse->add_option("--rx", rx_index, "Detector index")->required();
  impulse->add_option("--patch", patch, "Surface patch size [m]")->capture_default_str();
  impulse->add_option("--bin", bin_ns, "Time bin width [ns]")->capture_default_str();
  impulse->add_option("--out", ir_out, "Output CSV (default: stdout)");

  std::string metrics_map;
  double threshold_db = 3.0;
  auto* metrics = app.add_subcommand("metrics", "Coverage metrics of a power-map CSV");
  metrics->add_option("--map", metrics_map, "Power-map CSV written by power-map")->required();
  metrics->add_option("--threshold-db", threshold_db, "Coverage threshold below peak [dB]")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*list) {
      out << "name,led_spacing_m,semi_angle_deg,detector_spacing_m,lambertian_order\n";
      for (const ScenarioPreset& p : table1_presets())
        out << p.name << ',' << csv::format_number(p.led_spacing) << ',' << csv::format_number(p.irradiance_angle)
            << ',' << csv::format_number(p.detector_spacing) << ','
            << csv::format_number(LambertianPattern::from_degrees(p.irradiance_angle).order()) << '\n';
    } else if (*show) {
      out << emit_scenario(preset_scenario(find_preset(show_name)));
    } else if (*power_map) {
      const Scenario s = map_src.load();
      const GridSpec grid = parse_grid(grid_text);
      const PowerMap map = sweep_plane(s, grid);
      emit(map_out, out, [&](std::ostream& o) { csv::write_power_map(o, map); });
      if (!interference_out.empty()) {
        const InterferenceMap im = interference_map(s, grid);
        emit(interference_out, out, [&](std::ostream& o) { csv::write_interference_map(o, im); });
      }
    } else if (*channel) {
      const Scenario s = h_src.load();
      const ChannelMatrix h = channel_matrix(s.leds, s.pds);
      emit(h_out, out, [&](std::ostream& o) { csv::write_channel_matrix(o, h); });
    } else if (*impulse) {
      const Scenario s = ir_src.load();
      const ImpulseResponse ir = impulse_response(s, tx_index, rx_index, patch, bin_ns * 1e-9);
      emit(ir_out, out, [&](std::ostream& o) { csv::write_impulse_response(o, ir); });
    } else if (*metrics) {
      std::ifstream in(metrics_map, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open '" + metrics_map + "'");
      const PowerMap map = csv::read_power_map(in);
      const CoverageMetrics m = coverage_metrics(map, threshold_db);
      out << "grid: " << map.grid.nx << 'x' << map.grid.ny << '\n'
          << "threshold_db: " << metric_value(threshold_db) << '\n'
          << "peak_w: " << metric_value(m.peak_w) << '\n'
          << "peak_dbm: " << metric_value(m.peak_dbm) << '\n'
          << "min_w: " << metric_value(m.min_w) << '\n'
          << "min_dbm: " << metric_value(m.min_dbm) << '\n'
          << "dynamic_range_db: " << metric_value(m.dynamic_range_db) << '\n'
          << "covered_fraction: " << metric_value(m.covered_fraction) << '\n'
          << "all_zero: " << (m.all_zero ? "true" : "false") << '\n';
    }
  } catch (const std::exception& e) {
    err << "vlcsim: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace vlcsim
