// Copyright 2026 The Cyber Alliance Game Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: power indices, single-point solves, phase-diagram
// sweeps and the figure presets.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cag/error.hpp"
#include "cag/scenario.hpp"
#include "cag/voting_power.hpp"

namespace {

using nlohmann::json;

// Flags that mirror scenario keys; anything set overrides the file.
struct ScenarioFlags {
  std::string scenario_file;
  std::optional<double> p, q, r1, r2, b1, b2, e1, e2;
  std::optional<std::string> alliance1, alliance2, posture1, posture2, out;
  std::optional<long long> member1, member2;
  // sweep only
  std::optional<long long> resolution, cell_pixels;
  std::optional<std::string> format;
  bool mixed = false;

  void add_to(CLI::App* app, bool sweep) {
    app->add_option("--scenario", scenario_file, "JSON scenario file")
        ->check(CLI::ExistingFile);
    if (!sweep) {
      app->add_option("--p", p, "Player 1 discovery probability");
      app->add_option("--q", q, "Player 1 first-strike probability");
    }
    app->add_option("--r1", r1, "Player 1 sharing reward");
    app->add_option("--r2", r2, "Player 2 sharing reward");
    app->add_option("--b1", b1, "Player 1 influence multiplier");
    app->add_option("--b2", b2, "Player 2 influence multiplier");
    app->add_option("--e1", e1, "Player 1 attack-payout multiplier");
    app->add_option("--e2", e2, "Player 2 attack-payout multiplier");
    app->add_option("--alliance1", alliance1, "Player 1 alliance, \"[q:w1,...]\"");
    app->add_option("--member1", member1, "Player 1 index in its alliance");
    app->add_option("--alliance2", alliance2, "Player 2 alliance, \"[q:w1,...]\"");
    app->add_option("--member2", member2, "Player 2 index in its alliance");
    app->add_option("--posture1", posture1, "none, offensive or defensive");
    app->add_option("--posture2", posture2, "none, offensive or defensive");
    app->add_option("--out", out,
                    sweep ? "output path stem (<out>.csv, <out>.svg|ppm)"
                          : "CSV output path");
    if (sweep) {
      app->add_option("--resolution", resolution, "lattice points per axis");
      app->add_option("--format", format, "svg, ppm or csv");
      app->add_option("--cell-pixels", cell_pixels, "PPM pixels per cell");
      app->add_flag("--mixed", mixed, "label NONE cells with the mixed profile");
    }
  }

  json document(bool sweep) const {
    json doc = json::object();
    if (!scenario_file.empty()) {
      std::ifstream file(scenario_file, std::ios::binary);
      if (!file) {
        throw cag::Error(cag::ErrorCode::kIoError, "cannot read " + scenario_file);
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      try {
        doc = json::parse(buffer.str());
      } catch (const json::parse_error& e) {
        throw cag::Error(cag::ErrorCode::kSyntaxError,
                         scenario_file + ": byte " + std::to_string(e.byte) +
                             ": " + e.what());
      }
    }
    auto set = [&doc](const char* key, const auto& value) {
      if (value) doc[key] = *value;
    };
    set("p", p);
    set("q", q);
    set("r1", r1);
    set("r2", r2);
    set("b1", b1);
    set("b2", b2);
    set("e1", e1);
    set("e2", e2);
    set("alliance1", alliance1);
    set("member1", member1);
    set("alliance2", alliance2);
    set("member2", member2);
    set("posture1", posture1);
    set("posture2", posture2);
    set("out", out);
    if (sweep) {
      if (!doc.contains("sweep")) doc["sweep"] = json::object();
      json& s = doc["sweep"];
      if (resolution) s["resolution"] = *resolution;
      if (format) s["format"] = *format;
      if (cell_pixels) s["cell_pixels"] = *cell_pixels;
      if (mixed) s["mixed"] = true;
    } else if (doc.contains("sweep")) {
      throw cag::Error(cag::ErrorCode::kValidationError,
                       "sweep: scenario describes a sweep; use the sweep command");
    }
    return doc;
  }
};

void print_written(const cag::RunOutput& output) {
  for (const auto& path : output.written) {
    std::cout << "wrote " << path.string() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyber alliance game simulator"};
  app.require_subcommand(1);

  auto* power = app.add_subcommand("power", "power indices of a weighted voting game");
  std::string alliance;
  std::optional<std::string> power_out;
  power->add_option("alliance", alliance, "\"[q:w1,w2,...]\"")->required();
  power->add_option("--out", power_out, "CSV output path");

  ScenarioFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "payoffs and equilibria at one (p, q)");
  solve_flags.add_to(solve, false);

  ScenarioFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "equilibrium phase diagram over (p, q)");
  sweep_flags.add_to(sweep, true);

  auto* preset = app.add_subcommand("preset", "figure presets");
  preset->require_subcommand(1);
  auto* preset_list = preset->add_subcommand("list", "list presets");
  auto* preset_run = preset->add_subcommand("run", "run a preset");
  std::string preset_name;
  std::string preset_dir = ".";
  std::string preset_format = "svg";
  preset_run->add_option("name", preset_name, "preset name")->required();
  preset_run->add_option("--out-dir", preset_dir, "output directory");
  preset_run->add_option("--format", preset_format, "svg or ppm")
      ->check(CLI::IsMember({"svg", "ppm"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*power) {
      const cag::WeightedVotingGame game = cag::parse_voting_game(alliance);
      const cag::PowerProfile profile = cag::analyze_power(game);
      std::cout << cag::power_report(game, profile);
      if (power_out) {
        std::ofstream file(*power_out, std::ios::binary | std::ios::trunc);
        file << cag::power_csv(game, profile);
        if (!file) {
          throw cag::Error(cag::ErrorCode::kIoError, "cannot write " + *power_out);
        }
        std::cout << "wrote " << *power_out << "\n";
      }
    } else if (*solve || *sweep) {
      const bool is_sweep = static_cast<bool>(*sweep);
      const ScenarioFlags& flags = is_sweep ? sweep_flags : solve_flags;
      const cag::RunOutput output =
          cag::run(cag::scenario_from_json(flags.document(is_sweep)));
      std::cout << output.report;
      print_written(output);
    } else if (*preset_list) {
      for (const cag::Preset& p : cag::preset_catalog()) {
        std::cout << p.name << "  " << p.description << "\n";
      }
    } else if (*preset_run) {
      const auto format = preset_format == "ppm" ? cag::ImageFormat::kPpm
                                                 : cag::ImageFormat::kSvg;
      const cag::RunOutput output =
          cag::run_preset(preset_name, preset_dir, format);
      std::cout << output.report;
      print_written(output);
    }
  } catch (const cag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
