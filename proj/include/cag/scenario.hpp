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

#pragma once

// Scenario files, paper-figure presets and the run pipeline behind the CLI.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cag/diagram_render.hpp"
#include "cag/payoff_engine.hpp"
#include "cag/phase_sweep.hpp"
#include "cag/voting_power.hpp"

namespace cag {

// One player's alliance setup. b comes either from an explicit value or from
// the member's power in its alliance; neither means b = 1.
struct PlayerSpec {
  double r = 0.0;
  std::optional<double> b;
  std::optional<WeightedVotingGame> alliance;
  std::optional<std::size_t> member;
  Posture posture = Posture::kNone;
  std::optional<double> e;

  double influence() const;
  double attack_multiplier() const;

  friend bool operator==(const PlayerSpec&, const PlayerSpec&) = default;
};

enum class ImageFormat { kSvg, kPpm, kCsv };

std::string_view to_string(ImageFormat format);

struct SweepRequest {
  std::size_t resolution = kDefaultResolution;
  ImageFormat format = ImageFormat::kSvg;
  bool include_mixed = false;
  int cell_pixels = 2;
  std::map<std::string, std::string> palette;  // tag -> "#rrggbb"

  friend bool operator==(const SweepRequest&, const SweepRequest&) = default;
};

struct Scenario {
  PlayerSpec player1;
  PlayerSpec player2;
  std::optional<double> p;  // point mode: both set
  std::optional<double> q;
  std::optional<SweepRequest> sweep;  // sweep mode
  std::optional<std::string> out;

  bool is_sweep() const noexcept { return sweep.has_value(); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Parses the JSON scenario format. Unknown keys are rejected.
// Throws Error{SyntaxError} with the byte offset, Error{ValidationError}
// naming the offending field.
Scenario parse_scenario(std::string_view text);
Scenario scenario_from_json(const nlohmann::json& doc);

nlohmann::ordered_json scenario_to_json(const Scenario& scenario);
std::string serialize_scenario(const Scenario& scenario);

GameParams resolve_params(const Scenario& scenario);   // point mode
SweepContext resolve_context(const Scenario& scenario);  // sweep mode
Palette resolve_palette(const SweepRequest& request);

struct Preset {
  std::string name;
  std::string description;
  Scenario scenario;
};

const std::vector<Preset>& preset_catalog();

// Throws Error{UnknownPreset}.
const Preset& find_preset(std::string_view name);

struct RunOutput {
  std::string report;
  std::vector<std::filesystem::path> written;
};

// Point mode: payoff matrix, equilibria and report; CSV to `out` when set.
// Sweep mode: grid CSV at <out>.csv plus <out>.svg or <out>.ppm.
// Throws Error{IoError} and any validation error.
RunOutput run(const Scenario& scenario);

// Runs the preset sweep into directory `out_dir` as <name>.csv and
// <name>.<format>, plus a <name>.txt summary.
RunOutput run_preset(std::string_view name,
                     const std::filesystem::path& out_dir,
                     ImageFormat format = ImageFormat::kSvg);

// Plain-text single-point report.
std::string point_report(const GameParams& params, const PayoffMatrix& matrix,
                         const EquilibriumOutcome& outcome);
std::string point_csv(const PayoffMatrix& matrix,
                      const EquilibriumOutcome& outcome);

// Region counts and resolved context for a finished sweep.
std::string sweep_summary(const PhaseGrid& grid);

}  // namespace cag
