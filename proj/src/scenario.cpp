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

#include "cag/scenario.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>

#include "cag/equilibrium.hpp"
#include "cag/error.hpp"
#include "cag/format.hpp"

namespace cag {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& field, const std::string& reason) {
  throw Error(ErrorCode::kValidationError, field + ": " + reason);
}

double number(const json& doc, const std::string& field) {
  const json& v = doc.at(field);
  if (!v.is_number()) invalid(field, "expected a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& doc, const std::string& field) {
  if (!doc.contains(field)) return std::nullopt;
  return number(doc, field);
}

void check_range(const std::string& field, double value, double low,
                 double high) {
  if (!(value >= low && value <= high)) {
    invalid(field, fixed(value) + " outside [" + fixed(low, 1) + ", " +
                       fixed(high, 1) + "]");
  }
}

std::size_t count(const json& doc, const std::string& field) {
  const json& v = doc.at(field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    invalid(field, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::string text(const json& doc, const std::string& field) {
  const json& v = doc.at(field);
  if (!v.is_string()) invalid(field, "expected a string");
  return v.get<std::string>();
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& item : doc.items()) {
    if (!allowed.count(item.key())) {
      invalid(where + item.key(), "unknown key");
    }
  }
}

PlayerSpec parse_player(const json& doc, int index) {
  const std::string n = std::to_string(index);
  PlayerSpec spec;
  if (!doc.contains("r" + n)) invalid("r" + n, "required");
  spec.r = number(doc, "r" + n);
  check_range("r" + n, spec.r, 0.0, 1.0);

  spec.b = optional_number(doc, "b" + n);
  if (spec.b) check_range("b" + n, *spec.b, 0.1, 1.5);

  if (doc.contains("alliance" + n)) {
    try {
      spec.alliance = parse_voting_game(text(doc, "alliance" + n));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kValidationError) throw;
      invalid("alliance" + n, e.what());
    }
  }
  if (doc.contains("member" + n)) spec.member = count(doc, "member" + n);
  if (spec.b && (spec.alliance || spec.member)) {
    invalid("b" + n, "give either b" + n + " or alliance" + n + "+member" + n);
  }
  if (spec.alliance && !spec.member) invalid("member" + n, "required with alliance" + n);
  if (spec.member && !spec.alliance) invalid("alliance" + n, "required with member" + n);
  if (spec.alliance && *spec.member >= spec.alliance->size()) {
    invalid("member" + n, std::to_string(*spec.member) + " not in alliance " +
                              spec.alliance->shorthand());
  }

  if (doc.contains("posture" + n)) {
    const auto posture = parse_posture(text(doc, "posture" + n));
    if (!posture) invalid("posture" + n, "expected offensive, defensive or none");
    spec.posture = *posture;
  }
  spec.e = optional_number(doc, "e" + n);
  try {
    policy_multiplier(spec.posture, spec.e);
  } catch (const Error& e) {
    invalid("e" + n, e.what());
  }
  return spec;
}

SweepRequest parse_sweep(const json& doc) {
  if (!doc.is_object()) invalid("sweep", "expected an object");
  reject_unknown(doc, {"resolution", "format", "mixed", "cell_pixels", "palette"},
                 "sweep.");
  SweepRequest request;
  if (doc.contains("resolution")) {
    request.resolution = count(doc, "resolution");
    if (request.resolution < 2) invalid("sweep.resolution", "must be at least 2");
  }
  if (doc.contains("format")) {
    const std::string format = text(doc, "format");
    if (format == "svg") {
      request.format = ImageFormat::kSvg;
    } else if (format == "ppm") {
      request.format = ImageFormat::kPpm;
    } else if (format == "csv") {
      request.format = ImageFormat::kCsv;
    } else {
      invalid("sweep.format", "expected svg, ppm or csv");
    }
  }
  if (doc.contains("mixed")) {
    if (!doc["mixed"].is_boolean()) invalid("sweep.mixed", "expected a boolean");
    request.include_mixed = doc["mixed"].get<bool>();
  }
  if (doc.contains("cell_pixels")) {
    const std::size_t px = count(doc, "cell_pixels");
    if (px < 1 || px > 64) invalid("sweep.cell_pixels", "must be in [1, 64]");
    request.cell_pixels = static_cast<int>(px);
  }
  if (doc.contains("palette")) {
    const json& palette = doc["palette"];
    if (!palette.is_object()) invalid("sweep.palette", "expected an object");
    Palette check;
    for (const auto& item : palette.items()) {
      const std::string field = "sweep.palette." + item.key();
      if (!item.value().is_string()) invalid(field, "expected \"#rrggbb\"");
      try {
        check.set(item.key(), parse_rgb(item.value().get<std::string>()));
      } catch (const Error& e) {
        invalid(field, e.what());
      }
      request.palette[item.key()] = item.value().get<std::string>();
    }
    try {
      check.validate();
    } catch (const Error& e) {
      invalid("sweep.palette", e.what());
    }
  }
  return request;
}

void write_file(const std::filesystem::path& path, const std::string& bytes,
                RunOutput& output) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  output.written.push_back(path);
}


Scenario preset_scenario(double r1, double r2,
                         std::optional<std::pair<const char*, std::size_t>> a1,
                         std::optional<std::pair<const char*, std::size_t>> a2) {
  Scenario s;
  s.player1.r = r1;
  s.player2.r = r2;
  if (a1) {
    s.player1.alliance = parse_voting_game(a1->first);
    s.player1.member = a1->second;
  }
  if (a2) {
    s.player2.alliance = parse_voting_game(a2->first);
    s.player2.member = a2->second;
  }
  s.sweep = SweepRequest{};
  return s;
}

}  // namespace

double PlayerSpec::influence() const {
  if (b) return *b;
  if (alliance && member) return alliance_influence(*alliance, *member);
  return 1.0;
}

double PlayerSpec::attack_multiplier() const {
  return policy_multiplier(posture, e);
}

std::string_view to_string(ImageFormat format) {
  switch (format) {
    case ImageFormat::kSvg: return "svg";
    case ImageFormat::kPpm: return "ppm";
    case ImageFormat::kCsv: return "csv";
  }
  return "svg";
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError,
                "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return scenario_from_json(doc);
}

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) invalid("scenario", "expected a JSON object");
  reject_unknown(doc,
                 {"p", "q", "r1", "r2", "b1", "b2", "e1", "e2", "alliance1",
                  "member1", "alliance2", "member2", "posture1", "posture2",
                  "sweep", "out"},
                 "");
  Scenario s;
  s.player1 = parse_player(doc, 1);
  s.player2 = parse_player(doc, 2);
  s.p = optional_number(doc, "p");
  s.q = optional_number(doc, "q");
  if (s.p) check_range("p", *s.p, 0.0, 1.0);
  if (s.q) check_range("q", *s.q, 0.0, 1.0);
  if (doc.contains("sweep")) {
    if (s.p || s.q) invalid("sweep", "a sweep covers all (p, q); drop p and q");
    s.sweep = parse_sweep(doc["sweep"]);
  } else {
    if (!s.p) invalid("p", "required for a single-point run");
    if (!s.q) invalid("q", "required for a single-point run");
  }
  if (doc.contains("out")) s.out = text(doc, "out");
  return s;
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json doc;
  if (s.p) doc["p"] = *s.p;
  if (s.q) doc["q"] = *s.q;
  auto player = [&doc](const PlayerSpec& spec, const std::string& n) {
    doc["r" + n] = spec.r;
    if (spec.b) doc["b" + n] = *spec.b;
    if (spec.alliance) doc["alliance" + n] = spec.alliance->shorthand();
    if (spec.member) doc["member" + n] = *spec.member;
    if (spec.posture != Posture::kNone) {
      doc["posture" + n] = std::string(to_string(spec.posture));
    }
    if (spec.e) doc["e" + n] = *spec.e;
  };
  player(s.player1, "1");
  player(s.player2, "2");
  if (s.sweep) {
    nlohmann::ordered_json sweep;
    sweep["resolution"] = s.sweep->resolution;
    sweep["format"] = std::string(to_string(s.sweep->format));
    sweep["mixed"] = s.sweep->include_mixed;
    sweep["cell_pixels"] = s.sweep->cell_pixels;
    if (!s.sweep->palette.empty()) {
      for (const auto& [key, color] : s.sweep->palette) {
        sweep["palette"][key] = color;
      }
    }
    doc["sweep"] = sweep;
  }
  if (s.out) doc["out"] = *s.out;
  return doc;
}

std::string serialize_scenario(const Scenario& scenario) {
  return scenario_to_json(scenario).dump(2) + "\n";
}

GameParams resolve_params(const Scenario& s) {
  if (!s.p || !s.q) invalid("p", "single-point run needs p and q");
  GameParams params{*s.p,
                    *s.q,
                    s.player1.r,
                    s.player2.r,
                    s.player1.influence(),
                    s.player2.influence(),
                    s.player1.attack_multiplier(),
                    s.player2.attack_multiplier()};
  params.validate();
  return params;
}

SweepContext resolve_context(const Scenario& s) {
  SweepContext context;
  context.r1 = s.player1.r;
  context.r2 = s.player2.r;
  context.b1 = s.player1.influence();
  context.b2 = s.player2.influence();
  context.e1 = s.player1.attack_multiplier();
  context.e2 = s.player2.attack_multiplier();
  if (s.sweep) {
    context.resolution = s.sweep->resolution;
    context.include_mixed = s.sweep->include_mixed;
  }
  context.validate();
  return context;
}

Palette resolve_palette(const SweepRequest& request) {
  Palette palette;
  for (const auto& [key, color] : request.palette) {
    palette.set(key, parse_rgb(color));
  }
  palette.validate();
  return palette;
}

const std::vector<Preset>& preset_catalog() {
  using Member = std::pair<const char*, std::size_t>;
  static const Member kDictator{"[10:11,2,2,2]", 0};
  static const Member kDummy{"[10:11,2,2,2]", 1};
  static const Member kVeto{"[20:5,5,5,5]", 0};
  static const std::vector<Preset> catalog = {
      {"fig2-left", "base game, R1=0.1, R2=0.1",
       preset_scenario(0.1, 0.1, std::nullopt, std::nullopt)},
      {"fig2-mid", "base game, R1=0.75, R2=0.75",
       preset_scenario(0.75, 0.75, std::nullopt, std::nullopt)},
      {"fig2-right", "base game, R1=0.25, R2=0.75",
       preset_scenario(0.25, 0.75, std::nullopt, std::nullopt)},
      {"fig-power-veto-veto", "Veto vs. Veto, R1=R2=0.9",
       preset_scenario(0.9, 0.9, kVeto, kVeto)},
      {"fig-power-dict-veto", "Dictator vs. Veto, R1=R2=0.5",
       preset_scenario(0.5, 0.5, kDictator, kVeto)},
      {"fig-power-veto-dummy", "Veto vs. Dummy, R1=0.9, R2=0.5",
       preset_scenario(0.9, 0.5, kVeto, kDummy)},
      {"fig-power-dict-dict", "Dictator vs. Dictator, R1=0.9, R2=0.2",
       preset_scenario(0.9, 0.2, kDictator, kDictator)},
      {"fig-power-dict-dummy", "Dictator vs. Dummy, R1=0.55, R2=0.4",
       preset_scenario(0.55, 0.4, kDictator, kDummy)},
  };
  return catalog;
}

const Preset& find_preset(std::string_view name) {
  for (const Preset& preset : preset_catalog()) {
    if (preset.name == name) return preset;
  }
  throw Error(ErrorCode::kUnknownPreset,
              "no preset named \"" + std::string(name) + "\"");
}

std::string point_report(const GameParams& params, const PayoffMatrix& matrix,
                         const EquilibriumOutcome& outcome) {
  std::string out = "params: p=" + fixed(params.p) + " q=" + fixed(params.q) +
                    " r1=" + fixed(params.r1) + " r2=" + fixed(params.r2) +
                    " b1=" + fixed(params.b1) + " b2=" + fixed(params.b2) +
                    " e1=" + fixed(params.e1) + " e2=" + fixed(params.e2) + "\n";
  out += "payoffs (u1, u2), rows Player 1, columns Player 2:\n";
  char line[128];
  std::snprintf(line, sizeof(line), "     %-24s %-24s\n", "S", "A");
  out += line;
  for (Strategy s1 : {Strategy::kShare, Strategy::kAttack}) {
    std::string cells[2];
    for (Strategy s2 : {Strategy::kShare, Strategy::kAttack}) {
      const PayoffPair& cell = matrix.at(s1, s2);
      cells[s2 == Strategy::kAttack] =
          "(" + fixed(cell.u1) + ", " + fixed(cell.u2) + ")";
    }
    std::snprintf(line, sizeof(line), "  %s  %-24s %-24s\n",
                  std::string(to_string(s1)).c_str(), cells[0].c_str(),
                  cells[1].c_str());
    out += line;
  }
  out += "pure: " + outcome.tag.str() + "\n";
  if (outcome.mixed) {
    out += "mixed: sigma1(S)=" + fixed(outcome.mixed->sigma1) +
           " sigma2(S)=" + fixed(outcome.mixed->sigma2) + "\n";
  } else {
    out += "mixed: none\n";
  }
  return out;
}

std::string point_csv(const PayoffMatrix& matrix,
                      const EquilibriumOutcome& outcome) {
  std::string out = "profile,u1,u2,nash\n";
  for (const Profile& profile : kProfiles) {
    const PayoffPair& cell = matrix.at(profile);
    out += profile_tag(profile) + "," + fixed(cell.u1) + "," + fixed(cell.u2) +
           "," + (outcome.tag.contains(profile) ? "1" : "0") + "\n";
  }
  return out;
}

std::string sweep_summary(const PhaseGrid& grid) {
  const SweepContext& c = grid.context();
  std::string out = "context: r1=" + fixed(c.r1) + " r2=" + fixed(c.r2) +
                    " b1=" + fixed(c.b1) + " b2=" + fixed(c.b2) +
                    " e1=" + fixed(c.e1) + " e2=" + fixed(c.e2) +
                    " resolution=" + std::to_string(grid.p_count()) + "x" +
                    std::to_string(grid.q_count()) + "\n";
  std::array<std::size_t, 16> counts{};
  for (const GridCell& cell : grid.cells()) ++counts[cell.tag.mask()];
  out += "regions:\n";
  const double total = static_cast<double>(grid.cells().size());
  char line[96];
  for (std::uint8_t mask = 1; mask <= 16; ++mask) {
    const std::uint8_t m = mask == 16 ? 0 : mask;
    if (counts[m] == 0) continue;
    std::snprintf(line, sizeof(line), "  %-16s %8zu cells %7s%%\n",
                  RegionTag(m).str().c_str(), counts[m],
                  fixed(100.0 * static_cast<double>(counts[m]) / total, 2).c_str());
    out += line;
  }
  return out;
}

RunOutput run(const Scenario& scenario) {
  RunOutput output;
  if (!scenario.is_sweep()) {
    const GameParams params = resolve_params(scenario);
    const PayoffMatrix matrix = closed_form_payoffs(params);
    EquilibriumOutcome outcome = pure_nash(matrix);
    if (outcome.pure.empty()) {
      try {
        outcome.mixed = mixed_nash_2x2(matrix);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerate) throw;
      }
    }
    output.report = point_report(params, matrix, outcome);
    if (scenario.out) {
      write_file(*scenario.out, point_csv(matrix, outcome), output);
    }
    return output;
  }

  const SweepRequest& request = *scenario.sweep;
  const PhaseGrid grid = sweep(resolve_context(scenario));
  const Palette palette = resolve_palette(request);
  const std::string stem = scenario.out.value_or("sweep");
  write_file(stem + ".csv", to_csv(grid), output);
  if (request.format == ImageFormat::kSvg) {
    write_file(stem + ".svg", render_svg(grid, palette), output);
  } else if (request.format == ImageFormat::kPpm) {
    write_file(stem + ".ppm", render_ppm(grid, palette, request.cell_pixels),
               output);
  }
  output.report = sweep_summary(grid);
  return output;
}

RunOutput run_preset(std::string_view name,
                     const std::filesystem::path& out_dir, ImageFormat format) {
  const Preset& preset = find_preset(name);
  Scenario scenario = preset.scenario;
  scenario.sweep->format = format;
  scenario.out = (out_dir / preset.name).string();
  RunOutput output = run(scenario);
  output.report = "preset: " + preset.name + " (" + preset.description + ")\n" +
                  output.report;
  write_file(out_dir / (preset.name + ".txt"), output.report, output);
  return output;
}

}  // namespace cag
