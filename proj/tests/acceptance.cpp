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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cag/diagram_render.hpp"
#include "cag/equilibrium.hpp"
#include "cag/payoff_engine.hpp"
#include "cag/phase_sweep.hpp"
#include "cag/scenario.hpp"
#include "cag/voting_power.hpp"
#include "oracles.hpp"

using namespace cag;

namespace {

constexpr Strategy S = Strategy::kShare;
constexpr Strategy A = Strategy::kAttack;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Tree evaluation with direct deviation checks.
std::uint8_t oracle_mask(const GameParams& params) {
  const GameTree tree = build_game_tree(params);
  std::array<PayoffPair, 4> cells;
  for (std::size_t k = 0; k < 4; ++k) {
    cells[k] = tree_payoffs(tree, kProfiles[k].first, kProfiles[k].second);
  }
  return oracle::equilibrium_mask(PayoffMatrix(cells));
}

Verdict table_reproduction() {
  Verdict v;
  const GameParams params{0.6, 0.3, 0.7, 0.45, 1.0, 1.0, 1.0, 1.0};
  const PayoffMatrix m = closed_form_payoffs(params);
  const GameTree tree = build_game_tree(params);
  const std::array<PayoffPair, 4> printed{
      {{0.42, 0.18}, {0.428, 0.16}, {0.36, -0.072}, {0.008, -0.008}}};
  double worst_print = 0.0;
  double worst_tree = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const PayoffPair& got = m.cells()[k];
    worst_print = std::max({worst_print, std::abs(got.u1 - printed[k].u1),
                            std::abs(got.u2 - printed[k].u2)});
    const PayoffPair t = tree_payoffs(tree, kProfiles[k].first, kProfiles[k].second);
    worst_tree = std::max({worst_tree, std::abs(got.u1 - t.u1),
                           std::abs(got.u2 - t.u2)});
  }
  v.require(worst_print <= 5e-4, "printed cell deviates");
  v.require(worst_tree <= 1e-12, "tree oracle deviates");
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max |printed| err %.2e, max |tree| err %.2e",
                worst_print, worst_tree);
  if (v.pass) v.detail = buf;
  return v;
}

Verdict banzhaf_paper_values() {
  Verdict v;
  const WeightedVotingGame democratic(20, {5, 5, 5, 5});
  const WeightedVotingGame dictatorial(10, {11, 2, 2, 2});
  for (const auto& profile : {banzhaf_brute(democratic), banzhaf_dp(democratic)}) {
    v.require(profile.banzhaf == std::vector<double>{0.25, 0.25, 0.25, 0.25},
              "[20:5,5,5,5] != 0.25 each");
  }
  for (const auto& profile : {banzhaf_brute(dictatorial), banzhaf_dp(dictatorial)}) {
    v.require(profile.banzhaf == std::vector<double>{1.0, 0.0, 0.0, 0.0},
              "[10:11,2,2,2] != (1,0,0,0)");
  }
  if (v.pass) v.detail = "exact on both backends";
  return v;
}

Verdict influence_endpoints() {
  Verdict v;
  v.require(influence_multiplier(1.0) == 1.5, "B(1) != 1.5");
  v.require(influence_multiplier(0.0) == 0.1, "B(0) != 0.1");
  if (v.pass) v.detail = "B(1) = 1.5, B(0) = 0.1 exactly";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(1);
  double worst = 0.0;
  double worst_zero_sum = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    GameParams params = oracle::random_params(rng);
    const PayoffMatrix m = closed_form_payoffs(params);
    const GameTree tree = build_game_tree(params);
    for (const Profile& profile : kProfiles) {
      const PayoffPair t = tree_payoffs(tree, profile.first, profile.second);
      worst = std::max({worst, std::abs(m.at(profile).u1 - t.u1),
                        std::abs(m.at(profile).u2 - t.u2)});
    }
    params.e1 = params.e2 = 1.0;
    const PayoffPair aa = closed_form_payoffs(params).at(A, A);
    worst_zero_sum = std::max(worst_zero_sum, std::abs(aa.u1 + aa.u2));
  }
  const double elapsed = seconds_since(start);
  v.require(worst <= 1e-12, "closed form vs tree exceeds 1e-12");
  v.require(worst_zero_sum <= 1e-12, "u1(A,A) + u2(A,A) exceeds 1e-12");
  v.require(elapsed < 5.0, "slower than 5 s");
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max err %.2e, zero-sum err %.2e, %.3f s", worst,
                worst_zero_sum, elapsed);
  if (v.pass) v.detail = buf;
  return v;
}

Verdict cyber_hawk() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double p = 0.0;
    while (p == 0.0) p = unit(rng);
    const auto outcome = pure_nash(closed_form_payoffs({p, unit(rng), 0.0, 0.0}));
    v.require(!outcome.tag.contains({S, S}), "(S,S) found with zero rewards");
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 1.0, "slower than 1 s");
  if (v.pass) v.detail = std::to_string(elapsed).substr(0, 5) + " s";
  return v;
}

Verdict phase_points() {
  Verdict v;
  const auto start = Clock::now();
  struct Point {
    const char* preset;
    const char* expected;
  };
  for (const Point& point : {Point{"fig2-left", "AA"}, Point{"fig2-mid", "SS"},
                             Point{"fig2-right", "AS"}}) {
    const SweepContext c = resolve_context(find_preset(point.preset).scenario);
    const PhaseGrid grid = sweep(c);
    const std::size_t center = (c.resolution - 1) / 2;
    const RegionTag got = grid.cell(center, center).tag;
    v.require(got.str() == point.expected,
              std::string(point.preset) + " center is " + got.str());
    v.require(got.mask() == oracle_mask(c.at(grid.p_at(center), grid.q_at(center))),
              std::string(point.preset) + " disagrees with brute-force check");
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 1.0, "slower than 1 s");
  if (v.pass) v.detail = "AA / SS / AS at (0.5, 0.5), " +
                         std::to_string(elapsed).substr(0, 5) + " s";
  return v;
}

Verdict banzhaf_cross_check() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedVotingGame game = oracle::random_game(rng, 16, 50);
    v.require(banzhaf_dp(game).swings == banzhaf_brute(game).swings,
              "swing vectors differ on " + game.shorthand());
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 5.0, "slower than 5 s");
  if (v.pass) v.detail = "200 games, " + std::to_string(elapsed).substr(0, 5) + " s";
  return v;
}

Verdict monotonicity() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const GameParams base = oracle::random_params(rng);
    GameParams richer = base;
    richer.r1 = base.r1 + (1.0 - base.r1) * unit(rng);
    richer.r2 = base.r2 + (1.0 - base.r2) * unit(rng);
    GameParams bolder = base;
    bolder.e1 = base.e1 + unit(rng);
    bolder.e2 = base.e2 + unit(rng);
    const PayoffMatrix m = closed_form_payoffs(base);
    const PayoffMatrix r = closed_form_payoffs(richer);
    const PayoffMatrix e = closed_form_payoffs(bolder);
    for (int player : {1, 2}) {
      for (Strategy opponent : {S, A}) {
        const StrategySet before = best_response(m, player, opponent);
        if (before.share) {
          v.require(best_response(r, player, opponent).share,
                    "raising r removed S");
        }
        if (before.attack) {
          v.require(best_response(e, player, opponent).attack,
                    "raising e removed A");
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 1.0, "slower than 1 s");
  if (v.pass) v.detail = std::to_string(elapsed).substr(0, 5) + " s";
  return v;
}

Verdict determinism() {
  Verdict v;
  const auto root = std::filesystem::temp_directory_path() / "cag_acceptance";
  std::filesystem::remove_all(root);
  std::size_t compared = 0;
  for (const Preset& preset : preset_catalog()) {
    for (ImageFormat format : {ImageFormat::kSvg, ImageFormat::kPpm}) {
      const RunOutput first = run_preset(preset.name, root / "a", format);
      const RunOutput second = run_preset(preset.name, root / "b", format);
      v.require(first.written.size() == second.written.size(),
                preset.name + " wrote different file sets");
      for (std::size_t k = 0; k < first.written.size(); ++k) {
        v.require(slurp(first.written[k]) == slurp(second.written[k]),
                  first.written[k].filename().string() + " differs");
        ++compared;
      }
    }
  }
  std::filesystem::remove_all(root);
  if (v.pass) v.detail = std::to_string(compared) + " file pairs identical";
  return v;
}

Verdict performance() {
  Verdict v;
  auto start = Clock::now();
  SweepContext context;
  context.r1 = 0.25;
  context.r2 = 0.75;
  const PhaseGrid grid = sweep(context);
  const std::string svg = render_svg(grid, Palette{});
  const std::string ppm = render_ppm(grid, Palette{}, 2);
  const double sweep_seconds = seconds_since(start);
  v.require(!svg.empty() && !ppm.empty(), "empty render");
  v.require(sweep_seconds < 1.0, "201x201 sweep + render slower than 1 s");

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> weight(1, 1000);
  std::vector<std::int64_t> weights(100);
  for (auto& w : weights) w = weight(rng);
  const std::int64_t total =
      std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  const WeightedVotingGame game(total / 2 + 1, weights);
  start = Clock::now();
  const PowerProfile profile = banzhaf_dp(game);
  const double dp_seconds = seconds_since(start);
  v.require(total <= 100000, "test game exceeds weight 1e5");
  v.require(profile.banzhaf.size() == 100, "wrong profile size");
  v.require(dp_seconds < 1.0, "banzhaf_dp on 100 players slower than 1 s");
  char buf[128];
  std::snprintf(buf, sizeof(buf), "sweep+render %.3f s, banzhaf_dp(N=100, W=%lld) %.3f s",
                sweep_seconds, static_cast<long long>(total), dp_seconds);
  if (v.pass) v.detail = buf;
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Verdict()> check;
  };
  const Criterion criteria[] = {
      {"AC1", "payoff table reproduction", table_reproduction},
      {"AC2", "Banzhaf archetype values", banzhaf_paper_values},
      {"AC3", "influence multiplier endpoints", influence_endpoints},
      {"AC4", "closed form vs tree oracle", oracle_equivalence},
      {"AC5", "zero-reward game has no (S,S)", cyber_hawk},
      {"AC6", "phase diagram point checks", phase_points},
      {"AC7", "counting vs enumeration Banzhaf", banzhaf_cross_check},
      {"AC8", "best-response monotonicity", monotonicity},
      {"AC9", "preset determinism", determinism},
      {"AC10", "performance", performance},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %-5s %-36s %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
