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

// Weighted voting games "[quota: w1,...,wN]" and their power indices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cag {

// Exact swing counts. A game with N players has at most 2^(N-1) swings per
// player, so 128 bits cover every game the counting backend accepts.
using SwingCount = unsigned __int128;

std::string to_string(SwingCount value);

inline constexpr std::size_t kMaxBruteForcePlayers = 24;
inline constexpr std::size_t kMaxShapleyShubikPlayers = 12;
inline constexpr std::size_t kMaxCountingPlayers = 127;
inline constexpr std::int64_t kCountingWeightBudget = 1'000'000;

// Throws Error{EmptyGame, NonpositiveWeight, QuotaTooLow, QuotaTooHigh} when
// the rule is not a proper weighted voting game.
void validate_voting_game(std::int64_t quota,
                          std::span<const std::int64_t> weights);

// Immutable, always-valid weighted voting game.
class WeightedVotingGame {
 public:
  WeightedVotingGame(std::int64_t quota, std::vector<std::int64_t> weights);

  std::int64_t quota() const noexcept { return quota_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::int64_t weight(std::size_t player) const { return weights_.at(player); }
  std::int64_t total_weight() const noexcept { return total_; }
  std::size_t size() const noexcept { return weights_.size(); }

  // "[10:11,2,2,2]"
  std::string shorthand() const;

  friend bool operator==(const WeightedVotingGame&,
                         const WeightedVotingGame&) = default;

 private:
  std::int64_t quota_;
  std::vector<std::int64_t> weights_;
  std::int64_t total_;
};

// Parses the shorthand "[q: w1,w2,...,wN]"; whitespace around tokens is
// ignored. Throws Error{SyntaxError} on malformed text and the validation
// errors above on an improper game.
WeightedVotingGame parse_voting_game(std::string_view text);

bool is_winning(const WeightedVotingGame& game,
                std::span<const std::size_t> coalition);

enum class PlayerClass { kDictator, kVeto, kDummy, kOrdinary };

std::string_view to_string(PlayerClass c);

struct PowerProfile {
  std::vector<SwingCount> swings;
  std::vector<double> banzhaf;
  std::optional<std::vector<double>> shapley_shubik;
  std::vector<PlayerClass> classification;
  std::vector<double> influence;
};

// Enumerates all 2^N coalitions. Fills swings and banzhaf only.
PowerProfile banzhaf_brute(const WeightedVotingGame& game);

// Subset-sum counting over coalition weights; identical results to
// banzhaf_brute. Fills swings and banzhaf only.
PowerProfile banzhaf_dp(const WeightedVotingGame& game);

// Fraction of the N! orderings in which each player is pivotal.
std::vector<double> shapley_shubik(const WeightedVotingGame& game);

std::vector<PlayerClass> classify_players(const WeightedVotingGame& game,
                                          const PowerProfile& profile);

// B = 1.4 * P + 0.1 for a normalized index P in [0, 1].
double influence_multiplier(double banzhaf_index);

// Full profile: counting backend for swings, Shapley-Shubik when the game is
// small enough, classification and influence multipliers.
PowerProfile analyze_power(const WeightedVotingGame& game);

// Aligned plain-text table of a profile from analyze_power.
std::string power_report(const WeightedVotingGame& game,
                         const PowerProfile& profile);

// Columns: player,weight,swings,banzhaf,shapley_shubik,classification,
// influence. shapley_shubik is left blank when not computed.
std::string power_csv(const WeightedVotingGame& game,
                      const PowerProfile& profile);

}  // namespace cag
