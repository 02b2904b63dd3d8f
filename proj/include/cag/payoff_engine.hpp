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

// Expected payoffs of the two-player alliance game, by closed form and by
// direct evaluation of the extensive-form game tree.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cag {

enum class Strategy { kShare, kAttack };

std::string_view to_string(Strategy s);  // "S" / "A"

// Strategy profile (strategy of Player 1, strategy of Player 2).
struct Profile {
  Strategy first;
  Strategy second;
  friend bool operator==(const Profile&, const Profile&) = default;
};

// Canonical order (S,S), (S,A), (A,S), (A,A).
inline constexpr std::array<Profile, 4> kProfiles{{
    {Strategy::kShare, Strategy::kShare},
    {Strategy::kShare, Strategy::kAttack},
    {Strategy::kAttack, Strategy::kShare},
    {Strategy::kAttack, Strategy::kAttack},
}};

constexpr std::size_t profile_index(Profile profile) {
  return (profile.first == Strategy::kAttack ? 2 : 0) +
         (profile.second == Strategy::kAttack ? 1 : 0);
}

std::string profile_tag(Profile profile);  // "SS", "SA", "AS", "AA"

// Alliance attack policy. Offensive alliances scale a successful attack's
// payout by e in [1.1, 1.6], defensive ones by e in [0.4, 0.9].
enum class Posture { kNone, kOffensive, kDefensive };

std::string_view to_string(Posture posture);
std::optional<Posture> parse_posture(std::string_view text);

struct PostureBand {
  double low;
  double high;
};

PostureBand posture_band(Posture posture);

// Resolves the attack-payout multiplier: 1 without a posture or explicit
// value, the explicit value when it is positive and inside the posture band.
// A posture without an explicit value is rejected.
// Throws Error{PostureBandViolation}.
double policy_multiplier(Posture posture, std::optional<double> explicit_e);

struct GameParams {
  double p = 0.5;   // Player 1 discovery probability (technical savvy)
  double q = 0.5;   // Player 1 first-strike probability (aggressiveness)
  double r1 = 0.0;  // sharing rewards
  double r2 = 0.0;
  double b1 = 1.0;  // influence multipliers
  double b2 = 1.0;
  double e1 = 1.0;  // attack-payout multipliers
  double e2 = 1.0;

  // Throws Error{InvalidParams}.
  void validate() const;

  // Swaps the players' roles: (1-p, 1-q, r2, r1, b2, b1, e2, e1).
  GameParams swapped() const;
};

struct PayoffPair {
  double u1 = 0.0;
  double u2 = 0.0;
};

class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  explicit PayoffMatrix(std::array<PayoffPair, 4> cells) : cells_(cells) {}

  const PayoffPair& at(Profile profile) const {
    return cells_[profile_index(profile)];
  }
  const PayoffPair& at(Strategy s1, Strategy s2) const { return at({s1, s2}); }
  PayoffPair& at(Strategy s1, Strategy s2) {
    return cells_[profile_index({s1, s2})];
  }
  const std::array<PayoffPair, 4>& cells() const noexcept { return cells_; }

 private:
  std::array<PayoffPair, 4> cells_{};
};

// Probability that Player 1 lands the first successful attack when both
// attack: p^2 + 2p(1-p)q.
double first_strike_probability(double p, double q);

PayoffMatrix closed_form_payoffs(const GameParams& params);

// Game tree with chance, decision and leaf nodes stored in a flat arena.
class GameTree {
 public:
  enum class Kind { kChance, kDecision, kLeaf };

  // A player's decision nodes fall into one of two information sets: holding
  // the vulnerability first, or rediscovering it after a failed attack.
  enum class InfoSet { kFirstDiscoverer, kRediscoverer };

  struct Branch {
    double probability;
    std::size_t child;
  };

  struct Node {
    Kind kind = Kind::kLeaf;
    std::vector<Branch> branches;  // chance
    int owner = 0;                 // decision: 1 or 2
    InfoSet info_set = InfoSet::kFirstDiscoverer;
    std::size_t on_share = 0;      // decision
    std::size_t on_attack = 0;     // decision
    PayoffPair payoff;             // leaf
  };

  GameTree(std::vector<Node> nodes, std::size_t root)
      : nodes_(std::move(nodes)), root_(root) {}

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return root_; }

  // Indented plain-text dump, probabilities and payoffs to 6 decimals.
  std::string dump() const;

 private:
  std::vector<Node> nodes_;
  std::size_t root_;
};

GameTree build_game_tree(const GameParams& params);

// Expected payoffs when each player plays one action at every node of both
// of its information sets. Throws Error{MalformedTree}.
PayoffPair tree_payoffs(const GameTree& tree, Strategy s1, Strategy s2);

}  // namespace cag
