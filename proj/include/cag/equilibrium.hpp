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

// Pure (and fallback mixed) Nash equilibria of the 2x2 normal form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cag/payoff_engine.hpp"

namespace cag {

// Subset of {S, A}.
struct StrategySet {
  bool share = false;
  bool attack = false;

  bool contains(Strategy s) const {
    return s == Strategy::kShare ? share : attack;
  }
  friend bool operator==(const StrategySet&, const StrategySet&) = default;
};

// Mixed profile: probability each player assigns to S.
struct MixedProfile {
  double sigma1;
  double sigma2;
};

// Set of pure profiles as a 4-bit mask over the canonical order
// SS=1, SA=2, AS=4, AA=8.
class RegionTag {
 public:
  constexpr RegionTag() = default;
  constexpr explicit RegionTag(std::uint8_t mask) : mask_(mask & 0x0F) {}

  static RegionTag of(Profile profile) {
    return RegionTag(static_cast<std::uint8_t>(1U << profile_index(profile)));
  }

  std::uint8_t mask() const noexcept { return mask_; }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(Profile profile) const {
    return (mask_ >> profile_index(profile)) & 1U;
  }
  std::vector<Profile> profiles() const;

  // "SS", "SA+AA", "NONE"
  std::string str() const;

  // Swaps player roles: SA <-> AS.
  RegionTag swapped() const;

  friend bool operator==(const RegionTag&, const RegionTag&) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct EquilibriumOutcome {
  std::vector<Profile> pure;  // canonical order
  std::optional<MixedProfile> mixed;
  RegionTag tag;

  // Label used in CSV output: the tag, plus "+MIXED(s1,s2)" when a mixed
  // profile is attached.
  std::string label() const;
};

// player is 1 or 2. Exact comparison: both strategies on an exact tie.
StrategySet best_response(const PayoffMatrix& matrix, int player,
                          Strategy opponent);

EquilibriumOutcome pure_nash(const PayoffMatrix& matrix);

// Interior mixed equilibrium when no pure one exists; nullopt otherwise.
// Throws Error{Degenerate} when an indifference condition has no unique
// solution in [0, 1].
std::optional<MixedProfile> mixed_nash_2x2(const PayoffMatrix& matrix);

// pure_nash, plus the mixed profile when requested and the pure set is
// empty.
EquilibriumOutcome solve(const PayoffMatrix& matrix, bool include_mixed);

}  // namespace cag
