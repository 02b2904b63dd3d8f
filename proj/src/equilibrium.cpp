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

#include "cag/equilibrium.hpp"

#include <cmath>

#include "cag/error.hpp"
#include "cag/format.hpp"

namespace cag {

std::vector<Profile> RegionTag::profiles() const {
  std::vector<Profile> out;
  for (const Profile& profile : kProfiles) {
    if (contains(profile)) out.push_back(profile);
  }
  return out;
}

std::string RegionTag::str() const {
  if (empty()) return "NONE";
  std::string out;
  for (const Profile& profile : profiles()) {
    if (!out.empty()) out += "+";
    out += profile_tag(profile);
  }
  return out;
}

RegionTag RegionTag::swapped() const {
  std::uint8_t mask = 0;
  for (const Profile& profile : profiles()) {
    mask |= RegionTag::of({profile.second, profile.first}).mask();
  }
  return RegionTag(mask);
}

std::string EquilibriumOutcome::label() const {
  std::string out = tag.str();
  if (mixed) {
    out += "+MIXED(" + fixed(mixed->sigma1) + "," + fixed(mixed->sigma2) + ")";
  }
  return out;
}

StrategySet best_response(const PayoffMatrix& matrix, int player,
                          Strategy opponent) {
  double share;
  double attack;
  if (player == 1) {
    share = matrix.at(Strategy::kShare, opponent).u1;
    attack = matrix.at(Strategy::kAttack, opponent).u1;
  } else {
    share = matrix.at(opponent, Strategy::kShare).u2;
    attack = matrix.at(opponent, Strategy::kAttack).u2;
  }
  return {share >= attack, attack >= share};
}

EquilibriumOutcome pure_nash(const PayoffMatrix& matrix) {
  EquilibriumOutcome outcome;
  std::uint8_t mask = 0;
  for (const Profile& profile : kProfiles) {
    if (best_response(matrix, 1, profile.second).contains(profile.first) &&
        best_response(matrix, 2, profile.first).contains(profile.second)) {
      outcome.pure.push_back(profile);
      mask |= RegionTag::of(profile).mask();
    }
  }
  outcome.tag = RegionTag(mask);
  return outcome;
}

std::optional<MixedProfile> mixed_nash_2x2(const PayoffMatrix& matrix) {
  if (!pure_nash(matrix).pure.empty()) return std::nullopt;
  const auto& ss = matrix.at(Strategy::kShare, Strategy::kShare);
  const auto& sa = matrix.at(Strategy::kShare, Strategy::kAttack);
  const auto& as = matrix.at(Strategy::kAttack, Strategy::kShare);
  const auto& aa = matrix.at(Strategy::kAttack, Strategy::kAttack);

  // sigma1 leaves Player 2 indifferent; sigma2 leaves Player 1 indifferent.
  const double denom1 = ss.u2 - as.u2 - sa.u2 + aa.u2;
  const double denom2 = ss.u1 - sa.u1 - as.u1 + aa.u1;
  if (denom1 == 0.0 || denom2 == 0.0) {
    throw Error(ErrorCode::kDegenerate,
                "indifference condition has a zero denominator");
  }
  const MixedProfile mixed{(aa.u2 - as.u2) / denom1, (aa.u1 - sa.u1) / denom2};
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(mixed.sigma1) || !in_unit(mixed.sigma2)) {
    throw Error(ErrorCode::kDegenerate,
                "indifference solution (" + std::to_string(mixed.sigma1) + ", " +
                    std::to_string(mixed.sigma2) + ") outside [0, 1]");
  }
  return mixed;
}

EquilibriumOutcome solve(const PayoffMatrix& matrix, bool include_mixed) {
  EquilibriumOutcome outcome = pure_nash(matrix);
  if (include_mixed && outcome.pure.empty()) {
    outcome.mixed = mixed_nash_2x2(matrix);
  }
  return outcome;
}

}  // namespace cag
