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

#include <doctest.h>

#include <random>

#include "cag/equilibrium.hpp"
#include "cag/error.hpp"
#include "oracles.hpp"

using namespace cag;

namespace {

constexpr Strategy S = Strategy::kShare;
constexpr Strategy A = Strategy::kAttack;

// Cells in canonical order SS, SA, AS, AA.
PayoffMatrix matrix(PayoffPair ss, PayoffPair sa, PayoffPair as, PayoffPair aa) {
  return PayoffMatrix({ss, sa, as, aa});
}

const PayoffMatrix kTable1 =
    closed_form_payoffs({0.6, 0.3, 0.7, 0.45, 1.0, 1.0, 1.0, 1.0});

void check_indifference(const PayoffMatrix& m, const MixedProfile& mixed) {
  const double s1 = mixed.sigma1;
  const double s2 = mixed.sigma2;
  const double p1_share = s2 * m.at(S, S).u1 + (1 - s2) * m.at(S, A).u1;
  const double p1_attack = s2 * m.at(A, S).u1 + (1 - s2) * m.at(A, A).u1;
  const double p2_share = s1 * m.at(S, S).u2 + (1 - s1) * m.at(A, S).u2;
  const double p2_attack = s1 * m.at(S, A).u2 + (1 - s1) * m.at(A, A).u2;
  CHECK(std::abs(p1_share - p1_attack) <= 1e-12);
  CHECK(std::abs(p2_share - p2_attack) <= 1e-12);
}

}  // namespace

TEST_CASE("best responses on the printed table") {
  CHECK(best_response(kTable1, 1, S) == StrategySet{true, false});
  CHECK(best_response(kTable1, 2, S) == StrategySet{true, false});
  CHECK(best_response(kTable1, 1, A) == StrategySet{true, false});
  CHECK(best_response(kTable1, 2, A) == StrategySet{false, true});

  const PayoffMatrix tie = matrix({0.3, 0}, {0, 0}, {0.3, 0}, {0, 0});
  CHECK(best_response(tie, 1, S) == StrategySet{true, true});
}

TEST_CASE("pure equilibria examples") {
  const auto table = pure_nash(kTable1);
  REQUIRE(table.pure.size() == 1);
  CHECK(table.pure[0] == Profile{S, S});
  CHECK(table.tag.str() == "SS");

  const auto hawk = pure_nash(closed_form_payoffs({0.5, 0.5, 0.0, 0.0}));
  CHECK(hawk.tag.str() == "AA");

  const auto sharing = pure_nash(closed_form_payoffs({0.5, 0.5, 0.75, 0.75}));
  CHECK(sharing.tag.contains({S, S}));
}

TEST_CASE("ties produce multiple equilibria in canonical order") {
  const PayoffMatrix flat = matrix({0, 0}, {0, 0}, {0, 0}, {0, 0});
  const auto outcome = pure_nash(flat);
  CHECK(outcome.pure == std::vector<Profile>(kProfiles.begin(), kProfiles.end()));
  CHECK(outcome.tag.str() == "SS+SA+AS+AA");
  CHECK_FALSE(mixed_nash_2x2(flat));
}

TEST_CASE("region tags") {
  CHECK(RegionTag().str() == "NONE");
  CHECK(RegionTag(0b1001).str() == "SS+AA");
  CHECK(RegionTag::of({S, A}).swapped() == RegionTag::of({A, S}));
  CHECK(RegionTag(0b1001).swapped() == RegionTag(0b1001));
  EquilibriumOutcome outcome;
  outcome.mixed = MixedProfile{0.5, 0.25};
  CHECK(outcome.label() == "NONE+MIXED(0.500000,0.250000)");
}

TEST_CASE("mixed equilibria") {
  const PayoffMatrix pennies = matrix({1, -1}, {-1, 1}, {-1, 1}, {1, -1});
  const auto mixed = mixed_nash_2x2(pennies);
  REQUIRE(mixed);
  CHECK(mixed->sigma1 == 0.5);
  CHECK(mixed->sigma2 == 0.5);

  CHECK_FALSE(mixed_nash_2x2(kTable1));

  const PayoffMatrix skewed = matrix({2, -2}, {-1, 1}, {-2, 2}, {1, -1});
  CHECK(pure_nash(skewed).pure.empty());
  const auto skewed_mixed = mixed_nash_2x2(skewed);
  REQUIRE(skewed_mixed);
  check_indifference(skewed, *skewed_mixed);

  const double nan = std::nan("");
  const PayoffMatrix broken = matrix({nan, nan}, {nan, nan}, {nan, nan}, {nan, nan});
  bool degenerate = false;
  try {
    mixed_nash_2x2(broken);
  } catch (const Error& e) {
    degenerate = e.code() == ErrorCode::kDegenerate;
  }
  CHECK(degenerate);

  const auto solved = solve(pennies, true);
  CHECK(solved.mixed);
  CHECK_FALSE(solve(pennies, false).mixed);
}

TEST_CASE("mixed output satisfies both indifference conditions") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> payoff(-1.0, 1.0);
  int found = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    PayoffMatrix m = matrix({payoff(rng), payoff(rng)}, {payoff(rng), payoff(rng)},
                            {payoff(rng), payoff(rng)}, {payoff(rng), payoff(rng)});
    const auto mixed = mixed_nash_2x2(m);
    if (!mixed) continue;
    ++found;
    CHECK(mixed->sigma1 >= 0.0);
    CHECK(mixed->sigma1 <= 1.0);
    check_indifference(m, *mixed);
  }
  CHECK(found > 100);
}

TEST_CASE("pure equilibria agree with direct deviation checks") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 10000; ++trial) {
    const PayoffMatrix m = closed_form_payoffs(oracle::random_params(rng));
    const auto outcome = pure_nash(m);
    for (const Profile& profile : outcome.pure) {
      CHECK(oracle::is_pure_equilibrium(m, profile));
    }
    CHECK(outcome.tag.mask() == oracle::equilibrium_mask(m));
  }
}

TEST_CASE("raising a reward never removes Share from a best-response set") {
  std::mt19937_64 rng(1234);
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
        if (before.share) CHECK(best_response(r, player, opponent).share);
        if (before.attack) CHECK(best_response(e, player, opponent).attack);
      }
    }
  }
}

TEST_CASE("without rewards nobody settles on mutual sharing") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double p = unit(rng);
    if (p == 0.0) p = 0.5;
    const auto outcome = pure_nash(closed_form_payoffs({p, unit(rng), 0.0, 0.0}));
    CHECK_FALSE(outcome.tag.contains({S, S}));
  }
}
