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

#include "cag/voting_power.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "cag/error.hpp"
#include "cag/format.hpp"

namespace cag {
namespace {

double ratio(SwingCount numerator, SwingCount denominator) {
  if (denominator == 0) return 0.0;
  return static_cast<double>(static_cast<long double>(numerator) /
                             static_cast<long double>(denominator));
}

void normalize(PowerProfile& profile) {
  SwingCount total = 0;
  for (SwingCount s : profile.swings) total += s;
  profile.banzhaf.resize(profile.swings.size());
  for (std::size_t i = 0; i < profile.swings.size(); ++i) {
    profile.banzhaf[i] = ratio(profile.swings[i], total);
  }
}

class ShorthandParser {
 public:
  explicit ShorthandParser(std::string_view text) : text_(text) {}

  WeightedVotingGame parse() {
    expect('[');
    std::int64_t quota = integer();
    expect(':');
    std::vector<std::int64_t> weights;
    skip_space();
    if (peek() != ']') {
      weights.push_back(integer());
      while (skip_space(), peek() == ',') {
        ++pos_;
        weights.push_back(integer());
      }
    }
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return WeightedVotingGame(quota, std::move(weights));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError,
                what + " at offset " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(SwingCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

void validate_voting_game(std::int64_t quota,
                          std::span<const std::int64_t> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kEmptyGame, "a voting game needs at least one player");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw Error(ErrorCode::kNonpositiveWeight,
                  "weight of player " + std::to_string(i) + " is " +
                      std::to_string(weights[i]));
    }
    total += weights[i];
  }
  // quota > total / 2, kept in integers
  if (2 * quota <= total) {
    throw Error(ErrorCode::kQuotaTooLow,
                "quota " + std::to_string(quota) +
                    " must exceed half of total weight " + std::to_string(total));
  }
  if (quota > total) {
    throw Error(ErrorCode::kQuotaTooHigh,
                "quota " + std::to_string(quota) + " exceeds total weight " +
                    std::to_string(total));
  }
}

WeightedVotingGame::WeightedVotingGame(std::int64_t quota,
                                       std::vector<std::int64_t> weights)
    : quota_(quota), weights_(std::move(weights)), total_(0) {
  validate_voting_game(quota_, weights_);
  total_ = std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

std::string WeightedVotingGame::shorthand() const {
  std::string out = "[" + std::to_string(quota_) + ":";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(weights_[i]);
  }
  return out + "]";
}

WeightedVotingGame parse_voting_game(std::string_view text) {
  return ShorthandParser(text).parse();
}

bool is_winning(const WeightedVotingGame& game,
                std::span<const std::size_t> coalition) {
  std::vector<bool> member(game.size(), false);
  std::int64_t weight = 0;
  for (std::size_t player : coalition) {
    if (player >= game.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "player " + std::to_string(player) + " not in a game of " +
                      std::to_string(game.size()));
    }
    if (!member[player]) {
      member[player] = true;
      weight += game.weight(player);
    }
  }
  return weight >= game.quota();
}

std::string_view to_string(PlayerClass c) {
  switch (c) {
    case PlayerClass::kDictator: return "Dictator";
    case PlayerClass::kVeto: return "Veto";
    case PlayerClass::kDummy: return "Dummy";
    case PlayerClass::kOrdinary: return "Ordinary";
  }
  return "Unknown";
}

PowerProfile banzhaf_brute(const WeightedVotingGame& game) {
  const std::size_t n = game.size();
  if (n > kMaxBruteForcePlayers) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(n) + " players exceeds the enumeration limit of " +
                    std::to_string(kMaxBruteForcePlayers));
  }
  // Coalition weight = low-half table + high-half table.
  const std::size_t low_bits = n / 2;
  const std::size_t high_bits = n - low_bits;
  auto half_sums = [&](std::size_t offset, std::size_t bits) {
    std::vector<std::int64_t> sums(std::size_t{1} << bits, 0);
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      sums[mask] = sums[mask & (mask - 1)] + game.weight(offset + low);
    }
    return sums;
  };
  const auto low_sums = half_sums(0, low_bits);
  const auto high_sums = half_sums(low_bits, high_bits);
  const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;

  std::vector<std::uint64_t> swings(n, 0);
  const std::int64_t quota = game.quota();
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const std::int64_t weight =
        low_sums[mask & low_mask] + high_sums[mask >> low_bits];
    if (weight < quota) continue;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto player = static_cast<std::size_t>(std::countr_zero(rest));
      if (weight - game.weight(player) < quota) ++swings[player];
    }
  }

  PowerProfile profile;
  profile.swings.assign(swings.begin(), swings.end());
  normalize(profile);
  return profile;
}

PowerProfile banzhaf_dp(const WeightedVotingGame& game) {
  const std::size_t n = game.size();
  if (n > kMaxCountingPlayers) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(n) + " players exceeds the counting limit of " +
                    std::to_string(kMaxCountingPlayers));
  }
  if (game.total_weight() > kCountingWeightBudget) {
    throw Error(ErrorCode::kWeightBudgetExceeded,
                "total weight " + std::to_string(game.total_weight()) +
                    " exceeds budget " + std::to_string(kCountingWeightBudget));
  }
  const auto quota = static_cast<std::size_t>(game.quota());

  // ways[w] = number of coalitions of all players with weight w, for w < quota.
  std::vector<SwingCount> ways(quota, 0);
  ways[0] = 1;
  for (std::int64_t w : game.weights()) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t total = quota; total-- > step;) {
      ways[total] += ways[total - step];
    }
  }

  // Removing player i from the table inverts its update; exact in wrapping
  // 128-bit arithmetic since every true count fits.
  PowerProfile profile;
  profile.swings.resize(n, 0);
  std::vector<SwingCount> without(quota, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto step = static_cast<std::size_t>(game.weight(i));
    for (std::size_t total = 0; total < quota; ++total) {
      without[total] = ways[total];
      if (total >= step) without[total] -= without[total - step];
    }
    const std::size_t first = quota > step ? quota - step : 0;
    SwingCount swings = 0;
    for (std::size_t total = first; total < quota; ++total) {
      swings += without[total];
    }
    profile.swings[i] = swings;
  }
  normalize(profile);
  return profile;
}

std::vector<double> shapley_shubik(const WeightedVotingGame& game) {
  const std::size_t n = game.size();
  if (n > kMaxShapleyShubikPlayers) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(n) + " players exceeds the ordering limit of " +
                    std::to_string(kMaxShapleyShubikPlayers));
  }
  std::vector<std::uint64_t> factorial(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;

  // Player i is pivotal in |S|!(n-1-|S|)! orderings for each set S of
  // predecessors that is losing alone and winning with i.
  std::vector<std::uint64_t> pivotal(n, 0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::int64_t weight = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      weight += game.weight(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    if (weight >= game.quota()) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) continue;
      if (weight + game.weight(i) >= game.quota()) {
        pivotal[i] += factorial[size] * factorial[n - 1 - size];
      }
    }
  }
  std::vector<double> index(n);
  for (std::size_t i = 0; i < n; ++i) {
    index[i] = static_cast<double>(pivotal[i]) / static_cast<double>(factorial[n]);
  }
  return index;
}

std::vector<PlayerClass> classify_players(const WeightedVotingGame& game,
                                          const PowerProfile& profile) {
  if (profile.swings.size() != game.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "profile has " + std::to_string(profile.swings.size()) +
                    " players, game has " + std::to_string(game.size()));
  }
  std::vector<PlayerClass> out(game.size());
  for (std::size_t i = 0; i < game.size(); ++i) {
    const std::int64_t w = game.weight(i);
    if (w >= game.quota()) {
      out[i] = PlayerClass::kDictator;
    } else if (game.total_weight() - w < game.quota()) {
      // Everyone else together still loses: i is in every winning coalition.
      out[i] = PlayerClass::kVeto;
    } else if (profile.swings[i] == 0) {
      out[i] = PlayerClass::kDummy;
    } else {
      out[i] = PlayerClass::kOrdinary;
    }
  }
  return out;
}

double influence_multiplier(double banzhaf_index) {
  if (!(banzhaf_index >= 0.0 && banzhaf_index <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange,
                "power index " + std::to_string(banzhaf_index) +
                    " outside [0, 1]");
  }
  return 1.4 * banzhaf_index + 0.1;
}

PowerProfile analyze_power(const WeightedVotingGame& game) {
  PowerProfile profile = game.size() <= kMaxBruteForcePlayers &&
                                 game.total_weight() > kCountingWeightBudget
                             ? banzhaf_brute(game)
                             : banzhaf_dp(game);
  if (game.size() <= kMaxShapleyShubikPlayers) {
    profile.shapley_shubik = shapley_shubik(game);
  }
  profile.classification = classify_players(game, profile);
  profile.influence.reserve(game.size());
  for (double p : profile.banzhaf) {
    profile.influence.push_back(influence_multiplier(p));
  }
  return profile;
}

std::string power_report(const WeightedVotingGame& game,
                         const PowerProfile& profile) {
  char line[160];
  std::string out = "game: " + game.shorthand() + "\n";
  std::snprintf(line, sizeof(line), "%-7s %8s %22s %10s %14s %-10s %10s\n",
                "player", "weight", "swings", "banzhaf", "shapley_shubik",
                "class", "influence");
  out += line;
  for (std::size_t i = 0; i < game.size(); ++i) {
    const std::string ss =
        profile.shapley_shubik ? fixed((*profile.shapley_shubik)[i]) : "-";
    std::snprintf(line, sizeof(line),
                  "%-7zu %8lld %22s %10s %14s %-10s %10s\n", i,
                  static_cast<long long>(game.weight(i)),
                  to_string(profile.swings[i]).c_str(),
                  fixed(profile.banzhaf[i]).c_str(), ss.c_str(),
                  std::string(to_string(profile.classification[i])).c_str(),
                  fixed(profile.influence[i]).c_str());
    out += line;
  }
  return out;
}

std::string power_csv(const WeightedVotingGame& game,
                      const PowerProfile& profile) {
  std::string out =
      "player,weight,swings,banzhaf,shapley_shubik,classification,influence\n";
  for (std::size_t i = 0; i < game.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(game.weight(i)) + "," +
           to_string(profile.swings[i]) + "," + fixed(profile.banzhaf[i]) +
           "," +
           (profile.shapley_shubik ? fixed((*profile.shapley_shubik)[i]) : "") +
           "," + std::string(to_string(profile.classification[i])) + "," +
           fixed(profile.influence[i]) + "\n";
  }
  return out;
}

}  // namespace cag
