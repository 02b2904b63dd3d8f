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

// Equilibrium phase diagrams over the (p, q) unit square.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cag/equilibrium.hpp"
#include "cag/payoff_engine.hpp"
#include "cag/voting_power.hpp"

namespace cag {

inline constexpr std::size_t kDefaultResolution = 201;

// Everything a diagram holds fixed: rewards, multipliers, lattice density.
struct SweepContext {
  double r1 = 0.0;
  double r2 = 0.0;
  double b1 = 1.0;
  double b2 = 1.0;
  double e1 = 1.0;
  double e2 = 1.0;
  std::size_t resolution = kDefaultResolution;
  bool include_mixed = false;

  // Throws Error{InvalidContext}.
  void validate() const;

  GameParams at(double p, double q) const;
};

struct GridCell {
  RegionTag tag;
  std::optional<MixedProfile> mixed;

  std::string label() const;
};

// Lattice of equilibrium labels. p runs along x (index i), q along y
// (index j); storage is p-major.
class PhaseGrid {
 public:
  PhaseGrid(SweepContext context, std::size_t p_count, std::size_t q_count,
            std::vector<GridCell> cells);

  const SweepContext& context() const noexcept { return context_; }
  std::size_t p_count() const noexcept { return p_count_; }
  std::size_t q_count() const noexcept { return q_count_; }
  const GridCell& cell(std::size_t i, std::size_t j) const {
    return cells_.at(i * q_count_ + j);
  }
  const std::vector<GridCell>& cells() const noexcept { return cells_; }

  double p_at(std::size_t i) const { return coordinate(i, p_count_); }
  double q_at(std::size_t j) const { return coordinate(j, q_count_); }

  // Distinct tags in first-seen order of a q-outer, p-inner scan.
  std::vector<RegionTag> tags() const;

 private:
  static double coordinate(std::size_t index, std::size_t count) {
    return count < 2 ? 0.0
                     : static_cast<double>(index) / static_cast<double>(count - 1);
  }

  SweepContext context_;
  std::size_t p_count_;
  std::size_t q_count_;
  std::vector<GridCell> cells_;
};

// Single lattice point solve.
GridCell classify_point(const SweepContext& context, double p, double q);

PhaseGrid sweep(const SweepContext& context);

// "p,q,label" rows, q outer ascending, p inner ascending.
std::string to_csv(const PhaseGrid& grid);

// B of a member given its alliance.
double alliance_influence(const WeightedVotingGame& alliance,
                          std::size_t member);

// Context for two alliance members. e_i defaults to 1 with no posture; with a
// posture it must be given and lie in the posture band.
// Throws Error{IndexOutOfRange, PostureBandViolation, InvalidContext}.
SweepContext power_context(const WeightedVotingGame& alliance1,
                           std::size_t member1, double r1,
                           const WeightedVotingGame& alliance2,
                           std::size_t member2, double r2,
                           Posture posture1 = Posture::kNone,
                           Posture posture2 = Posture::kNone,
                           std::optional<double> e1 = std::nullopt,
                           std::optional<double> e2 = std::nullopt);

}  // namespace cag
