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

#include "cag/phase_sweep.hpp"

#include <algorithm>

#include "cag/error.hpp"
#include "cag/format.hpp"

namespace cag {

void SweepContext::validate() const {
  if (resolution < 2) {
    throw Error(ErrorCode::kInvalidContext,
                "resolution must be at least 2, got " +
                    std::to_string(resolution));
  }
  try {
    at(0.5, 0.5).validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidContext, e.what());
  }
}

GameParams SweepContext::at(double p, double q) const {
  return {p, q, r1, r2, b1, b2, e1, e2};
}

std::string GridCell::label() const {
  EquilibriumOutcome outcome;
  outcome.tag = tag;
  outcome.mixed = mixed;
  return outcome.label();
}

PhaseGrid::PhaseGrid(SweepContext context, std::size_t p_count,
                     std::size_t q_count, std::vector<GridCell> cells)
    : context_(context),
      p_count_(p_count),
      q_count_(q_count),
      cells_(std::move(cells)) {
  if (cells_.size() != p_count_ * q_count_) {
    throw Error(ErrorCode::kInvalidContext,
                "grid of " + std::to_string(p_count_) + "x" +
                    std::to_string(q_count_) + " given " +
                    std::to_string(cells_.size()) + " cells");
  }
}

std::vector<RegionTag> PhaseGrid::tags() const {
  std::vector<RegionTag> seen;
  for (std::size_t j = 0; j < q_count_; ++j) {
    for (std::size_t i = 0; i < p_count_; ++i) {
      const RegionTag tag = cell(i, j).tag;
      if (std::find(seen.begin(), seen.end(), tag) == seen.end()) {
        seen.push_back(tag);
      }
    }
  }
  return seen;
}

GridCell classify_point(const SweepContext& context, double p, double q) {
  const EquilibriumOutcome outcome =
      solve(closed_form_payoffs(context.at(p, q)), context.include_mixed);
  return {outcome.tag, outcome.mixed};
}

PhaseGrid sweep(const SweepContext& context) {
  context.validate();
  const std::size_t n = context.resolution;
  const double step = 1.0 / static_cast<double>(n - 1);
  std::vector<GridCell> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = static_cast<double>(i) * step;
    for (std::size_t j = 0; j < n; ++j) {
      GridCell& cell = cells[i * n + j];
      try {
        cell = classify_point(context, p, static_cast<double>(j) * step);
      } catch (const Error& e) {
        // Knife-edge matrices with no unique mixed profile keep an empty tag.
        if (e.code() != ErrorCode::kDegenerate) throw;
        cell = {};
      }
    }
  }
  return PhaseGrid(context, n, n, std::move(cells));
}

std::string to_csv(const PhaseGrid& grid) {
  std::string out = "p,q,label\n";
  out.reserve(grid.cells().size() * 24);
  for (std::size_t j = 0; j < grid.q_count(); ++j) {
    const std::string q = fixed(grid.q_at(j));
    for (std::size_t i = 0; i < grid.p_count(); ++i) {
      out += fixed(grid.p_at(i));
      out += ',';
      out += q;
      out += ',';
      out += grid.cell(i, j).label();
      out += '\n';
    }
  }
  return out;
}

double alliance_influence(const WeightedVotingGame& alliance,
                          std::size_t member) {
  if (member >= alliance.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "member " + std::to_string(member) + " not in alliance " +
                    alliance.shorthand());
  }
  return influence_multiplier(banzhaf_dp(alliance).banzhaf[member]);
}

SweepContext power_context(const WeightedVotingGame& alliance1,
                           std::size_t member1, double r1,
                           const WeightedVotingGame& alliance2,
                           std::size_t member2, double r2, Posture posture1,
                           Posture posture2, std::optional<double> e1,
                           std::optional<double> e2) {
  SweepContext context;
  context.r1 = r1;
  context.r2 = r2;
  context.b1 = alliance_influence(alliance1, member1);
  context.b2 = alliance_influence(alliance2, member2);
  context.e1 = policy_multiplier(posture1, e1);
  context.e2 = policy_multiplier(posture2, e2);
  context.validate();
  return context;
}

}  // namespace cag
