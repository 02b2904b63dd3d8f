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

#include "cag/payoff_engine.hpp"

#include <cmath>
#include <sstream>

#include "cag/error.hpp"
#include "cag/format.hpp"

namespace cag {
namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

void require(bool ok, const char* field, double value, const char* range) {
  if (!ok) {
    throw Error(ErrorCode::kInvalidParams,
                std::string(field) + " = " + std::to_string(value) +
                    " outside " + range);
  }
}

class TreeBuilder {
 public:
  std::size_t leaf(double u1, double u2) {
    GameTree::Node node;
    node.kind = GameTree::Kind::kLeaf;
    node.payoff = {u1, u2};
    return push(std::move(node));
  }

  std::size_t chance(std::vector<GameTree::Branch> branches) {
    GameTree::Node node;
    node.kind = GameTree::Kind::kChance;
    node.branches = std::move(branches);
    return push(std::move(node));
  }

  std::size_t decision(int owner, GameTree::InfoSet info_set,
                       std::size_t on_share, std::size_t on_attack) {
    GameTree::Node node;
    node.kind = GameTree::Kind::kDecision;
    node.owner = owner;
    node.info_set = info_set;
    node.on_share = on_share;
    node.on_attack = on_attack;
    return push(std::move(node));
  }

  std::vector<GameTree::Node> take() { return std::move(nodes_); }

 private:
  std::size_t push(GameTree::Node node) {
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  std::vector<GameTree::Node> nodes_;
};

class TreeEvaluator {
 public:
  TreeEvaluator(const GameTree& tree, Strategy s1, Strategy s2)
      : tree_(tree), s1_(s1), s2_(s2) {}

  PayoffPair run() { return eval(tree_.root(), 0); }

 private:
  [[noreturn]] static void malformed(const std::string& what) {
    throw Error(ErrorCode::kMalformedTree, what);
  }

  PayoffPair eval(std::size_t index, std::size_t depth) {
    const auto& nodes = tree_.nodes();
    if (index >= nodes.size()) {
      malformed("node index " + std::to_string(index) + " out of range");
    }
    if (depth > nodes.size()) malformed("cycle detected");
    const GameTree::Node& node = nodes[index];
    switch (node.kind) {
      case GameTree::Kind::kLeaf:
        return node.payoff;
      case GameTree::Kind::kDecision: {
        Strategy action;
        if (node.owner == 1) {
          action = s1_;
        } else if (node.owner == 2) {
          action = s2_;
        } else {
          malformed("decision node " + std::to_string(index) +
                    " has owner " + std::to_string(node.owner));
        }
        return eval(action == Strategy::kShare ? node.on_share : node.on_attack,
                    depth + 1);
      }
      case GameTree::Kind::kChance: {
        if (node.branches.empty()) {
          malformed("chance node " + std::to_string(index) + " has no branches");
        }
        double mass = 0.0;
        PayoffPair sum;
        for (const auto& branch : node.branches) {
          if (!(branch.probability >= 0.0) || !std::isfinite(branch.probability)) {
            malformed("negative probability at chance node " +
                      std::to_string(index));
          }
          mass += branch.probability;
          const PayoffPair child = eval(branch.child, depth + 1);
          sum.u1 += branch.probability * child.u1;
          sum.u2 += branch.probability * child.u2;
        }
        if (std::abs(mass - 1.0) > 1e-12) {
          malformed("chance node " + std::to_string(index) +
                    " probabilities sum to " + std::to_string(mass));
        }
        return sum;
      }
    }
    malformed("unknown node kind");
  }

  const GameTree& tree_;
  Strategy s1_;
  Strategy s2_;
};

void dump_node(const GameTree& tree, std::size_t index, int indent,
               const std::string& edge, std::ostringstream& out) {
  const GameTree::Node& node = tree.nodes().at(index);
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << edge;
  switch (node.kind) {
    case GameTree::Kind::kLeaf:
      out << "leaf (" << fixed(node.payoff.u1) << ", " << fixed(node.payoff.u2)
          << ")\n";
      return;
    case GameTree::Kind::kDecision:
      out << "player " << node.owner << " ["
          << (node.info_set == GameTree::InfoSet::kFirstDiscoverer
                  ? "first"
                  : "rediscover")
          << "]\n";
      dump_node(tree, node.on_attack, indent + 1, "A -> ", out);
      dump_node(tree, node.on_share, indent + 1, "S -> ", out);
      return;
    case GameTree::Kind::kChance:
      out << "chance\n";
      for (const auto& branch : node.branches) {
        dump_node(tree, branch.child, indent + 1,
                  fixed(branch.probability) + " -> ", out);
      }
      return;
  }
}

}  // namespace

std::string_view to_string(Strategy s) {
  return s == Strategy::kShare ? "S" : "A";
}

std::string profile_tag(Profile profile) {
  return std::string(to_string(profile.first)) +
         std::string(to_string(profile.second));
}

std::string_view to_string(Posture posture) {
  switch (posture) {
    case Posture::kNone: return "none";
    case Posture::kOffensive: return "offensive";
    case Posture::kDefensive: return "defensive";
  }
  return "none";
}

std::optional<Posture> parse_posture(std::string_view text) {
  if (text == "none") return Posture::kNone;
  if (text == "offensive") return Posture::kOffensive;
  if (text == "defensive") return Posture::kDefensive;
  return std::nullopt;
}

PostureBand posture_band(Posture posture) {
  switch (posture) {
    case Posture::kOffensive: return {1.1, 1.6};
    case Posture::kDefensive: return {0.4, 0.9};
    case Posture::kNone: break;
  }
  return {1.0, 1.0};
}

double policy_multiplier(Posture posture, std::optional<double> explicit_e) {
  if (explicit_e && !(std::isfinite(*explicit_e) && *explicit_e > 0.0)) {
    throw Error(ErrorCode::kPostureBandViolation,
                "attack multiplier must be positive, got " +
                    std::to_string(*explicit_e));
  }
  if (posture == Posture::kNone) return explicit_e.value_or(1.0);
  const PostureBand band = posture_band(posture);
  if (!explicit_e) {
    throw Error(ErrorCode::kPostureBandViolation,
                std::string(to_string(posture)) +
                    " posture requires an explicit attack multiplier in [" +
                    fixed(band.low, 1) + ", " + fixed(band.high, 1) + "]");
  }
  if (*explicit_e < band.low || *explicit_e > band.high) {
    throw Error(ErrorCode::kPostureBandViolation,
                "attack multiplier " + std::to_string(*explicit_e) +
                    " outside " + std::string(to_string(posture)) + " band [" +
                    fixed(band.low, 1) + ", " + fixed(band.high, 1) + "]");
  }
  return *explicit_e;
}

void GameParams::validate() const {
  require(in_unit(p), "p", p, "[0, 1]");
  require(in_unit(q), "q", q, "[0, 1]");
  require(in_unit(r1), "r1", r1, "[0, 1]");
  require(in_unit(r2), "r2", r2, "[0, 1]");
  require(b1 >= 0.1 && b1 <= 1.5, "b1", b1, "[0.1, 1.5]");
  require(b2 >= 0.1 && b2 <= 1.5, "b2", b2, "[0.1, 1.5]");
  require(std::isfinite(e1) && e1 > 0.0, "e1", e1, "(0, inf)");
  require(std::isfinite(e2) && e2 > 0.0, "e2", e2, "(0, inf)");
}

GameParams GameParams::swapped() const {
  return {1.0 - p, 1.0 - q, r2, r1, b2, b1, e2, e1};
}

double first_strike_probability(double p, double q) {
  return p * p + 2.0 * p * (1.0 - p) * q;
}

PayoffMatrix closed_form_payoffs(const GameParams& params) {
  params.validate();
  const double p = params.p;
  const double share1 = params.b1 * params.r1;
  const double share2 = params.b2 * params.r2;
  const double wins1 = first_strike_probability(p, params.q);
  const double loses1 = 1.0 - wins1;

  PayoffMatrix m;
  m.at(Strategy::kShare, Strategy::kShare) = {p * share1, (1.0 - p) * share2};
  m.at(Strategy::kAttack, Strategy::kShare) = {params.e1 * p * p,
                                               -p * p + share2 * (1.0 - p * p)};
  m.at(Strategy::kShare, Strategy::kAttack) = {
      share1 * (2.0 * p - p * p) - (1.0 - p) * (1.0 - p),
      params.e2 * (1.0 - p) * (1.0 - p)};
  m.at(Strategy::kAttack, Strategy::kAttack) = {params.e1 * wins1 - loses1,
                                                params.e2 * loses1 - wins1};
  return m;
}

GameTree build_game_tree(const GameParams& params) {
  params.validate();
  using IS = GameTree::InfoSet;
  TreeBuilder b;
  const double p = params.p;
  const double q = params.q;
  const double share1 = params.b1 * params.r1;
  const double share2 = params.b2 * params.r2;

  // Both players attacking: Player 1 strikes first with probability q.
  auto race = [&] {
    return b.chance({{q, b.leaf(params.e1, -1.0)},
                     {1.0 - q, b.leaf(-1.0, params.e2)}});
  };

  // Player 1 discovers first.
  const std::size_t p2_rediscovers =
      b.decision(2, IS::kRediscoverer, b.leaf(0.0, share2), race());
  const std::size_t p1_attacks =
      b.chance({{p, b.leaf(params.e1, -1.0)}, {1.0 - p, p2_rediscovers}});
  const std::size_t p1_first =
      b.decision(1, IS::kFirstDiscoverer, b.leaf(share1, 0.0), p1_attacks);

  // Player 2 discovers first.
  const std::size_t p1_rediscovers =
      b.decision(1, IS::kRediscoverer, b.leaf(share1, 0.0), race());
  const std::size_t p2_attacks =
      b.chance({{1.0 - p, b.leaf(-1.0, params.e2)}, {p, p1_rediscovers}});
  const std::size_t p2_first =
      b.decision(2, IS::kFirstDiscoverer, b.leaf(0.0, share2), p2_attacks);

  const std::size_t root = b.chance({{p, p1_first}, {1.0 - p, p2_first}});
  return GameTree(b.take(), root);
}

PayoffPair tree_payoffs(const GameTree& tree, Strategy s1, Strategy s2) {
  return TreeEvaluator(tree, s1, s2).run();
}

std::string GameTree::dump() const {
  std::ostringstream out;
  dump_node(*this, root_, 0, "", out);
  return out.str();
}

}  // namespace cag
