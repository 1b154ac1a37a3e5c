#pragma once

#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hyperopic {

// What the cops observe of the robber.
struct VisibilityRule {
  enum class Kind { kHyperopic, kZeroVisibility, kFullVisibility };

  Kind kind = Kind::kFullVisibility;
  int k = 0;  // hyperopic only, >= 1

  static VisibilityRule hyperopic(int k);
  static VisibilityRule zero_visibility() { return {Kind::kZeroVisibility, 0}; }
  static VisibilityRule full_visibility() { return {Kind::kFullVisibility, 0}; }

  std::string name() const;  // "hyperopic", "zero" or "classic"
  friend bool operator==(const VisibilityRule&, const VisibilityRule&) = default;
};

using CopSet = std::vector<Vertex>;  // sorted; cops are anonymous

struct GameSpec {
  Graph graph;
  VisibilityRule rule;
  int num_cops = 1;

  GameSpec(Graph g, VisibilityRule r, int cops);
};

// Cops to move; `belief` holds every robber position consistent with the
// observations so far. Never empty, never touching a cop.
struct BeliefState {
  CopSet cops;
  Mask belief = 0;

  friend bool operator==(const BeliefState&, const BeliefState&) = default;
  friend auto operator<=>(const BeliefState&, const BeliefState&) = default;
};

struct Observation {
  bool visible = false;
  Vertex at = -1;  // valid when visible

  static Observation seen(Vertex v) { return {true, v}; }
  static Observation hidden() { return {false, -1}; }
  friend bool operator==(const Observation&, const Observation&) = default;
};

struct ObservedSet {
  Observation observation;
  Mask positions = 0;
};

// `dists` are hop counts from every cop to the robber, all >= 1.
bool is_visible(const VisibilityRule& rule, std::span<const int> dists);

// Non-cop vertices at which a robber would be invisible to cops at `cops`.
Mask invisible_set(const Graph& g, const VisibilityRule& rule, std::span<const Vertex> cops);

Mask cop_mask(std::span<const Vertex> cops);

// Visible candidates become singletons (ascending), the invisible remainder
// one trailing block. Returned sets partition `candidates`.
std::vector<ObservedSet> observation_split(const GameSpec& spec, std::span<const Vertex> cops,
                                           Mask candidates);

// Every joint cop move as a sorted multiset, deduplicated, lexicographic.
std::vector<CopSet> joint_moves(const Graph& g, std::span<const Vertex> cops);

struct CopMoveOutcome {
  CopSet move;
  bool cop_win = false;                  // belief \ move is empty
  std::vector<ObservedSet> robber_to_move;  // split of belief \ move
};

std::vector<CopMoveOutcome> cop_turn_successors(const GameSpec& spec, const BeliefState& state);

struct Transition {
  bool cop_win = false;
  std::vector<BeliefState> states;
  std::vector<Observation> observations;  // parallel to `states`
};

Transition robber_turn_successors(const GameSpec& spec, std::span<const Vertex> cops,
                                  Mask candidates);

Transition initial_states(const GameSpec& spec, std::span<const Vertex> placement);

// Cop multisets of the given size in lexicographic order.
std::vector<CopSet> all_placements(int n, int num_cops);

}  // namespace hyperopic
