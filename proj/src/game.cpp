#include "game.hpp"

#include <algorithm>
#include <set>

namespace hyperopic {

VisibilityRule VisibilityRule::hyperopic(int k) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "hyperopic visibility needs k >= 1");
  return {Kind::kHyperopic, k};
}

std::string VisibilityRule::name() const {
  switch (kind) {
    case Kind::kHyperopic: return "hyperopic";
    case Kind::kZeroVisibility: return "zero";
    case Kind::kFullVisibility: return "classic";
  }
  return "?";
}

GameSpec::GameSpec(Graph g, VisibilityRule r, int cops)
    : graph(std::move(g)), rule(r), num_cops(cops) {
  if (num_cops < 1) fail(ErrorCode::kInvalidArgument, "need at least one cop");
  if (!graph.fits_mask()) fail(ErrorCode::kInvalidArgument, "games are limited to 64 vertices");
  if (rule.kind == VisibilityRule::Kind::kHyperopic && rule.k < 1)
    fail(ErrorCode::kInvalidArgument, "hyperopic visibility needs k >= 1");
}

bool is_visible(const VisibilityRule& rule, std::span<const int> dists) {
  switch (rule.kind) {
    case VisibilityRule::Kind::kZeroVisibility: return false;
    case VisibilityRule::Kind::kFullVisibility: return true;
    case VisibilityRule::Kind::kHyperopic:
      return std::any_of(dists.begin(), dists.end(), [&](int d) { return d > rule.k; });
  }
  return true;
}

Mask cop_mask(std::span<const Vertex> cops) {
  Mask m = 0;
  for (Vertex c : cops) m |= bit(c);
  return m;
}

Mask invisible_set(const Graph& g, const VisibilityRule& rule, std::span<const Vertex> cops) {
  const Mask free = g.all_vertices() & ~cop_mask(cops);
  switch (rule.kind) {
    case VisibilityRule::Kind::kZeroVisibility: return free;
    case VisibilityRule::Kind::kFullVisibility: return 0;
    case VisibilityRule::Kind::kHyperopic: break;
  }
  Mask out = 0;
  for_each_vertex(free, [&](Vertex v) {
    bool hidden = true;
    for (Vertex c : cops)
      if (g.distance(c, v) > rule.k) hidden = false;
    if (hidden) out |= bit(v);
  });
  return out;
}

std::vector<ObservedSet> observation_split(const GameSpec& spec, std::span<const Vertex> cops,
                                           Mask candidates) {
  const Mask hidden = invisible_set(spec.graph, spec.rule, cops) & candidates;
  std::vector<ObservedSet> out;
  for_each_vertex(candidates & ~hidden, [&](Vertex v) {
    out.push_back({Observation::seen(v), bit(v)});
  });
  if (hidden != 0) out.push_back({Observation::hidden(), hidden});
  return out;
}

std::vector<CopSet> joint_moves(const Graph& g, std::span<const Vertex> cops) {
  std::set<CopSet> moves;
  CopSet current(cops.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cops.size()) {
      CopSet sorted = current;
      std::sort(sorted.begin(), sorted.end());
      moves.insert(std::move(sorted));
      return;
    }
    current[i] = cops[i];
    self(self, i + 1);
    for (Vertex w : g.neighbors(cops[i])) {
      current[i] = w;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return {moves.begin(), moves.end()};
}

std::vector<CopMoveOutcome> cop_turn_successors(const GameSpec& spec, const BeliefState& state) {
  std::vector<CopMoveOutcome> out;
  for (CopSet& move : joint_moves(spec.graph, state.cops)) {
    CopMoveOutcome o;
    const Mask left = state.belief & ~cop_mask(move);
    o.cop_win = left == 0;
    if (!o.cop_win) o.robber_to_move = observation_split(spec, move, left);
    o.move = std::move(move);
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

Transition split_into_states(const GameSpec& spec, std::span<const Vertex> cops, Mask positions) {
  Transition t;
  t.cop_win = positions == 0;
  if (t.cop_win) return t;
  CopSet sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& part : observation_split(spec, sorted, positions)) {
    t.states.push_back({sorted, part.positions});
    t.observations.push_back(part.observation);
  }
  return t;
}

}  // namespace

Transition robber_turn_successors(const GameSpec& spec, std::span<const Vertex> cops,
                                  Mask candidates) {
  const Mask next = spec.graph.closed_neighborhood(candidates) & ~cop_mask(cops);
  return split_into_states(spec, cops, next);
}

Transition initial_states(const GameSpec& spec, std::span<const Vertex> placement) {
  if (static_cast<int>(placement.size()) != spec.num_cops)
    fail(ErrorCode::kInvalidArgument, "placement size differs from the number of cops");
  for (Vertex c : placement)
    if (c < 0 || c >= spec.graph.order()) fail(ErrorCode::kInvalidArgument, "placement vertex out of range");
  return split_into_states(spec, placement, spec.graph.all_vertices() & ~cop_mask(placement));
}

std::vector<CopSet> all_placements(int n, int num_cops) {
  std::vector<CopSet> out;
  CopSet cur(num_cops, 0);
  while (true) {
    out.push_back(cur);
    int i = num_cops - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < num_cops; ++j) cur[j] = cur[i];
  }
  return out;
}

}  // namespace hyperopic
