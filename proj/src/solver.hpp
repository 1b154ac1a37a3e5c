#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "game.hpp"

namespace hyperopic {

enum class Winner { kCopsWin, kRobberWins, kUndecided };

std::string winner_name(Winner w);

struct SolveOptions {
  int jobs = 0;  // 0: hardware concurrency
  // Upper bound on belief-table entries for one cop count.
  std::uint64_t state_limit = 40'000'000;
};

struct SolveResult {
  Winner winner = Winner::kUndecided;
  std::uint64_t states_explored = 0;
  std::optional<CopSet> placement;  // set iff kCopsWin
};

// Cops win from `placement` iff every initial belief state lies in the cop
// attractor (least fixed point of "some joint move leaves only winning
// successors").
SolveResult solve_placement(const GameSpec& spec, std::span<const Vertex> placement,
                            const SolveOptions& options = {});

// Tries every placement of spec.num_cops cops.
SolveResult solve(const GameSpec& spec, const SolveOptions& options = {});

struct CopNumberResult {
  Winner outcome = Winner::kUndecided;  // kCopsWin once a count is found
  int cop_number = 0;
  std::uint64_t states_explored = 0;  // summed over every count tried
  CopSet placement;
};

// Least m whose game is a cop win, searching m = 1, 2, ... up to
// max_cops (0: ceil(n/2) + 1).
CopNumberResult cop_number(const Graph& g, const VisibilityRule& rule,
                           const SolveOptions& options = {}, int max_cops = 0);

// Strategy witness: for each reachable cop-to-move state the chosen target
// of every cop, aligned with the sorted cop list.
struct Certificate {
  CopSet placement;
  std::map<BeliefState, std::vector<Vertex>> moves;
  int bound = 0;  // rounds to capture from the worst initial state
};

// Throws kPrecondition if the placement does not win.
Certificate extract_certificate(const GameSpec& spec, std::span<const Vertex> placement,
                                const SolveOptions& options = {});

}  // namespace hyperopic
