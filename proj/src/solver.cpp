#include "solver.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>

namespace hyperopic {
namespace {

constexpr std::uint16_t kUnreached = 0xFFFF;
constexpr std::uint16_t kPending = 0xFFFE;
constexpr std::uint16_t kMaxRank = 0xFFF0;

// A state is (cop multiset index, belief). Beliefs are either a visible
// singleton or a non-empty subset of the multiset's invisible set, stored
// compressed against that set.
struct StateId {
  std::uint32_t cops;
  std::uint32_t code;  // high bit: visible singleton (low bits = vertex)

  static constexpr std::uint32_t kSingle = 0x80000000u;
  bool single() const { return (code & kSingle) != 0; }
  std::uint32_t index() const { return code & ~kSingle; }
};

struct Move {
  std::uint32_t target;  // multiset index
  std::uint32_t assign_offset;  // into BeliefGame::assign_
};

struct CopEntry {
  CopSet cops;
  Mask cops_mask = 0;
  Mask hidden = 0;
  std::vector<Vertex> hidden_list;
  std::array<std::uint8_t, kMaxMaskVertices> slot{};  // vertex -> bit in compressed index
  std::vector<std::uint16_t> subset_rank;  // 1 << |hidden| entries, [0] unused
  std::array<std::uint16_t, kMaxMaskVertices> single_rank{};
  Mask single_won = 0;  // visible singletons with a final rank
  std::vector<Move> moves;
};

std::uint64_t pack(std::span<const Vertex> cops) {
  std::uint64_t key = 0;
  for (Vertex c : cops) key = (key << 7) | static_cast<std::uint64_t>(c);
  return key;
}

class BeliefGame {
 public:
  BeliefGame(const GameSpec& spec, const SolveOptions& options)
      : spec_(spec), g_(spec.graph), jobs_(options.jobs) {
    if (jobs_ <= 0) jobs_ = std::max(1u, std::thread::hardware_concurrency());
    if (spec.num_cops > 9) fail(ErrorCode::kInvalidArgument, "solver supports at most 9 cops");
    auto placements = all_placements(g_.order(), spec.num_cops);
    entries_.resize(placements.size());
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    std::uint64_t table = 0;
    for (std::size_t i = 0; i < placements.size(); ++i) {
      CopEntry& e = entries_[i];
      e.cops = std::move(placements[i]);
      e.cops_mask = cop_mask(e.cops);
      e.hidden = invisible_set(g_, spec.rule, e.cops);
      e.hidden_list = to_vertices(e.hidden);
      for (std::size_t s = 0; s < e.hidden_list.size(); ++s)
        e.slot[e.hidden_list[s]] = static_cast<std::uint8_t>(s);
      table += (std::uint64_t{1} << e.hidden_list.size()) + g_.order();
      index.emplace(pack(e.cops), static_cast<std::uint32_t>(i));
    }
    within_limit_ = table <= options.state_limit;
    if (!within_limit_) return;

    for (auto& e : entries_) {
      e.subset_rank.assign(std::size_t{1} << e.hidden_list.size(), kUnreached);
      e.single_rank.fill(kUnreached);
    }
    // Joint moves keep the first per-cop assignment (lexicographic over the
    // product of closed neighbourhoods) for each resulting multiset.
    for (auto& e : entries_) {
      std::unordered_map<std::uint32_t, bool> seen;
      std::vector<Vertex> cur(e.cops.size());
      std::vector<std::pair<CopSet, std::vector<Vertex>>> found;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cur.size()) {
          CopSet sorted = cur;
          std::sort(sorted.begin(), sorted.end());
          std::uint32_t t = index.at(pack(sorted));
          if (seen.emplace(t, true).second) found.emplace_back(std::move(sorted), cur);
          return;
        }
        std::vector<Vertex> options{e.cops[i]};
        for (Vertex w : g_.neighbors(e.cops[i])) options.push_back(w);
        std::sort(options.begin(), options.end());
        for (Vertex w : options) {
          cur[i] = w;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
      std::sort(found.begin(), found.end());
      for (auto& [sorted, assignment] : found) {
        e.moves.push_back({index.at(pack(sorted)), static_cast<std::uint32_t>(assign_.size())});
        assign_.insert(assign_.end(), assignment.begin(), assignment.end());
      }
    }
    index_ = std::move(index);
  }

  bool within_limit() const { return within_limit_; }
  std::uint64_t reached() const { return reached_; }

  std::uint32_t entry_of(std::span<const Vertex> sorted_cops) const {
    return index_.at(pack(sorted_cops));
  }

  Mask belief_of(StateId s) const {
    const CopEntry& e = entries_[s.cops];
    if (s.single()) return bit(static_cast<Vertex>(s.index()));
    return expand(e, s.index());
  }

  StateId state_of(std::uint32_t c, Mask belief) const {
    const CopEntry& e = entries_[c];
    if ((belief & ~e.hidden) != 0) {
      return {c, StateId::kSingle | static_cast<std::uint32_t>(lowest(belief))};
    }
    return {c, compress(e, belief)};
  }

  std::uint16_t& rank(StateId s) {
    CopEntry& e = entries_[s.cops];
    return s.single() ? e.single_rank[s.index()] : e.subset_rank[s.index()];
  }
  std::uint16_t rank(StateId s) const {
    const CopEntry& e = entries_[s.cops];
    return s.single() ? e.single_rank[s.index()] : e.subset_rank[s.index()];
  }

  // Initial states of a placement; empty when the cops cover every vertex.
  std::vector<StateId> initial(std::span<const Vertex> placement) const {
    std::uint32_t c = entry_of(placement);
    const CopEntry& e = entries_[c];
    std::vector<StateId> out;
    Mask free = g_.all_vertices() & ~e.cops_mask;
    for_each_vertex(free & ~e.hidden, [&](Vertex v) { out.push_back({c, StateId::kSingle | static_cast<std::uint32_t>(v)}); });
    if ((free & e.hidden) != 0) out.push_back({c, compress(e, free & e.hidden)});
    return out;
  }

  void explore(const std::vector<StateId>& roots) {
    std::deque<StateId> queue;
    for (StateId s : roots) mark(s, queue);
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      const Mask belief = belief_of(s);
      for (const Move& m : entries_[s.cops].moves)
        for_each_successor(belief, m, [&](StateId t) {
          mark(t, queue);
          return true;
        });
    }
  }

  // Jacobi iteration: states won in round r read only ranks < r, so ranks are
  // exact attractor levels regardless of thread count. `done` is polled after
  // every round. Returns false if the fixed point was reached first.
  template <typename Done>
  bool iterate(Done&& done) {
    if (done()) return true;
    for (std::uint16_t r = 1;; ++r) {
      if (r >= kMaxRank) fail(ErrorCode::kLimit, "attractor rank overflow");
      std::vector<std::vector<StateId>> won(jobs_);
      auto work = [&](int job) {
        for (std::size_t i = job; i < pending_.size(); i += jobs_)
          if (wins_within(pending_[i], r)) won[job].push_back(pending_[i]);
      };
      if (jobs_ == 1 || pending_.size() < 4096) {
        for (int j = 0; j < jobs_; ++j) work(j);
      } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs_; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
      }
      std::size_t changed = 0;
      for (const auto& list : won) {
        for (StateId s : list) {
          rank(s) = r;
          if (s.single()) entries_[s.cops].single_won |= bit(static_cast<Vertex>(s.index()));
        }
        changed += list.size();
      }
      if (changed == 0) return false;
      std::erase_if(pending_, [&](StateId s) { return rank(s) != kPending; });
      if (done()) return true;
    }
  }

  bool is_won(StateId s) const { return rank(s) < kPending; }

  // Winning moves from s ordered by (worst successor rank, joint move).
  std::optional<std::pair<const Move*, int>> best_move(StateId s) const {
    const std::uint16_t r = rank(s);
    const Mask belief = belief_of(s);
    const Move* best = nullptr;
    int best_worst = 0;
    for (const Move& m : entries_[s.cops].moves) {
      int worst = 0;
      bool ok = for_each_successor(belief, m, [&](StateId t) {
        std::uint16_t tr = rank(t);
        if (tr >= r) return false;
        worst = std::max<int>(worst, tr);
        return true;
      });
      if (ok && (best == nullptr || worst < best_worst)) {
        best = &m;
        best_worst = worst;
      }
    }
    if (best == nullptr) return std::nullopt;
    return std::make_pair(best, best_worst);
  }

  std::vector<Vertex> assignment(const Move& m, std::size_t cops) const {
    return {assign_.begin() + m.assign_offset, assign_.begin() + m.assign_offset + cops};
  }

  const CopEntry& entry(std::uint32_t c) const { return entries_[c]; }

  // Calls f(successor) for every cop-to-move state after move m; stops and
  // returns false as soon as f does.
  template <typename F>
  bool for_each_successor(Mask belief, const Move& m, F&& f) const {
    const CopEntry& to = entries_[m.target];
    const Mask left = belief & ~to.cops_mask;
    if (left == 0) return true;
    const Mask reach = g_.closed_neighborhood(left) & ~to.cops_mask;
    bool ok = true;
    for_each_vertex(reach & ~to.hidden, [&](Vertex v) {
      if (ok && !f(StateId{m.target, StateId::kSingle | static_cast<std::uint32_t>(v)})) ok = false;
    });
    if (!ok) return false;
    for_each_vertex(left & ~to.hidden, [&](Vertex v) {
      if (!ok) return;
      Mask q = g_.closed_neighborhood(v) & to.hidden & ~to.cops_mask;
      if (q != 0 && !f(StateId{m.target, compress(to, q)})) ok = false;
    });
    if (!ok) return false;
    const Mask block = left & to.hidden;
    if (block != 0) {
      Mask q = g_.closed_neighborhood(block) & to.hidden & ~to.cops_mask;
      if (q != 0 && !f(StateId{m.target, compress(to, q)})) return false;
    }
    return true;
  }

 private:
  static std::uint32_t compress(const CopEntry& e, Mask subset) {
    std::uint32_t idx = 0;
    for_each_vertex(subset, [&](Vertex v) { idx |= 1u << e.slot[v]; });
    return idx;
  }
  static Mask expand(const CopEntry& e, std::uint32_t idx) {
    Mask out = 0;
    while (idx != 0) {
      out |= bit(e.hidden_list[__builtin_ctz(idx)]);
      idx &= idx - 1;
    }
    return out;
  }

  void mark(StateId s, std::deque<StateId>& queue) {
    std::uint16_t& r = rank(s);
    if (r != kUnreached) return;
    r = kPending;
    ++reached_;
    pending_.push_back(s);
    queue.push_back(s);
  }

  bool wins_within(StateId s, std::uint16_t r) const {
    const Mask belief = belief_of(s);
    for (const Move& m : entries_[s.cops].moves) {
      const CopEntry& to = entries_[m.target];
      const Mask left = belief & ~to.cops_mask;
      if (left == 0) return true;
      // Cheap rejection on visible successors before touching subset ranks.
      const Mask reach = g_.closed_neighborhood(left) & ~to.cops_mask;
      if ((reach & ~to.hidden & ~to.single_won) != 0) continue;
      bool ok = for_each_successor(belief, m, [&](StateId t) { return rank(t) < r; });
      if (ok) return true;
    }
    return false;
  }

  const GameSpec& spec_;
  const Graph& g_;
  int jobs_;
  bool within_limit_ = true;
  std::vector<CopEntry> entries_;
  std::vector<Vertex> assign_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<StateId> pending_;
  std::uint64_t reached_ = 0;
};

bool all_won(const BeliefGame& game, const std::vector<StateId>& states) {
  return std::all_of(states.begin(), states.end(), [&](StateId s) { return game.is_won(s); });
}

}  // namespace

std::string winner_name(Winner w) {
  switch (w) {
    case Winner::kCopsWin: return "cops";
    case Winner::kRobberWins: return "robber";
    case Winner::kUndecided: return "undecided";
  }
  return "?";
}

SolveResult solve_placement(const GameSpec& spec, std::span<const Vertex> placement,
                            const SolveOptions& options) {
  CopSet sorted(placement.begin(), placement.end());
  std::sort(sorted.begin(), sorted.end());
  initial_states(spec, sorted);  // validates the placement
  BeliefGame game(spec, options);
  SolveResult result;
  if (!game.within_limit()) return result;
  auto roots = game.initial(sorted);
  game.explore(roots);
  result.states_explored = game.reached();
  bool won = game.iterate([&] { return all_won(game, roots); });
  result.winner = won ? Winner::kCopsWin : Winner::kRobberWins;
  if (won) result.placement = sorted;
  return result;
}

SolveResult solve(const GameSpec& spec, const SolveOptions& options) {
  BeliefGame game(spec, options);
  SolveResult result;
  if (!game.within_limit()) return result;
  const auto placements = all_placements(spec.graph.order(), spec.num_cops);
  std::vector<std::vector<StateId>> roots;
  std::vector<StateId> all_roots;
  for (const auto& p : placements) {
    roots.push_back(game.initial(p));
    all_roots.insert(all_roots.end(), roots.back().begin(), roots.back().end());
  }
  game.explore(all_roots);
  result.states_explored = game.reached();
  std::optional<std::size_t> winner;
  game.iterate([&] {
    for (std::size_t i = 0; i < placements.size(); ++i)
      if (all_won(game, roots[i])) {
        winner = i;
        return true;
      }
    return false;
  });
  result.winner = winner ? Winner::kCopsWin : Winner::kRobberWins;
  if (winner) result.placement = placements[*winner];
  return result;
}

CopNumberResult cop_number(const Graph& g, const VisibilityRule& rule, const SolveOptions& options,
                           int max_cops) {
  if (max_cops <= 0) max_cops = (g.order() + 1) / 2 + 1;
  CopNumberResult out;
  for (int m = 1; m <= max_cops; ++m) {
    SolveResult r = solve(GameSpec(g, rule, m), options);
    out.states_explored += r.states_explored;
    if (r.winner == Winner::kUndecided) {
      out.outcome = Winner::kUndecided;
      out.cop_number = m;
      return out;
    }
    if (r.winner == Winner::kCopsWin) {
      out.outcome = Winner::kCopsWin;
      out.cop_number = m;
      out.placement = *r.placement;
      return out;
    }
  }
  // Only reachable when max_cops was set below the true cop number.
  out.outcome = Winner::kRobberWins;
  out.cop_number = max_cops + 1;
  return out;
}

Certificate extract_certificate(const GameSpec& spec, std::span<const Vertex> placement,
                                const SolveOptions& options) {
  CopSet sorted(placement.begin(), placement.end());
  std::sort(sorted.begin(), sorted.end());
  initial_states(spec, sorted);
  BeliefGame game(spec, options);
  if (!game.within_limit()) fail(ErrorCode::kLimit, "state limit exceeded");
  auto roots = game.initial(sorted);
  game.explore(roots);
  if (!game.iterate([&] { return all_won(game, roots); }))
    fail(ErrorCode::kPrecondition, "placement does not win");

  Certificate cert;
  cert.placement = sorted;
  std::deque<StateId> queue(roots.begin(), roots.end());
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
  for (StateId s : roots) {
    seen[{s.cops, s.code}] = true;
    cert.bound = std::max<int>(cert.bound, game.rank(s));
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    auto best = game.best_move(s);
    if (!best) fail(ErrorCode::kInternal, "certificate state without a winning move");
    const Move& m = *best->first;
    const CopEntry& from = game.entry(s.cops);
    const Mask belief = game.belief_of(s);
    cert.moves[BeliefState{from.cops, belief}] = game.assignment(m, from.cops.size());
    game.for_each_successor(belief, m, [&](StateId t) {
      if (game.rank(t) >= game.rank(s)) fail(ErrorCode::kInternal, "certificate rank does not decrease");
      if (seen.emplace(std::make_pair(t.cops, t.code), true).second) queue.push_back(t);
      return true;
    });
  }
  return cert;
}

}  // namespace hyperopic
