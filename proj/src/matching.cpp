// Edmonds' blossom algorithm, O(n^3): repeated BFS for augmenting paths from
// each exposed vertex, contracting odd cycles through a base array.

#include <algorithm>
#include <numeric>

#include "graph.hpp"

namespace hyperopic {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_),
        blossom_(n_), queue_() {}

  std::vector<Vertex> run() {
    // Greedy start keeps the number of augmentations small.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (match_[w] < 0) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      Vertex end = find_path(v);
      while (end >= 0) {
        Vertex pv = parent_[end];
        Vertex ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    queue_.assign(1, root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex v = queue_[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          queue_.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
  std::vector<Vertex> queue_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  std::vector<Vertex> mate = BlossomMatcher(g).run();
  Matching m;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  m.is_perfect = 2 * m.edges.size() == static_cast<std::size_t>(g.order());
  return m;
}

}  // namespace hyperopic
