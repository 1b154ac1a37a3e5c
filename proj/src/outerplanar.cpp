#include <algorithm>

#include "graph.hpp"

namespace hyperopic {
namespace {

struct Search {
  const Graph& g;
  int n;
  std::vector<int> pos;  // cycle position of each vertex, -1 if unplaced
  std::vector<Vertex> order;
  std::vector<std::pair<int, int>> chords;  // as positions

  bool extend() {
    const int p = static_cast<int>(order.size());
    if (p == n) return g.adjacent(order.back(), order.front());
    Vertex last = order.back();
    for (Vertex next : g.neighbors(last)) {
      if (pos[next] >= 0) continue;
      // Every placed neighbour other than the predecessor (and the start,
      // when closing the cycle) becomes a chord ending at position p.
      std::size_t before = chords.size();
      bool ok = true;
      for (Vertex w : g.neighbors(next)) {
        int q = pos[w];
        if (q < 0 || q == p - 1) continue;
        if (q == 0 && p == n - 1) continue;
        for (std::size_t i = 0; i < before && ok; ++i)
          if (chords_cross(chords[i].first, chords[i].second, q, p)) ok = false;
        if (!ok) break;
        chords.emplace_back(q, p);
      }
      if (ok) {
        pos[next] = p;
        order.push_back(next);
        if (extend()) return true;
        order.pop_back();
        pos[next] = -1;
      }
      chords.resize(before);
    }
    return false;
  }
};

}  // namespace

std::optional<OuterEmbedding> find_outer_embedding(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() > static_cast<std::size_t>(2 * n - 3)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) return std::nullopt;

  Search s{g, n, std::vector<int>(n, -1), {0}, {}};
  s.pos[0] = 0;
  if (!s.extend()) return std::nullopt;

  OuterEmbedding emb;
  emb.order = s.order;
  if (emb.order[1] > emb.order.back()) std::reverse(emb.order.begin() + 1, emb.order.end());
  for (auto [u, v] : g.edges()) {
    int a = s.pos[u], b = s.pos[v];
    int gap = std::abs(a - b);
    if (gap != 1 && gap != n - 1) emb.chords.emplace_back(u, v);
  }
  return emb;
}

}  // namespace hyperopic
