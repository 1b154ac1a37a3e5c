#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "families.hpp"

namespace hyperopic {
namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

// Beyer-Hedetniemi successor on level sequences; false after the star.
bool next_level_sequence(std::vector<int>& level) {
  int p = static_cast<int>(level.size()) - 1;
  while (p > 0 && level[p] <= 1) --p;
  if (p <= 0) return false;
  int q = p - 1;
  while (level[q] != level[p] - 1) --q;
  const int shift = p - q;
  for (std::size_t i = p; i < level.size(); ++i) level[i] = level[i - shift];
  return true;
}

Graph tree_from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last_at(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (level[i] > 0) edges.emplace_back(last_at[level[i] - 1], i);
    last_at[level[i]] = i;
  }
  return Graph::build(n, edges);
}

using Chords = std::vector<std::pair<int, int>>;

Chords transform(const Chords& chords, int n, int rot, bool flip) {
  Chords out;
  out.reserve(chords.size());
  for (auto [a, b] : chords) {
    int x = flip ? (n - a) % n : a;
    int y = flip ? (n - b) % n : b;
    x = (x + rot) % n;
    y = (y + rot) % n;
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Upper-triangle adjacency code of a small graph under a vertex ordering.
std::uint64_t code_under(const std::vector<Mask>& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1);
  return code;
}

// Minimum code over orderings that list vertices by non-increasing degree.
std::uint64_t canonical_code(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return popcount(adj[v]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg(a) != deg(b) ? deg(a) > deg(b) : a < b;
  });
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      best = std::min(best, code_under(adj, order));
      return;
    }
    auto [lo, hi] = groups[g];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(g + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace

std::string tree_canonical_form(const Graph& t) {
  if (!t.is_tree()) fail(ErrorCode::kInvalidArgument, "canonical form needs a tree");
  Metrics m = metrics(t);
  std::string best;
  for (Vertex c : m.center) {
    std::string code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 12) fail(ErrorCode::kInvalidArgument, "all_trees supports 1 <= n <= 12");
  std::vector<int> level(n);
  std::iota(level.begin(), level.end(), 0);
  std::set<std::string> seen;
  std::vector<Graph> out;
  do {
    Graph t = tree_from_levels(level);
    if (seen.insert(tree_canonical_form(t)).second) out.push_back(std::move(t));
  } while (next_level_sequence(level));
  return out;
}

std::vector<Graph> all_two_connected_outerplanar(int n) {
  if (n < 3 || n > 10) fail(ErrorCode::kInvalidArgument, "outerplanar enumeration supports 3 <= n <= 10");
  Chords diagonals;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) diagonals.emplace_back(i, j);

  std::set<Chords> seen;
  std::vector<Graph> out;
  Chords current;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == diagonals.size()) {
      Chords canon = current;
      for (int rot = 0; rot < n; ++rot)
        for (bool flip : {false, true}) canon = std::min(canon, transform(current, n, rot, flip));
      if (!seen.insert(canon).second) return;
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      for (auto [a, b] : canon) edges.emplace_back(a, b);
      out.push_back(Graph::build(n, edges));
      return;
    }
    rec(idx + 1);
    auto [a, b] = diagonals[idx];
    for (auto [c, d] : current)
      if (chords_cross(a, b, c, d)) return;
    current.push_back(diagonals[idx]);
    rec(idx + 1);
    current.pop_back();
  };
  rec(0);
  return out;
}

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 7) fail(ErrorCode::kInvalidArgument, "connected graph enumeration supports 1 <= n <= 7");
  // Every connected graph has a non-cut vertex, so extending each connected
  // graph on n-1 vertices by one vertex reaches every class on n vertices.
  std::vector<std::vector<Mask>> layer{{Mask{0}}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<std::vector<Mask>> next;
    for (const auto& adj : layer) {
      for (Mask nb = 1; nb < bit(size - 1); ++nb) {
        std::vector<Mask> ext = adj;
        ext.push_back(nb);
        for_each_vertex(nb, [&](Vertex v) { ext[v] |= bit(size - 1); });
        if (seen.insert(canonical_code(ext)).second) next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& adj : layer) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
      for_each_vertex(adj[v], [&](Vertex w) {
        if (v < w) edges.emplace_back(v, w);
      });
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

}  // namespace hyperopic
