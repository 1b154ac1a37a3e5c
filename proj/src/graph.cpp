#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

namespace hyperopic {

std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::kInvalidArgument,
           "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    }
    if (u == v) fail(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(u));
    unique.insert({std::min(u, v), std::max(u, v)});
  }

  Graph g;
  g.n_ = n;
  g.edge_count_ = unique.size();
  g.adj_.assign(n, {});
  for (auto [u, v] : unique) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  constexpr int kUnreached = std::numeric_limits<int>::max();
  g.dist_.assign(static_cast<std::size_t>(n) * n, kUnreached);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = &g.dist_[static_cast<std::size_t>(s) * n];
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.adj_[u]) {
        if (row[w] == kUnreached) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != static_cast<std::size_t>(n)) fail(ErrorCode::kInvalidArgument, "graph is disconnected");
  }

  if (n <= kMaxMaskVertices) {
    g.closed_nbhd_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      Mask m = bit(v);
      for (Vertex w : g.adj_[v]) m |= bit(w);
      g.closed_nbhd_[v] = m;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Mask Graph::all_vertices() const {
  return n_ == kMaxMaskVertices ? ~Mask{0} : (bit(n_) - 1);
}

Mask Graph::closed_neighborhood(Mask set) const {
  Mask out = 0;
  for_each_vertex(set, [&](Vertex v) { out |= closed_nbhd_[v]; });
  return out;
}

Vertex Graph::step_toward(Vertex from, Vertex to) const {
  if (from == to) return from;
  int d = distance(from, to);
  for (Vertex w : adj_[from])
    if (distance(w, to) == d - 1) return w;
  fail(ErrorCode::kInternal, "distance table inconsistent");
}

std::vector<Vertex> Graph::shortest_path(Vertex from, Vertex to) const {
  std::vector<Vertex> path{from};
  while (from != to) {
    from = step_toward(from, to);
    path.push_back(from);
  }
  return path;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : edges())
    if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
  return build(static_cast<int>(keep.size()), es);
}

int eccentricity(const Graph& g, Vertex v) {
  int e = 0;
  for (Vertex u = 0; u < g.order(); ++u) e = std::max(e, g.distance(v, u));
  return e;
}

Metrics metrics(const Graph& g) {
  Metrics m;
  m.radius = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    int e = eccentricity(g, v);
    m.diameter = std::max(m.diameter, e);
    if (e < m.radius) {
      m.radius = e;
      m.center.clear();
    }
    if (e == m.radius) m.center.push_back(v);
  }
  return m;
}

std::pair<Vertex, Vertex> diametral_pair(const Graph& g) {
  std::pair<Vertex, Vertex> best{0, 0};
  int d = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.distance(u, v) > d) {
        d = g.distance(u, v);
        best = {u, v};
      }
  return best;
}

bool is_caterpillar(const Graph& g) {
  if (!g.is_tree()) return false;
  // Deleting the leaves of a tree leaves a subtree; it is a path iff every
  // remaining vertex keeps at most two non-leaf neighbours.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    int inner = 0;
    for (Vertex w : g.neighbors(v))
      if (g.degree(w) >= 2) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  const int n = g.order();
  if (n == 1) return {{0}};
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Vertex>> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  frames.push_back({0, -1, 0});
  disc[0] = low[0] = timer++;
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      if (w == f.parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(f.v, w);
        disc[w] = low[w] = timer++;
        frames.push_back({w, f.v, 0});
      } else if (disc[w] < disc[f.v]) {
        stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Vertex v = f.v, p = f.parent;
    frames.pop_back();
    if (p < 0) break;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::set<Vertex> comp;
      while (true) {
        Edge e = stack.back();
        stack.pop_back();
        comp.insert(e.first);
        comp.insert(e.second);
        if (e == Edge{p, v}) break;
      }
      out.emplace_back(comp.begin(), comp.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && blocks(g).size() == 1;
}

bool verify_retraction(const Graph& g, std::span<const Vertex> h_vertices,
                       std::span<const Vertex> f) {
  const int n = g.order();
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<bool> in_h(n, false);
  for (Vertex v : h_vertices) {
    if (v < 0 || v >= n) return false;
    in_h[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (f[v] < 0 || f[v] >= n || !in_h[f[v]]) return false;
    if (in_h[v] && f[v] != v) return false;
  }
  for (auto [u, v] : g.edges())
    if (f[u] != f[v] && !g.adjacent(f[u], f[v])) return false;
  return true;
}

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  bool c_inside = a < c && c < b;
  bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

}  // namespace hyperopic
