#pragma once
// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph container, and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace oracle {

using hyperopic::Graph;
using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(const Graph& g) {
  Adj a(g.order());
  for (auto [u, v] : g.edges()) {
    a[u].push_back(v);
    a[v].push_back(u);
  }
  return a;
}

// Floyd-Warshall; unreachable pairs stay at n.
inline std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, n));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

// Largest matching by trying every edge subset recursively.
inline int brute_matching(const Graph& g) {
  const auto e = g.edges();
  std::function<int(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) -> int {
    if (i == e.size()) return 0;
    int best = rec(i + 1, used);
    const auto [u, v] = e[i];
    const std::uint64_t m = (1ULL << u) | (1ULL << v);
    if (!(used & m)) best = std::max(best, 1 + rec(i + 1, used | m));
    return best;
  };
  return rec(0, 0);
}

inline bool connected_without(const Graph& g, int removed) {
  const int n = g.order();
  const Adj a = adjacency(g);
  int start = removed == 0 ? 1 : 0;
  if (n - (removed >= 0) <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> st{start};
  seen[start] = 1;
  if (removed >= 0) seen[removed] = 1;
  int count = 1;
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int w : a[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        st.push_back(w);
      }
  }
  return count == n - (removed >= 0);
}

// Caterpillar: a tree whose non-leaf vertices induce a path (or nothing).
inline bool brute_caterpillar(const Graph& g) {
  if (!g.is_tree()) return false;
  const int n = g.order();
  std::vector<int> inner;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 1) inner.push_back(v);
  if (inner.size() <= 1) return true;
  std::set<int> in(inner.begin(), inner.end());
  int ends = 0;
  for (int v : inner) {
    int d = 0;
    for (int w : g.neighbors(v)) d += in.count(w);
    if (d > 2) return false;
    ends += d == 1;
  }
  return ends == 2;
}

// Rooted AHU string.
inline std::string ahu(const Adj& a, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : a[v])
    if (w != parent) kids.push_back(ahu(a, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// Free-tree invariant: least rooted encoding over every root.
inline std::string tree_code(const Graph& t) {
  const Adj a = adjacency(t);
  std::string best;
  for (int r = 0; r < t.order(); ++r) {
    std::string s = ahu(a, r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Number of unlabelled trees on n vertices, from every Pruefer sequence.
inline int pruefer_tree_count(int n) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) (u < 0 ? u : v) = i;
    edges.emplace_back(u, v);
    seen.insert(tree_code(Graph::build(n, edges)));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
  return static_cast<int>(seen.size());
}

// Non-crossing chord sets of C_n counted up to rotation and reflection.
inline int outerplanar_orbit_count(int n) {
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
  auto cross = [](std::pair<int, int> x, std::pair<int, int> y) {
    auto [a, b] = x;
    auto [c, d] = y;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
  };
  std::set<std::vector<std::pair<int, int>>> orbits;
  const int m = static_cast<int>(chords.size());
  for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
    std::vector<std::pair<int, int>> pick;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(s >> i & 1)) continue;
      for (auto& p : pick) ok &= !cross(p, chords[i]);
      pick.push_back(chords[i]);
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> best;
    bool first = true;
    for (int r = 0; r < n; ++r)
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<std::pair<int, int>> img;
        for (auto [a, b] : pick) {
          int x = flip ? (n - a + r) % n : (a + r) % n;
          int y = flip ? (n - b + r) % n : (b + r) % n;
          img.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) best = img, first = false;
      }
    orbits.insert(best);
  }
  return static_cast<int>(orbits.size());
}

// Some Hamiltonian cycle leaves only pairwise non-crossing chords.
inline bool brute_outer_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[1] > perm[n - 1]) continue;  // each cycle once per direction
    bool ham = true;
    for (int i = 0; i < n && ham; ++i) ham = g.adjacent(perm[i], perm[(i + 1) % n]);
    if (!ham) continue;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : g.edges()) {
      int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
      if (b - a != 1 && !(a == 0 && b == n - 1)) chords.emplace_back(a, b);
    }
    bool ok = true;
    for (std::size_t i = 0; i < chords.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chords.size() && ok; ++j) {
        auto [a, b] = chords[i];
        auto [c, d] = chords[j];
        ok = !((a < c && c < b && b < d) || (c < a && a < d && d < b));
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Every map V -> keep that fixes keep and sends edges to edges or loops.
inline bool brute_retraction(const Graph& g, const std::vector<int>& keep) {
  const int n = g.order();
  std::vector<int> free;
  std::set<int> kept(keep.begin(), keep.end());
  for (int v = 0; v < n; ++v)
    if (!kept.count(v)) free.push_back(v);
  std::vector<int> idx(free.size(), 0);
  while (true) {
    std::vector<int> f(n);
    for (int v : keep) f[v] = v;
    for (std::size_t i = 0; i < free.size(); ++i) f[free[i]] = keep[idx[i]];
    bool ok = true;
    for (auto [u, v] : g.edges()) ok &= f[u] == f[v] || g.adjacent(f[u], f[v]);
    if (ok) return true;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == static_cast<int>(keep.size())) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

// Classic game over explicit positions: cops win iff some placement
// of `cops` cops forces capture, with the robber choosing after the cops.
inline bool classic_cops_win(const Graph& g, int cops) {
  const int n = g.order();
  const Adj a = adjacency(g);
  std::vector<std::vector<int>> placements;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(cur.size()) == cops) {
      placements.push_back(cur);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      gen(v);
      cur.pop_back();
    }
  };
  gen(0);
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < placements.size(); ++i) id[placements[i]] = static_cast<int>(i);
  const int P = static_cast<int>(placements.size());
  auto on = [&](int p, int r) {
    return std::find(placements[p].begin(), placements[p].end(), r) != placements[p].end();
  };
  // Joint moves from each cop position.
  std::vector<std::vector<int>> moves(P);
  for (int p = 0; p < P; ++p) {
    std::set<int> out;
    std::vector<int> next(cops);
    std::function<void(int)> rec = [&](int i) {
      if (i == cops) {
        auto s = next;
        std::sort(s.begin(), s.end());
        out.insert(id[s]);
        return;
      }
      const int c = placements[p][i];
      next[i] = c;
      rec(i + 1);
      for (int w : a[c]) {
        next[i] = w;
        rec(i + 1);
      }
    };
    rec(0);
    moves[p].assign(out.begin(), out.end());
  }
  // copwin[p][r]: cops at p to move, robber at r, cops win.
  std::vector<std::vector<char>> copwin(P, std::vector<char>(n, 0));
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < P; ++p)
      for (int r = 0; r < n; ++r) {
        if (copwin[p][r] || on(p, r)) continue;
        for (int q : moves[p]) {
          bool win = on(q, r);
          if (!win) {
            win = true;
            std::vector<int> opts{r};
            for (int w : a[r]) opts.push_back(w);
            for (int s : opts) win &= on(q, s) || copwin[q][s];
          }
          if (win) {
            copwin[p][r] = 1;
            changed = true;
            break;
          }
        }
      }
  }
  for (int p = 0; p < P; ++p) {
    bool all = true;
    for (int r = 0; r < n; ++r) all &= on(p, r) || copwin[p][r];
    if (all) return true;
  }
  return false;
}

// Belief-state game solved by plain fixed-point iteration over a std::map.
// visibility: 0 classic, -1 zero, k >= 1 hyperopic radius k.
inline bool belief_cops_win(const Graph& g, int cops, int visibility) {
  const int n = g.order();
  const auto d = all_distances(g);
  const Adj a = adjacency(g);
  using State = std::pair<std::vector<int>, std::uint64_t>;
  auto visible = [&](const std::vector<int>& c, int v) {
    if (visibility == 0) return true;
    if (visibility < 0) return false;
    for (int x : c)
      if (d[x][v] < 1 || d[x][v] > visibility) return true;
    return false;
  };
  auto split = [&](const std::vector<int>& c, std::uint64_t s) {
    std::vector<std::uint64_t> parts;
    std::uint64_t hidden = 0;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      if (visible(c, v)) parts.push_back(1ULL << v);
      else hidden |= 1ULL << v;
    }
    if (hidden) parts.push_back(hidden);
    return parts;
  };
  auto occupied = [](const std::vector<int>& c) {
    std::uint64_t m = 0;
    for (int x : c) m |= 1ULL << x;
    return m;
  };
  auto joint = [&](const std::vector<int>& c) {
    std::set<std::vector<int>> out;
    std::vector<int> next(c.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == c.size()) {
        auto s = next;
        std::sort(s.begin(), s.end());
        out.insert(s);
        return;
      }
      next[i] = c[i];
      rec(i + 1);
      for (int w : a[c[i]]) {
        next[i] = w;
        rec(i + 1);
      }
    };
    rec(0);
    return out;
  };
  std::map<State, std::vector<std::vector<State>>> succ;
  std::vector<std::vector<State>> roots;
  std::vector<State> stack;
  std::vector<int> cur;
  std::function<void(int)> places = [&](int from) {
    if (static_cast<int>(cur.size()) == cops) {
      const std::uint64_t all = ((n == 64) ? ~0ULL : ((1ULL << n) - 1)) & ~occupied(cur);
      std::vector<State> r;
      for (auto part : split(cur, all)) r.push_back({cur, part});
      for (auto& s : r) stack.push_back(s);
      roots.push_back(r);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      places(v);
      cur.pop_back();
    }
  };
  places(0);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (succ.count(s)) continue;
    auto& opts = succ[s];
    for (const auto& mv : joint(s.first)) {
      const std::uint64_t left = s.second & ~occupied(mv);
      std::vector<State> kids;
      for (auto part : split(mv, left)) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
          if (part >> v & 1) {
            next |= 1ULL << v;
            for (int w : a[v]) next |= 1ULL << w;
          }
        next &= ~occupied(mv);
        for (auto p2 : split(mv, next)) kids.push_back({mv, p2});
      }
      for (auto& k : kids) stack.push_back(k);
      opts.push_back(kids);
    }
  }
  std::set<State> win;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [s, opts] : succ) {
      if (win.count(s)) continue;
      for (auto& kids : opts) {
        bool all = true;
        for (auto& k : kids) all &= win.count(k) > 0;
        if (all) {
          win.insert(s);
          changed = true;
          break;
        }
      }
    }
  }
  for (auto& r : roots) {
    bool all = true;
    for (auto& s : r) all &= win.count(s) > 0;
    if (all) return true;
  }
  return false;
}

inline int belief_cop_number(const Graph& g, int visibility) {
  for (int c = 1;; ++c)
    if (belief_cops_win(g, c, visibility)) return c;
}

}  // namespace oracle
