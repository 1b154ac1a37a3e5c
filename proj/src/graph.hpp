#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hyperopic {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Vertex sets over graphs with at most 64 vertices.
using Mask = std::uint64_t;

constexpr int kMaxMaskVertices = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline Vertex lowest(Mask m) { return __builtin_ctzll(m); }

template <typename F>
inline void for_each_vertex(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

std::vector<Vertex> to_vertices(Mask m);

// Immutable simple connected graph. Vertices are 0..order()-1 and all-pairs
// hop distances are computed once at construction.
class Graph {
 public:
  // Rejects loops, out-of-range ids and disconnected input. Duplicate edges
  // are collapsed.
  static Graph build(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int distance(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  bool adjacent(Vertex u, Vertex v) const { return u != v && distance(u, v) == 1; }
  bool is_tree() const { return edge_count_ + 1 == static_cast<std::size_t>(n_); }

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  // Mask helpers; valid only when order() <= 64.
  bool fits_mask() const { return n_ <= kMaxMaskVertices; }
  Mask all_vertices() const;
  Mask closed_neighborhood(Vertex v) const { return closed_nbhd_[v]; }
  Mask closed_neighborhood(Mask set) const;

  // Next vertex after `from` on a shortest from-to path (smallest id on ties);
  // returns `from` when from == to.
  Vertex step_toward(Vertex from, Vertex to) const;
  // Vertex sequence of a shortest path, endpoints included.
  std::vector<Vertex> shortest_path(Vertex from, Vertex to) const;

  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> dist_;
  std::vector<Mask> closed_nbhd_;
};

struct Metrics {
  int diameter = 0;
  int radius = 0;
  std::vector<Vertex> center;
};

Metrics metrics(const Graph& g);
int eccentricity(const Graph& g, Vertex v);
// Endpoints of a longest shortest path, lexicographically smallest pair.
std::pair<Vertex, Vertex> diametral_pair(const Graph& g);

bool is_caterpillar(const Graph& g);

// Biconnected components as sorted vertex lists; a single-vertex graph has the
// one block {0}.
std::vector<std::vector<Vertex>> blocks(const Graph& g);
bool is_two_connected(const Graph& g);

// True iff f maps V(g) into h, fixes h pointwise and sends every edge to an
// edge or a single vertex.
bool verify_retraction(const Graph& g, std::span<const Vertex> h_vertices,
                       std::span<const Vertex> f);

struct Matching {
  std::vector<Edge> edges;
  bool is_perfect = false;
};

// Exact maximum-cardinality matching (Edmonds' blossom algorithm).
Matching maximum_matching(const Graph& g);

struct OuterEmbedding {
  std::vector<Vertex> order;  // outer cycle, order[0] is the smallest id
  std::vector<Edge> chords;
};

// Hamiltonian outer cycle with pairwise non-crossing chords, or nullopt when
// g is not 2-connected outerplanar. Exponential backtracking; meant for
// n <= 16.
std::optional<OuterEmbedding> find_outer_embedding(const Graph& g);

// True iff chord (a, b) and chord (c, d) cross, given positions on a cycle.
bool chords_cross(int a, int b, int c, int d);

}  // namespace hyperopic
