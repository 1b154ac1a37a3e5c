#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "audit.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "oracles.hpp"

using namespace hyperopic;

namespace {

std::vector<Graph> small_graphs(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& g : all_connected_graphs(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("construction rejects bad input") {
  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::build(2, loop), Error);
  const std::vector<Edge> range{{0, 5}};
  CHECK_THROWS_AS(Graph::build(3, range), Error);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(Graph::build(4, split), Error);
  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph::build(2, dup).size() == 1);
}

TEST_CASE("graph6 matches reference encodings") {
  // Encodings produced by an independent graph6 writer.
  CHECK(to_graph6(path_graph(5)) == "DhC");
  CHECK(to_graph6(cycle_graph(6)) == "EhEG");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  const Graph petersen = from_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  CHECK(metrics(petersen).diameter == 2);
  CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("graph6 and edge-list round trips") {
  for (const Graph& g : small_graphs(6)) {
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(from_edge_list(to_edge_list(g)) == g);
  }
  const Graph big = generate(FamilySpec{Family::kTreeDiam10, {}, Attach::kHub, std::nullopt});
  CHECK(from_graph6(to_graph6(big)) == big);
  CHECK(from_graph6(to_graph6(complete_graph(1))) == complete_graph(1));
}

TEST_CASE("malformed graph text is a parse error") {
  for (const char* bad : {"", "C", "C~~", "D!!", "\x7f"}) {
    try {
      from_graph6(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
  CHECK_THROWS_AS(from_edge_list("0 x\n"), Error);
}

TEST_CASE("distances and metrics agree with Floyd-Warshall") {
  for (const Graph& g : small_graphs(6)) {
    const auto d = oracle::all_distances(g);
    const int n = g.order();
    int diam = 0, rad = n;
    for (int u = 0; u < n; ++u) {
      int ecc = 0;
      for (int v = 0; v < n; ++v) {
        REQUIRE(g.distance(u, v) == d[u][v]);
        ecc = std::max(ecc, d[u][v]);
      }
      CHECK(eccentricity(g, u) == ecc);
      diam = std::max(diam, ecc);
      rad = std::min(rad, ecc);
    }
    const Metrics m = metrics(g);
    CHECK(m.diameter == diam);
    CHECK(m.radius == rad);
    auto [a, b] = diametral_pair(g);
    CHECK(d[a][b] == diam);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const Vertex s = g.step_toward(u, v);
        CHECK(d[u][s] == 1);
        CHECK(d[s][v] == d[u][v] - 1);
      }
  }
}

TEST_CASE("maximum matching agrees with brute force") {
  for (const Graph& g : small_graphs(7)) {
    const Matching m = maximum_matching(g);
    REQUIRE(static_cast<int>(m.edges.size()) == oracle::brute_matching(g));
    Mask used = 0;
    for (auto [u, v] : m.edges) {
      CHECK(g.adjacent(u, v));
      CHECK(!(used & (bit(u) | bit(v))));
      used |= bit(u) | bit(v);
    }
    CHECK(m.is_perfect == (2 * static_cast<int>(m.edges.size()) == g.order()));
  }
  // Odd cycles need blossoms.
  CHECK(maximum_matching(cycle_graph(9)).edges.size() == 4);
  CHECK(maximum_matching(generate(FamilySpec{Family::kGk, {3, 2}, Attach::kHub, std::nullopt})).edges.size() == 7);
}

TEST_CASE("caterpillar recognition") {
  for (const Graph& g : small_graphs(7)) CHECK(is_caterpillar(g) == oracle::brute_caterpillar(g));
  for (int n = 1; n <= 11; ++n)
    for (const Graph& t : all_trees(n)) CHECK(is_caterpillar(t) == oracle::brute_caterpillar(t));
  CHECK_FALSE(is_caterpillar(t_hat()));
  CHECK(is_caterpillar(generate(FamilySpec{Family::kCaterpillar, {2, 0, 3, 1}, Attach::kHub, std::nullopt})));
}

TEST_CASE("2-connectivity agrees with vertex deletion") {
  for (const Graph& g : small_graphs(6)) {
    bool expect = g.order() >= 3;
    for (int v = 0; v < g.order() && expect; ++v) expect = oracle::connected_without(g, v);
    CHECK(is_two_connected(g) == expect);
    // Blocks cover every edge exactly once.
    std::size_t covered = 0;
    for (const auto& b : blocks(g)) covered += b.size() == 2 ? 1 : g.induced(b).size();
    CHECK(covered == g.size());
  }
}

TEST_CASE("outerplanar embedding") {
  for (int n = 3; n <= 9; ++n)
    for (const Graph& g : all_two_connected_outerplanar(n)) {
      const auto emb = find_outer_embedding(g);
      REQUIRE(emb.has_value());
      CHECK(static_cast<int>(emb->order.size()) == n);
      for (int i = 0; i < n; ++i) CHECK(g.adjacent(emb->order[i], emb->order[(i + 1) % n]));
      CHECK(emb->chords.size() + n == g.size());
    }
  for (const Graph& g : small_graphs(7)) CHECK(find_outer_embedding(g).has_value() == oracle::brute_outer_cycle(g));
  CHECK_FALSE(find_outer_embedding(complete_graph(4)).has_value());
  CHECK_FALSE(find_outer_embedding(complete_bipartite_graph(2, 3)).has_value());
  CHECK_FALSE(is_outerplanar(complete_graph(4)));
  CHECK(is_outerplanar(t_hat()));
  CHECK(chords_cross(0, 2, 1, 3));
  CHECK_FALSE(chords_cross(0, 2, 2, 4));
}

TEST_CASE("retractions agree with exhaustive search") {
  // C_5 folds onto the subpath 0-1-2 by 3 -> 1, 4 -> 0.
  using V = std::vector<Vertex>;
  const Graph c5 = cycle_graph(5);
  CHECK(verify_retraction(c5, V{0, 1, 2}, V{0, 1, 2, 1, 0}));
  CHECK_FALSE(verify_retraction(c5, V{0, 1, 2}, V{0, 1, 2, 2, 0}));
  CHECK(find_retraction(c5, {0, 1, 2}).has_value());
  CHECK(oracle::brute_retraction(c5, {0, 1, 2}));
  // A non-isometric path is never a retract: C_6 onto 0-1-2-3-4.
  const Graph c6 = cycle_graph(6);
  CHECK_FALSE(find_retraction(c6, {0, 1, 2, 3, 4}).has_value());
  CHECK_FALSE(oracle::brute_retraction(c6, {0, 1, 2, 3, 4}));
  const Graph t = spider_graph({2, 1, 1});
  CHECK(verify_retraction(t, V{0, 1, 2}, V{0, 1, 2, 0, 0}));
  CHECK(verify_retraction(c6, V{0, 1, 2, 3, 4, 5}, V{0, 1, 2, 3, 4, 5}));
  for (const Graph& g : small_graphs(5)) {
    const int n = g.order();
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      const auto keep = to_vertices(s);
      if (keep.size() < 2) continue;
      bool connected_keep = true;
      try {
        g.induced(keep);
      } catch (const Error&) {
        connected_keep = false;
      }
      if (!connected_keep) continue;
      const auto f = find_retraction(g, keep);
      REQUIRE(f.has_value() == oracle::brute_retraction(g, keep));
      if (!f) continue;
      for (Vertex v : keep) CHECK((*f)[v] == v);
      for (auto [u, v] : g.edges()) CHECK(((*f)[u] == (*f)[v] || g.adjacent((*f)[u], (*f)[v])));
    }
  }
}
