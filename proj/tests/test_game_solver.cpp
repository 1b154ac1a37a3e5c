#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "families.hpp"
#include "game.hpp"
#include "oracles.hpp"
#include "solver.hpp"
#include "strategies.hpp"

using namespace hyperopic;

namespace {

std::vector<Graph> small_graphs(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& g : all_connected_graphs(n)) out.push_back(g);
  return out;
}

int copnum(const Graph& g, const VisibilityRule& r) {
  const auto res = cop_number(g, r);
  REQUIRE(res.outcome == Winner::kCopsWin);
  return res.cop_number;
}

}  // namespace

TEST_CASE("visibility rule") {
  const auto h2 = VisibilityRule::hyperopic(2);
  const int near[] = {1, 2};
  const int far[] = {1, 3};
  CHECK_FALSE(is_visible(h2, near));
  CHECK(is_visible(h2, far));
  CHECK(is_visible(VisibilityRule::full_visibility(), near));
  CHECK_FALSE(is_visible(VisibilityRule::zero_visibility(), far));
  CHECK_THROWS_AS(VisibilityRule::hyperopic(0), Error);

  // P_5 with a cop at 0 and k = 2: vertices 1, 2 hidden.
  const std::vector<Vertex> cop{0};
  CHECK(invisible_set(path_graph(5), h2, cop) == (bit(1) | bit(2)));
}

TEST_CASE("observation split partitions candidates") {
  const GameSpec spec(cycle_graph(7), VisibilityRule::hyperopic(2), 1);
  const std::vector<Vertex> cop{0};
  const Mask cand = spec.graph.all_vertices() & ~bit(0);
  const auto parts = observation_split(spec, cop, cand);
  Mask seen = 0;
  for (const auto& p : parts) {
    CHECK(!(seen & p.positions));
    seen |= p.positions;
    if (p.observation.visible) CHECK(p.positions == bit(p.observation.at));
  }
  CHECK(seen == cand);
  CHECK(parts.back().positions == (bit(1) | bit(2) | bit(5) | bit(6)));
}

TEST_CASE("joint moves and placements") {
  const Graph p3 = path_graph(3);
  const std::vector<Vertex> cops{1, 1};
  CHECK(joint_moves(p3, cops).size() == 6);
  CHECK(all_placements(4, 2).size() == 10);
}

TEST_CASE("classic cop number equals explicit-position brute force") {
  for (const Graph& g : small_graphs(5)) {
    int expect = 1;
    while (!oracle::classic_cops_win(g, expect)) ++expect;
    CHECK(copnum(g, VisibilityRule::full_visibility()) == expect);
  }
}

TEST_CASE("belief solver agrees with a naive fixed-point oracle") {
  for (const Graph& g : small_graphs(5)) {
    CAPTURE(to_vertices(g.all_vertices()).size());
    for (int vis : {-1, 1, 2}) {
      const VisibilityRule r = vis < 0 ? VisibilityRule::zero_visibility() : VisibilityRule::hyperopic(vis);
      CHECK(copnum(g, r) == oracle::belief_cop_number(g, vis));
    }
  }
  // A few six-vertex graphs with two cops.
  int checked = 0;
  for (const Graph& g : all_connected_graphs(6)) {
    if (checked++ % 9 != 0) continue;
    for (int vis : {1, 2}) {
      const GameSpec spec(g, VisibilityRule::hyperopic(vis), 2);
      CHECK((solve(spec).winner == Winner::kCopsWin) == oracle::belief_cops_win(g, 2, vis));
    }
  }
}

TEST_CASE("known values") {
  CHECK(copnum(complete_graph(6), VisibilityRule::hyperopic(1)) == 3);
  CHECK(copnum(t_hat(), VisibilityRule::hyperopic(2)) == 2);
  CHECK(copnum(cycle_graph(5), VisibilityRule::hyperopic(1)) == 2);
  CHECK(copnum(path_graph(6), VisibilityRule::hyperopic(2)) == 1);
  CHECK(copnum(path_graph(6), VisibilityRule::zero_visibility()) == 1);
  CHECK(copnum(cycle_graph(4), VisibilityRule::full_visibility()) == 2);
  CHECK(copnum(complete_bipartite_graph(3, 3), VisibilityRule::hyperopic(1)) == 2);
  CHECK(copnum(complete_graph(1), VisibilityRule::hyperopic(1)) == 1);
}

TEST_CASE("g_k example values") {
  auto gk = [](int m, int k) { return generate(FamilySpec{Family::kGk, {m, k}, Attach::kHub, std::nullopt}); };
  // m = 3, k = 1: two cops suffice; the reference solver agrees.
  CHECK(copnum(gk(3, 1), VisibilityRule::hyperopic(1)) == 2);
  CHECK(oracle::belief_cops_win(gk(3, 1), 2, 1));
  CHECK_FALSE(oracle::belief_cops_win(gk(3, 1), 1, 1));
  CHECK(copnum(gk(4, 1), VisibilityRule::hyperopic(1)) == 3);
  CHECK(copnum(gk(5, 1), VisibilityRule::hyperopic(1)) == 3);
  CHECK(copnum(gk(3, 2), VisibilityRule::hyperopic(2)) == 3);
}

TEST_CASE("cop number respects max_cops and the state cap") {
  const auto r = cop_number(complete_graph(6), VisibilityRule::hyperopic(1), {}, 2);
  CHECK(r.outcome == Winner::kRobberWins);
  SolveOptions tiny;
  tiny.state_limit = 10;
  CHECK(cop_number(cycle_graph(8), VisibilityRule::hyperopic(2), tiny).outcome == Winner::kUndecided);
}

TEST_CASE("results do not depend on thread count") {
  for (const Graph& g : small_graphs(5)) {
    SolveOptions one, many;
    one.jobs = 1;
    many.jobs = 4;
    const auto a = cop_number(g, VisibilityRule::hyperopic(2), one);
    const auto b = cop_number(g, VisibilityRule::hyperopic(2), many);
    CHECK(a.cop_number == b.cop_number);
    CHECK(a.placement == b.placement);
    CHECK(a.states_explored == b.states_explored);
  }
}

TEST_CASE("certificates replay through the verifier") {
  for (const Graph& g : small_graphs(5)) {
    for (const auto& rule : {VisibilityRule::full_visibility(), VisibilityRule::hyperopic(1),
                             VisibilityRule::zero_visibility()}) {
      const auto res = cop_number(g, rule);
      REQUIRE(res.outcome == Winner::kCopsWin);
      const GameSpec spec(g, rule, res.cop_number);
      const Certificate cert = extract_certificate(spec, res.placement);
      const VerifyOutcome o = verify_policy(g, rule, certificate_policy(spec, cert));
      CHECK(o.kind == VerifyOutcome::Kind::kWin);
      CHECK(o.rounds <= cert.bound);
      CHECK_NOTHROW(certified_certificate(spec, res.placement));
    }
  }
  // A losing placement has no certificate.
  const GameSpec c4(cycle_graph(4), VisibilityRule::full_visibility(), 1);
  const std::vector<Vertex> one{0};
  CHECK_THROWS_AS(extract_certificate(c4, one), Error);
}
