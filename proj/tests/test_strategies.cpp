#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "families.hpp"
#include "solver.hpp"
#include "strategies.hpp"

using namespace hyperopic;

namespace {

using Kind = VerifyOutcome::Kind;

std::vector<Graph> trees_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& t : all_trees(n)) out.push_back(t);
  return out;
}

bool cops_win(const Graph& g, const VisibilityRule& r, int cops) {
  return solve(GameSpec(g, r, cops)).winner == Winner::kCopsWin;
}

}  // namespace

TEST_CASE("verifier on simple policies") {
  const auto sweep = verify_policy(path_graph(6), VisibilityRule::hyperopic(2), path_sweep_policy(path_graph(6)));
  CHECK(sweep.kind == Kind::kWin);
  CHECK(sweep.rounds == 5);

  // One stationary cop never catches anyone on C_4.
  const auto still = verify_policy(cycle_graph(4), VisibilityRule::hyperopic(1), stationary_policy(cycle_graph(4), {0}));
  CHECK(still.kind == Kind::kEvaded);
  CHECK_FALSE(still.witness.empty());

  VerifyOptions capped;
  capped.node_cap = 1;
  CHECK(verify_policy(path_graph(8), VisibilityRule::zero_visibility(), path_sweep_policy(path_graph(8)), capped).kind ==
        Kind::kTimeout);
}

TEST_CASE("matching policy") {
  const auto k4 = verify_policy(complete_graph(4), VisibilityRule::zero_visibility(), matching_policy(complete_graph(4)));
  CHECK(k4.kind == Kind::kWin);
  CHECK(matching_policy(complete_graph(4)).num_cops() == 2);
  for (const Graph& g : {cycle_graph(5), complete_graph(5)}) {
    const CopPolicy p = matching_policy(g);
    CHECK(p.num_cops() == 3);
    CHECK(verify_policy(g, VisibilityRule::zero_visibility(), p).kind == Kind::kWin);
  }
}

TEST_CASE("matching policy confines the robber to unmatched vertices") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      const MatchingPlan plan = matching_plan(g);
      Mask matched = 0;
      for (auto [u, v] : plan.matching.edges) matched |= bit(u) | bit(v);
      bool confined = true;
      VerifyOptions opt;
      // A robber may step onto a matched vertex, but the oscillating cop
      // lands there next; once the cops have moved, none can remain.
      opt.trace = [&](const TraceEvent& e) { confined &= !(e.after_move & matched); };
      CHECK(verify_policy(g, VisibilityRule::zero_visibility(), matching_policy(g), opt).kind == Kind::kWin);
      CHECK(confined);
    }
}

TEST_CASE("two-cop tree policy") {
  for (const Graph& t : trees_up_to(10)) {
    const auto o = verify_policy(t, VisibilityRule::hyperopic(2), tree_k2_policy(t));
    CHECK(o.kind == Kind::kWin);
    CHECK(o.rounds <= 4 * t.order());
  }
  CHECK_THROWS_AS(tree_k2_policy(cycle_graph(5)), Error);
}

TEST_CASE("two-cop tree policy: the cleared region behind the anchor only grows") {
  // The anchor c1 starts on a leaf. The part of T - c1 holding that leaf is
  // robber-free at all times, and c1 only steps away from the leaf, into the
  // branch holding every possible robber position.
  for (const Graph& t : trees_up_to(10)) {
    if (t.order() < 3) continue;
    const Vertex leaf = tree_k2_policy(t).placement()[0];
    auto behind = [&](Vertex c1) {
      Mask m = 0;
      for (Vertex x = 0; x < t.order(); ++x)
        if (x != c1 && t.distance(leaf, x) < t.distance(leaf, c1) + t.distance(c1, x)) m |= bit(x);
      return c1 == leaf ? Mask{0} : m | bit(leaf);
    };
    bool ok = true;
    VerifyOptions opt;
    opt.trace = [&](const TraceEvent& e) {
      const Vertex from = e.view.cops[0], to = e.move[0];
      ok &= !(e.view.belief & behind(from));
      ok &= !(e.after_move & behind(to));
      if (to != from) {
        ok &= t.distance(leaf, to) == t.distance(leaf, from) + 1;
        ok &= popcount(behind(to)) > popcount(behind(from));
        for (Vertex x : to_vertices(e.view.belief)) ok &= t.distance(to, x) < t.distance(from, x);
      }
    };
    CHECK(verify_policy(t, VisibilityRule::hyperopic(2), tree_k2_policy(t), opt).kind == Kind::kWin);
    CHECK(ok);
  }
}

TEST_CASE("pendant path policy") {
  CHECK(verify_policy(path_graph(10), VisibilityRule::hyperopic(4), pendant_path_policy(path_graph(10), 4)).kind ==
        Kind::kWin);
  const Graph spider = spider_graph({3, 3, 3});
  CHECK(verify_policy(spider, VisibilityRule::hyperopic(4), pendant_path_policy(spider, 4)).kind == Kind::kWin);
  try {
    pendant_path_policy(t_hat(), 5);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
}

TEST_CASE("stationary pair policy") {
  const Graph p12 = path_graph(12);
  const auto tree_mode = stationary_pair_policy(p12, 2, StationaryMode::kTree);
  CHECK(tree_mode.num_cops() == 2);
  CHECK(verify_policy(p12, VisibilityRule::hyperopic(2), tree_mode).kind == Kind::kWin);
  const Graph d10 = generate(FamilySpec{Family::kTreeDiam10, {}, Attach::kHub, std::nullopt});
  const auto big = stationary_pair_policy(d10, 4);
  CHECK(big.num_cops() == 2);
  CHECK(verify_policy(d10, VisibilityRule::hyperopic(4), big).kind == Kind::kWin);
  CHECK_THROWS_AS(stationary_pair_policy(t_hat(), 3, StationaryMode::kTree), Error);
}

TEST_CASE("stationary pair policy keeps the robber visible on general graphs") {
  std::vector<std::pair<Graph, int>> cases{{path_graph(12), 2}, {cycle_graph(11), 1}, {path_graph(9), 1}};
  cases.emplace_back(generate(FamilySpec{Family::kGk, {3, 2}, Attach::kHub, std::nullopt}), 1);
  for (int n = 6; n <= 7; ++n)
    for (const Graph& g : all_connected_graphs(n))
      if (metrics(g).diameter >= 5) cases.emplace_back(g, 2), cases.emplace_back(g, 1);
  for (const auto& [g, k] : cases) {
    const CopPolicy p = stationary_pair_policy(g, k, StationaryMode::kGeneral);
    bool always_visible = true;
    VerifyOptions opt;
    opt.trace = [&](const TraceEvent& e) { always_visible &= e.view.observation.visible; };
    const auto o = verify_policy(g, VisibilityRule::hyperopic(k), p, opt);
    CHECK(o.kind == Kind::kWin);
    CHECK(always_visible);
  }
}

TEST_CASE("near-diameter tree policy") {
  CHECK(verify_policy(t_hat(), VisibilityRule::hyperopic(3), tree_near_diam_policy(t_hat(), 3)).kind == Kind::kWin);
  const Graph spider = spider_graph({3, 3, 3});
  const auto p = tree_near_diam_policy(spider, 4);
  CHECK(p.num_cops() == 3);
  CHECK(verify_policy(spider, VisibilityRule::hyperopic(4), p).kind == Kind::kWin);
  CHECK_THROWS_AS(tree_near_diam_policy(path_graph(12), 3), Error);
}

TEST_CASE("outerplanar policy: territory is robber-free and never shrinks") {
  for (int n = 4; n <= 9; ++n)
    for (const Graph& g : all_two_connected_outerplanar(n)) {
      const auto emb = *find_outer_embedding(g);
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[emb.order[i]] = i;
      // Closed clockwise arc a..b.
      auto size = [&](const PolicyState& s) { return (pos[s[2]] - pos[s[1]] + n) % n + 1; };
      auto open_arc = [&](const PolicyState& s) {
        Mask m = 0;
        for (int p = (pos[s[1]] + 1) % n; p != pos[s[2]]; p = (p + 1) % n) m |= bit(emb.order[p]);
        return m;
      };
      bool monotone = true, clean = true;
      VerifyOptions opt;
      opt.trace = [&](const TraceEvent& e) {
        monotone &= size(e.next_state) >= size(e.state);
        if (e.state[0] == 0) clean &= !(e.view.belief & open_arc(e.state));
      };
      const auto o = verify_policy(g, VisibilityRule::hyperopic(2), outerplanar_k2_policy(g), opt);
      CHECK(o.kind == Kind::kWin);
      CHECK(monotone);
      CHECK(clean);
    }
  CHECK_THROWS_AS(outerplanar_k2_policy(t_hat()), Error);
}

TEST_CASE("winning policies imply solver wins") {
  for (const Graph& t : trees_up_to(8)) {
    CHECK(cops_win(t, VisibilityRule::hyperopic(2), 2));
    const auto p = matching_policy(t);
    if (verify_policy(t, VisibilityRule::zero_visibility(), p).kind == Kind::kWin)
      CHECK(cops_win(t, VisibilityRule::zero_visibility(), p.num_cops()));
  }
  for (const Graph& g : all_two_connected_outerplanar(7)) CHECK(cops_win(g, VisibilityRule::hyperopic(2), 2));
}

TEST_CASE("policies are deterministic values") {
  const Graph t = spider_graph({2, 3, 1});
  const CopPolicy a = tree_k2_policy(t), b = a;
  CHECK(a.placement() == b.placement());
  const auto oa = verify_policy(t, VisibilityRule::hyperopic(2), a);
  const auto ob = verify_policy(t, VisibilityRule::hyperopic(2), tree_k2_policy(t));
  CHECK(oa.rounds == ob.rounds);
  CHECK(oa.nodes == ob.nodes);
}
