#include "audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "families.hpp"
#include "graph_io.hpp"

namespace hyperopic {

namespace {

using Task = std::function<Json()>;

struct Context {
  AuditOptions options;
  SolveOptions solve;

  CopnumRecord copnum(const Graph& g, const VisibilityRule& rule, int max_cops = 0) const {
    return cached_cop_number(g, rule, solve, max_cops, options.cache);
  }
};

Json base(const std::string& claim, const std::string& instance, const Graph& g) {
  return {{"claim", claim}, {"instance", instance}, {"graph6", to_graph6(g)}, {"n", g.order()}};
}

void set_verdict(Json& j, bool ok) { j["verdict"] = ok ? "pass" : "violation"; }

bool undecided(const CopnumRecord& r) { return r.outcome == Winner::kUndecided; }

// Observed cop number; "> m" when only a lower bound is known.
Json observed(const CopnumRecord& r) {
  if (r.outcome == Winner::kCopsWin) return r.cop_number;
  if (r.outcome == Winner::kRobberWins) return "> " + std::to_string(r.max_cops);
  return "undecided";
}

Json rule_tag(const VisibilityRule& r) {
  return r.kind == VisibilityRule::Kind::kHyperopic ? Json(r.name() + "(" + std::to_string(r.k) + ")")
                                                    : Json(r.name());
}

std::vector<Graph> connected_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& g : all_connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

std::vector<std::pair<std::string, Graph>> trees_up_to(int n_max) {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 1; n <= n_max; ++n) {
    int i = 0;
    for (auto& t : all_trees(n)) out.emplace_back("tree n=" + std::to_string(n) + " #" + std::to_string(i++), std::move(t));
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> outerplanar_range(int lo, int hi) {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = lo; n <= hi; ++n) {
    int i = 0;
    for (auto& g : all_two_connected_outerplanar(n))
      out.emplace_back("outerplanar n=" + std::to_string(n) + " #" + std::to_string(i++), std::move(g));
  }
  return out;
}

std::string graph_label(const Graph& g) { return "graph " + to_graph6(g); }

// A record of one policy run, including the solver cross-check.
Json policy_record(const Context& ctx, const std::string& claim, const std::string& label, const Graph& g,
                   const VisibilityRule& rule, const CopPolicy& policy, int expect_cops,
                   int max_rounds = 0) {
  Json j = base(claim, label, g);
  j["rule"] = rule_tag(rule);
  const VerifyOutcome o = verify_policy(g, rule, policy);
  j["observed"] = to_json(o, policy.name(), policy.num_cops());
  j["expected"] = {{"outcome", "win"}, {"cops", expect_cops}};
  if (o.kind == VerifyOutcome::Kind::kTimeout) {
    j["verdict"] = "undecided";
    return j;
  }
  bool ok = o.kind == VerifyOutcome::Kind::kWin && policy.num_cops() == expect_cops;
  if (ok && max_rounds > 0) {
    j["expected"]["max_rounds"] = max_rounds;
    ok = o.rounds <= max_rounds;
  }
  if (ok) {
    // A winning policy must agree with the exact solver.
    const SolveResult s = solve(GameSpec(g, rule, policy.num_cops()), ctx.solve);
    j["solver"] = winner_name(s.winner);
    if (s.winner == Winner::kUndecided) {
      j["verdict"] = "undecided";
      return j;
    }
    ok = s.winner == Winner::kCopsWin;
  }
  set_verdict(j, ok);
  return j;
}

// ---------------------------------------------------------------------------

std::vector<Task> prop_classes(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (int k = 1; k <= 4; ++k) {
    const auto rule = VisibilityRule::hyperopic(k);
    auto add = [&](std::string label, Graph g, int expect) {
      tasks.push_back([=, &ctx] {
        Json j = base("prop-classes", label, g);
        j["rule"] = rule_tag(rule);
        const auto r = ctx.copnum(g, rule);
        j["expected"] = expect;
        j["observed"] = observed(r);
        if (undecided(r)) j["verdict"] = "undecided";
        else set_verdict(j, r.outcome == Winner::kCopsWin && r.cop_number == expect);
        return j;
      });
    };
    for (int n = 1; n <= std::min(n_max, 12); ++n) add("P_" + std::to_string(n), path_graph(n), 1);
    for (int n = 3; n <= std::min(n_max, 10); ++n) add("C_" + std::to_string(n), cycle_graph(n), 2);
    for (int n = 1; n <= std::min(n_max, 8); ++n) add("K_" + std::to_string(n), complete_graph(n), (n + 1) / 2);
  }
  return tasks;
}

std::vector<Task> bipartite(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (int k : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (int n = m; n <= std::min(n_max, 5); ++n) {
        const Graph g = complete_bipartite_graph(m, n);
        const auto rule = VisibilityRule::hyperopic(k);
        const std::string label = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
        tasks.push_back([=, &ctx] {
          Json j = base("bipartite", label, g);
          j["rule"] = rule_tag(rule);
          const auto r = ctx.copnum(g, rule);
          j["expected"] = m;
          j["observed"] = observed(r);
          if (undecided(r)) j["verdict"] = "undecided";
          else set_verdict(j, r.outcome == Winner::kCopsWin && r.cop_number == m);
          return j;
        });
      }
  return tasks;
}

std::vector<Task> monotonicity(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const Graph& g : connected_up_to(n_max)) {
    tasks.push_back([=, &ctx] {
      Json j = base("monotonicity", graph_label(g), g);
      const std::vector<VisibilityRule> chain{VisibilityRule::full_visibility(), VisibilityRule::hyperopic(1),
                                              VisibilityRule::hyperopic(2), VisibilityRule::hyperopic(3),
                                              VisibilityRule::zero_visibility()};
      Json values = Json::object();
      std::vector<int> nums;
      bool any_undecided = false;
      for (const auto& rule : chain) {
        const auto r = ctx.copnum(g, rule);
        values[rule_tag(rule).get<std::string>()] = observed(r);
        any_undecided |= undecided(r);
        nums.push_back(r.cop_number);
      }
      j["expected"] = "classic <= hyperopic(1) <= hyperopic(2) <= hyperopic(3) <= zero";
      j["observed"] = values;
      if (any_undecided) j["verdict"] = "undecided";
      else set_verdict(j, std::is_sorted(nums.begin(), nums.end()));
      return j;
    });
  }
  return tasks;
}

std::vector<Task> zerovis_eq(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const Graph& g : connected_up_to(n_max)) {
    const int diam = metrics(g).diameter;
    tasks.push_back([=, &ctx] {
      Json j = base("zerovis-eq", graph_label(g), g);
      j["diameter"] = diam;
      const auto zero = ctx.copnum(g, VisibilityRule::zero_visibility());
      Json values = {{"zero", observed(zero)}};
      bool ok = true, any_undecided = undecided(zero);
      for (int k = std::max(1, diam); k <= 4; ++k) {
        const auto r = ctx.copnum(g, VisibilityRule::hyperopic(k));
        values["hyperopic(" + std::to_string(k) + ")"] = observed(r);
        any_undecided |= undecided(r);
        ok &= r.cop_number == zero.cop_number;
      }
      j["expected"] = "hyperopic(k) == zero for every k >= diameter";
      j["observed"] = values;
      if (any_undecided) j["verdict"] = "undecided";
      else set_verdict(j, ok);
      return j;
    });
  }
  return tasks;
}

std::vector<Task> diam_bound(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const Graph& g : connected_up_to(n_max)) {
    const int diam = metrics(g).diameter;
    for (int k : {1, 2}) {
      if (diam < 2 * k + 1) continue;
      tasks.push_back([=, &ctx] {
        Json j = base("diam-bound", graph_label(g), g);
        j["rule"] = rule_tag(VisibilityRule::hyperopic(k));
        j["diameter"] = diam;
        const auto classic = ctx.copnum(g, VisibilityRule::full_visibility());
        if (undecided(classic)) {
          j["verdict"] = "undecided";
          return j;
        }
        const int bound = classic.cop_number + 2;
        const auto r = ctx.copnum(g, VisibilityRule::hyperopic(k), bound);
        j["expected"] = "<= " + std::to_string(bound) + " (classic + 2)";
        j["observed"] = {{"classic", classic.cop_number}, {"hyperopic", observed(r)}};
        if (undecided(r)) j["verdict"] = "undecided";
        else set_verdict(j, r.outcome == Winner::kCopsWin);
        return j;
      });
    }
  }
  return tasks;
}

std::vector<Task> retract(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const Graph& g : connected_up_to(n_max)) {
    const int n = g.order();
    if (n < 3) continue;
    for (Mask s = 1; s < (Mask{1} << n) - 1; ++s) {
      if (popcount(s) < 2) continue;
      const auto keep = to_vertices(s);
      const auto f = find_retraction(g, keep);
      if (!f) continue;
      tasks.push_back([=, &ctx] {
        const Graph h = g.induced(keep);
        Json j = base("retract", graph_label(g), g);
        j["retract"] = {{"vertices", keep}, {"graph6", to_graph6(h)}, {"map", *f}};
        j["expected"] = "c(H) <= c(G) for hyperopic(1), hyperopic(2)";
        Json values = Json::object();
        bool ok = true, any_undecided = false;
        for (int k : {1, 2}) {
          const auto rule = VisibilityRule::hyperopic(k);
          const auto cg = ctx.copnum(g, rule);
          const auto ch = ctx.copnum(h, rule);
          values[rule_tag(rule).get<std::string>()] = {{"G", observed(cg)}, {"H", observed(ch)}};
          any_undecided |= undecided(cg) || undecided(ch);
          ok &= ch.cop_number <= cg.cop_number;
        }
        j["observed"] = values;
        if (any_undecided) j["verdict"] = "undecided";
        else set_verdict(j, ok);
        return j;
      });
    }
  }
  return tasks;
}

std::vector<Task> caterpillar(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, t] : trees_up_to(n_max)) {
    tasks.push_back([=, &ctx] {
      Json j = base("caterpillar", label, t);
      j["kind"] = "tree";
      const bool cat = is_caterpillar(t);
      j["caterpillar"] = cat;
      j["expected"] = "cop number 1 iff caterpillar, k in {2,3}";
      Json values = Json::object();
      bool ok = true, any_undecided = false;
      for (int k : {2, 3}) {
        const auto rule = VisibilityRule::hyperopic(k);
        const auto r = ctx.copnum(t, rule, 1);
        values[rule_tag(rule).get<std::string>()] = observed(r);
        any_undecided |= undecided(r);
        ok &= (r.outcome == Winner::kCopsWin) == cat;
      }
      j["observed"] = values;
      if (any_undecided) j["verdict"] = "undecided";
      else set_verdict(j, ok);
      return j;
    });
  }
  for (const Graph& g : connected_up_to(std::min(n_max, 6))) {
    if (g.is_tree()) continue;  // trees are covered above
    tasks.push_back([=, &ctx] {
      Json j = base("caterpillar", graph_label(g), g);
      j["kind"] = "graph";
      const auto r = ctx.copnum(g, VisibilityRule::hyperopic(2), 1);
      j["caterpillar"] = is_caterpillar(g);
      j["expected"] = "cop number 1 only for caterpillars";
      j["observed"] = observed(r);
      if (undecided(r)) j["verdict"] = "undecided";
      else set_verdict(j, r.outcome != Winner::kCopsWin || is_caterpillar(g));
      return j;
    });
  }
  return tasks;
}

std::vector<Task> matching_bound(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const Graph& g : connected_up_to(n_max)) {
    tasks.push_back([=, &ctx] {
      const auto plan = matching_plan(g);
      const int alpha = static_cast<int>(plan.matching.edges.size());
      const int expect = alpha + (plan.remainder.empty() ? 0 : 1);
      Json j = policy_record(ctx, "matching-bound", graph_label(g), g, VisibilityRule::zero_visibility(),
                             matching_policy(g), expect);
      j["matching_size"] = alpha;
      if (j["verdict"] == "pass" && expect > (g.order() + 1) / 2) j["verdict"] = "violation";
      return j;
    });
  }
  return tasks;
}

std::vector<Task> tree2(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, t] : trees_up_to(n_max))
    tasks.push_back([=, &ctx] {
      return policy_record(ctx, "tree2", label, t, VisibilityRule::hyperopic(2), tree_k2_policy(t), 2,
                           4 * t.order());
    });
  return tasks;
}

std::vector<Task> pendant(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, t] : trees_up_to(n_max))
    for (int k = 2; k <= 5; ++k) {
      if (!find_pendant_path(t, k - 1)) continue;
      tasks.push_back([=, &ctx] {
        return policy_record(ctx, "pendant", label, t, VisibilityRule::hyperopic(k),
                             pendant_path_policy(t, k), 2);
      });
    }
  return tasks;
}

std::vector<Task> tree_lemmas(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, t] : trees_up_to(n_max)) {
    const int d = metrics(t).diameter;
    for (int k : {3, 4}) {
      if (d >= 2 * k - 1) {
        tasks.push_back([=, &ctx] {
          Json j = policy_record(ctx, "tree-lemmas", label, t, VisibilityRule::hyperopic(k),
                                 stationary_pair_policy(t, k, StationaryMode::kTree), 2);
          j["part"] = "diameter >= 2k-1";
          return j;
        });
      } else if (d >= 2 * k - 3 && d <= 2 * k - 2) {
        tasks.push_back([=, &ctx] {
          Json j = policy_record(ctx, "tree-lemmas", label, t, VisibilityRule::hyperopic(k),
                                 tree_near_diam_policy(t, k), 3);
          j["part"] = "2k-3 <= diameter <= 2k-2";
          return j;
        });
      }
    }
    // Middle range: the bound only, by exact search on small trees.
    if (t.order() > 10) continue;
    for (int k : {5, 6}) {
      if (d < k + 1 || d > 2 * k - 4) continue;
      tasks.push_back([=, &ctx] {
        const int bound = 2 + (2 * k - d) / 4;
        const auto rule = VisibilityRule::hyperopic(k);
        Json j = base("tree-lemmas", label, t);
        j["part"] = "k+1 <= diameter <= 2k-4";
        j["rule"] = rule_tag(rule);
        j["diameter"] = d;
        const auto r = ctx.copnum(t, rule, bound);
        j["expected"] = "<= " + std::to_string(bound);
        j["observed"] = observed(r);
        if (undecided(r)) j["verdict"] = "undecided";
        else set_verdict(j, r.outcome == Winner::kCopsWin);
        return j;
      });
    }
  }
  return tasks;
}

std::vector<Task> tfamily_diam(const Context&, int n_max) {
  std::vector<Task> tasks;
  for (int m = 1; m <= std::min(n_max, 3); ++m)
    tasks.push_back([=] {
      const Graph t = generate(FamilySpec{Family::kTFamily, {m}, Attach::kHub, std::nullopt});
      const Graph alt = generate(FamilySpec{Family::kTFamily, {m}, Attach::kEccentricLeaf, std::nullopt});
      Json j = base("tfamily-diam", "t_family m=" + std::to_string(m), t);
      const int d = metrics(t).diameter;
      j["expected"] = ">= " + std::to_string(4 * m);
      j["observed"] = d;
      j["eccentric_leaf_diameter"] = metrics(alt).diameter;
      j["weaker_form_holds"] = d >= 4 * (m - 1);
      j["verdict"] = d >= 4 * m ? "pass" : "violation-documented";
      return j;
    });
  return tasks;
}

std::vector<Task> diam4_bound(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, t] : trees_up_to(n_max)) {
    const int d = metrics(t).diameter;
    if (d < 4) continue;
    tasks.push_back([=, &ctx] {
      Json j = base("diam4-bound", label, t);
      j["diameter"] = d;
      const int bound = d / 4;
      const auto r = ctx.copnum(t, VisibilityRule::zero_visibility());
      j["expected"] = "zero-visibility cop number <= " + std::to_string(bound);
      j["observed"] = observed(r);
      if (undecided(r)) j["verdict"] = "undecided";
      else j["verdict"] = r.cop_number <= bound ? "pass" : "violation-documented";
      return j;
    });
  }
  return tasks;
}

std::vector<Task> outerplanar2(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, g] : outerplanar_range(4, std::min(n_max, 10)))
    tasks.push_back([=, &ctx] {
      Json j = policy_record(ctx, "outerplanar2", label, g, VisibilityRule::hyperopic(2),
                             outerplanar_k2_policy(g), 2);
      j["kind"] = "2-connected";
      return j;
    });
  // Outerplanar graphs with cut vertices: exact bound only.
  for (const Graph& g : connected_up_to(std::min(n_max, 7))) {
    if (g.order() < 2 || is_two_connected(g) || !is_outerplanar(g)) continue;
    tasks.push_back([=, &ctx] {
      Json j = base("outerplanar2", graph_label(g), g);
      j["kind"] = "with cut vertices";
      const auto r = ctx.copnum(g, VisibilityRule::hyperopic(2), 2);
      j["expected"] = "<= 2";
      j["observed"] = observed(r);
      if (undecided(r)) j["verdict"] = "undecided";
      else set_verdict(j, r.outcome == Winner::kCopsWin);
      return j;
    });
  }
  return tasks;
}

std::vector<Task> outerplanar_sqrt(const Context& ctx, int n_max) {
  std::vector<Task> tasks;
  for (const auto& [label, g] : outerplanar_range(5, std::min(n_max, 10)))
    tasks.push_back([=, &ctx] {
      const int bound = static_cast<int>(std::floor(std::sqrt(2.0 * g.order())));
      const auto rule = VisibilityRule::hyperopic(3);
      Json j = base("outerplanar-sqrt", label, g);
      j["rule"] = rule_tag(rule);
      const auto r = ctx.copnum(g, rule, bound);
      j["expected"] = "<= sqrt(2n) = " + std::to_string(std::sqrt(2.0 * g.order()));
      j["observed"] = observed(r);
      if (undecided(r)) j["verdict"] = "undecided";
      else set_verdict(j, r.outcome == Winner::kCopsWin);
      return j;
    });
  return tasks;
}

struct ClaimDef {
  std::string id;
  int default_n;
  std::vector<Task> (*build)(const Context&, int);
};

const std::vector<ClaimDef>& claim_defs() {
  static const std::vector<ClaimDef> defs{
      {"prop-classes", 12, prop_classes},   {"bipartite", 5, bipartite},
      {"monotonicity", 6, monotonicity},    {"zerovis-eq", 6, zerovis_eq},
      {"diam-bound", 7, diam_bound},        {"retract", 5, retract},
      {"caterpillar", 9, caterpillar},      {"matching-bound", 7, matching_bound},
      {"tree2", 12, tree2},                 {"pendant", 10, pendant},
      {"tree-lemmas", 12, tree_lemmas},     {"tfamily-diam", 3, tfamily_diam},
      {"diam4-bound", 8, diam4_bound},      {"outerplanar2", 10, outerplanar2},
      {"outerplanar-sqrt", 9, outerplanar_sqrt},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& audit_claims() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : claim_defs()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

bool is_documented_discrepancy(const std::string& claim) {
  return claim == "tfamily-diam" || claim == "diam4-bound";
}

Json to_json(const AuditSummary& s) {
  return {{"claim", s.claim},       {"instances", s.instances}, {"pass", s.passed},
          {"violations", s.violations}, {"undecided", s.undecided}, {"verdict", s.verdict}};
}

AuditSummary run_audit(const std::string& claim, const AuditOptions& options,
                       const std::function<void(const Json&)>& emit) {
  const auto& defs = claim_defs();
  auto def = std::find_if(defs.begin(), defs.end(), [&](const ClaimDef& d) { return d.id == claim; });
  if (def == defs.end()) fail(ErrorCode::kInvalidArgument, "unknown claim '" + claim + "'");

  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(jobs, 1);
  Context ctx{options, SolveOptions{}};
  ctx.solve.jobs = jobs > 1 ? 1 : options.jobs;

  const int n_max = options.n_max > 0 ? options.n_max : def->default_n;
  std::vector<Task> tasks = def->build(ctx, n_max);
  std::vector<Json> results(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const Error& e) {
        results[i] = {{"claim", claim}, {"verdict", e.code() == ErrorCode::kLimit ? "undecided" : "error"},
                      {"error", e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs && t < static_cast<int>(tasks.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  AuditSummary s;
  s.claim = claim;
  s.documented = is_documented_discrepancy(claim);
  for (const Json& r : results) {
    ++s.instances;
    const std::string v = r.value("verdict", "error");
    if (v == "pass") ++s.passed;
    else if (v == "undecided") ++s.undecided;
    else ++s.violations;
    emit(r);
  }
  if (s.violations > 0) s.verdict = s.documented ? "violation-documented" : "violation";
  else if (s.undecided > 0) s.verdict = "undecided";
  else s.verdict = "pass";
  return s;
}

std::optional<std::vector<Vertex>> find_retraction(const Graph& g, const std::vector<Vertex>& keep) {
  const int n = g.order();
  std::vector<Vertex> f(n, -1);
  Mask kept = 0;
  for (Vertex v : keep) {
    f[v] = v;
    kept |= bit(v);
  }
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!(kept & bit(v))) free.push_back(v);
  auto consistent = [&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (f[w] != -1 && f[w] != f[v] && !g.adjacent(f[w], f[v])) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == free.size()) return true;
    const Vertex v = free[i];
    for (Vertex target : keep) {
      f[v] = target;
      if (consistent(v) && self(self, i + 1)) return true;
    }
    f[v] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return f;
}

bool is_outerplanar(const Graph& g) {
  for (const auto& b : blocks(g)) {
    if (b.size() < 3) continue;
    if (!find_outer_embedding(g.induced(b))) return false;
  }
  return true;
}

}  // namespace hyperopic
