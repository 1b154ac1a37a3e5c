#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "strategies.hpp"

namespace hyperopic {

std::string outcome_name(VerifyOutcome::Kind k) {
  switch (k) {
    case VerifyOutcome::Kind::kWin: return "win";
    case VerifyOutcome::Kind::kEvaded: return "evaded";
    case VerifyOutcome::Kind::kTimeout: return "timeout";
  }
  return "?";
}

namespace {

struct Node {
  PolicyState state;
  std::vector<Vertex> cops;
  Mask belief = 0;
  Observation observation;
};

std::string key_of(const Node& n) {
  std::string k;
  k.reserve(4 * (n.state.size() + n.cops.size() + 2) + 8 + 2);
  auto put = [&](const void* p, std::size_t len) { k.append(static_cast<const char*>(p), len); };
  auto put32 = [&](std::int32_t v) { put(&v, sizeof v); };
  put32(static_cast<std::int32_t>(n.state.size()));
  for (auto v : n.state) put32(v);
  for (auto c : n.cops) put32(c);
  put(&n.belief, sizeof n.belief);
  put32(n.observation.visible ? n.observation.at : -1);
  return k;
}

constexpr int kOnStack = -1;

struct Frame {
  std::string key;
  Node node;
  std::vector<Node> children;
  std::size_t next = 0;
  int best = 0;  // max child value so far
  bool leaf = false;
};

}  // namespace

VerifyOutcome verify_policy(const Graph& g, const VisibilityRule& rule, const CopPolicy& policy,
                            const VerifyOptions& options) {
  const int m = policy.num_cops();
  const GameSpec spec(g, rule, m);
  VerifyOutcome out;

  const std::vector<Vertex> start = policy.placement();
  if (static_cast<int>(start.size()) != m)
    fail(ErrorCode::kInternal, "policy placement has the wrong number of cops");
  for (Vertex c : start)
    if (c < 0 || c >= g.order()) fail(ErrorCode::kInternal, "policy placement out of range");

  std::unordered_map<std::string, int> memo;

  // Expands a node: asks the policy for its move and enumerates every
  // observation-consistent successor.
  auto expand = [&](Frame& f, int depth) {
    const PolicyView view{f.node.cops, f.node.observation, f.node.belief};
    PolicyStep step = policy.step(f.node.state, view);
    if (static_cast<int>(step.cops.size()) != m)
      fail(ErrorCode::kInternal, policy.name() + ": move has the wrong number of cops");
    for (int i = 0; i < m; ++i) {
      Vertex from = f.node.cops[i], to = step.cops[i];
      if (to < 0 || to >= g.order() || (to != from && !g.adjacent(from, to)))
        fail(ErrorCode::kInternal, policy.name() + ": illegal cop move");
    }
    const Mask left = f.node.belief & ~cop_mask(step.cops);
    if (options.trace) options.trace({f.node.state, view, step.cops, step.state, left, depth});
    if (left == 0) {
      f.leaf = true;
      return;
    }
    for (const auto& part : observation_split(spec, step.cops, left)) {
      const Mask next = g.closed_neighborhood(part.positions) & ~cop_mask(step.cops);
      if (next == 0) continue;  // forced onto a cop: captured
      for (const auto& seen : observation_split(spec, step.cops, next))
        f.children.push_back({step.state, step.cops, seen.positions, seen.observation});
    }
    if (f.children.empty()) f.leaf = true;
  };

  std::vector<Frame> stack;
  int worst = 0;

  // Initial observation splits the robber's possible start positions.
  std::vector<Node> roots;
  for (const auto& part :
       observation_split(spec, start, g.all_vertices() & ~cop_mask(start)))
    roots.push_back({policy.initial_state(), start, part.positions, part.observation});

  for (Node& root : roots) {
    std::string rk = key_of(root);
    if (auto it = memo.find(rk); it != memo.end()) {
      worst = std::max(worst, it->second);
      continue;
    }
    stack.push_back({std::move(rk), std::move(root), {}, 0, 0, false});
    memo[stack.back().key] = kOnStack;
    ++out.nodes;
    expand(stack.back(), 0);

    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.leaf || top.next == top.children.size()) {
        const int value = top.leaf && top.children.empty() ? 1 : top.best + 1;
        memo[top.key] = value;
        stack.pop_back();
        if (stack.empty()) {
          worst = std::max(worst, value);
        } else {
          stack.back().best = std::max(stack.back().best, value);
        }
        continue;
      }
      Node child = std::move(top.children[top.next++]);
      std::string ck = key_of(child);
      auto it = memo.find(ck);
      if (it != memo.end()) {
        if (it->second == kOnStack) {
          out.kind = VerifyOutcome::Kind::kEvaded;
          std::size_t from = 0;
          while (stack[from].key != ck) ++from;
          for (std::size_t i = from; i < stack.size(); ++i)
            out.witness.push_back({stack[i].node.cops, stack[i].node.belief});
          return out;
        }
        top.best = std::max(top.best, it->second);
        continue;
      }
      if (out.nodes >= options.node_cap) {
        out.kind = VerifyOutcome::Kind::kTimeout;
        return out;
      }
      const int depth = static_cast<int>(stack.size());
      stack.push_back({std::move(ck), std::move(child), {}, 0, 0, false});
      memo[stack.back().key] = kOnStack;
      ++out.nodes;
      expand(stack.back(), depth);
    }
  }
  out.kind = VerifyOutcome::Kind::kWin;
  out.rounds = worst;
  return out;
}

// ---------------------------------------------------------------------------
// Reference policies

namespace {

class PathSweep final : public PolicyImpl {
 public:
  explicit PathSweep(const Graph& g) : g_(g) {
    if (!g.is_tree()) fail(ErrorCode::kPrecondition, "path sweep needs a path");
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > 2) fail(ErrorCode::kPrecondition, "path sweep needs a path");
    end_ = 0;
    while (g.degree(end_) > 1) ++end_;
    far_ = end_;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.distance(end_, v) > g.distance(end_, far_)) far_ = v;
  }
  std::string name() const override { return "path-sweep"; }
  int num_cops() const override { return 1; }
  std::vector<Vertex> placement() const override { return {end_}; }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    return {{g_.step_toward(v.cops[0], far_)}, s};
  }

 private:
  Graph g_;
  Vertex end_ = 0, far_ = 0;
};

class Stationary final : public PolicyImpl {
 public:
  explicit Stationary(std::vector<Vertex> cops) : cops_(std::move(cops)) {}
  std::string name() const override { return "stationary"; }
  int num_cops() const override { return static_cast<int>(cops_.size()); }
  std::vector<Vertex> placement() const override { return cops_; }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override { return {v.cops, s}; }

 private:
  std::vector<Vertex> cops_;
};

// Replays a solver certificate. The certificate is keyed by sorted cop
// lists; labelled cops take the targets in sorted order.
class CertificatePolicy final : public PolicyImpl {
 public:
  CertificatePolicy(int cops, Certificate cert) : cops_(cops), cert_(std::move(cert)) {}
  std::string name() const override { return "certificate"; }
  int num_cops() const override { return cops_; }
  std::vector<Vertex> placement() const override { return cert_.placement; }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    return {apply(v.cops, v.belief), s};
  }

  std::vector<Vertex> apply(const std::vector<Vertex>& cops, Mask belief) const {
    std::vector<int> order(cops.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cops[a] < cops[b]; });
    CopSet sorted;
    for (int i : order) sorted.push_back(cops[i]);
    auto it = cert_.moves.find(BeliefState{sorted, belief});
    if (it == cert_.moves.end()) fail(ErrorCode::kInternal, "certificate has no move for this state");
    std::vector<Vertex> next(cops.size());
    for (std::size_t r = 0; r < order.size(); ++r) next[order[r]] = it->second[r];
    return next;
  }

 private:
  int cops_;
  Certificate cert_;
};

}  // namespace

CopPolicy path_sweep_policy(const Graph& path) {
  return CopPolicy(std::make_shared<PathSweep>(path));
}

CopPolicy stationary_policy(const Graph& g, std::vector<Vertex> cops) {
  for (Vertex c : cops)
    if (c < 0 || c >= g.order()) fail(ErrorCode::kInvalidArgument, "cop vertex out of range");
  return CopPolicy(std::make_shared<Stationary>(std::move(cops)));
}

CopPolicy certificate_policy(const GameSpec& spec, Certificate cert) {
  return CopPolicy(std::make_shared<CertificatePolicy>(spec.num_cops, std::move(cert)));
}

Certificate certified_certificate(const GameSpec& spec, std::span<const Vertex> placement,
                                  const SolveOptions& options) {
  Certificate cert = extract_certificate(spec, placement, options);
  const VerifyOutcome replay = verify_policy(spec.graph, spec.rule, certificate_policy(spec, cert));
  if (replay.kind != VerifyOutcome::Kind::kWin)
    fail(ErrorCode::kInternal, "certificate replay did not win");
  if (replay.rounds > cert.bound) fail(ErrorCode::kInternal, "certificate replay exceeds its bound");
  return cert;
}

// ---------------------------------------------------------------------------
// Matching strategy

MatchingPlan matching_plan(const Graph& g) {
  MatchingPlan plan;
  plan.matching = maximum_matching(g);
  Mask matched = 0;
  for (auto [u, v] : plan.matching.edges) matched |= bit(u) | bit(v);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(matched & bit(v))) plan.remainder.push_back(v);
  const auto& rest = plan.remainder;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Vertex from = rest[i], to = rest[(i + 1) % rest.size()];
    auto seg = g.shortest_path(from, to);
    plan.sweep.insert(plan.sweep.end(), seg.begin(), seg.end() - 1);
  }
  if (rest.size() == 1) plan.sweep = {rest[0]};
  return plan;
}

namespace {

class MatchingPolicy final : public PolicyImpl {
 public:
  explicit MatchingPolicy(const Graph& g) : plan_(matching_plan(g)) {}
  std::string name() const override { return "matching"; }
  int num_cops() const override {
    return static_cast<int>(plan_.matching.edges.size()) + (plan_.remainder.empty() ? 0 : 1);
  }
  std::vector<Vertex> placement() const override {
    std::vector<Vertex> cops;
    for (auto [u, v] : plan_.matching.edges) cops.push_back(u);
    if (!plan_.sweep.empty()) cops.push_back(plan_.sweep[0]);
    return cops;
  }
  PolicyState initial_state() const override { return {0}; }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    std::vector<Vertex> next(v.cops.size());
    const auto& edges = plan_.matching.edges;
    for (std::size_t i = 0; i < edges.size(); ++i)
      next[i] = v.cops[i] == edges[i].first ? edges[i].second : edges[i].first;
    PolicyState ns = s;
    if (!plan_.sweep.empty()) {
      ns[0] = static_cast<std::int32_t>((s[0] + 1) % plan_.sweep.size());
      next.back() = plan_.sweep[ns[0]];
    }
    return {next, ns};
  }

 private:
  MatchingPlan plan_;
};

}  // namespace

CopPolicy matching_policy(const Graph& g) {
  if (!g.fits_mask()) fail(ErrorCode::kInvalidArgument, "graph too large");
  return CopPolicy(std::make_shared<MatchingPolicy>(g));
}

}  // namespace hyperopic
