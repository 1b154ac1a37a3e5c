#include <algorithm>

#include "strategies.hpp"

namespace hyperopic {

namespace {

void require_tree(const Graph& t, const char* who) {
  if (!t.is_tree()) fail(ErrorCode::kPrecondition, std::string(who) + " needs a tree");
  if (!t.fits_mask()) fail(ErrorCode::kInvalidArgument, "graph too large");
}

// Component of T - from that contains its neighbour nb.
Mask branch(const Graph& t, Vertex from, Vertex nb) {
  Mask m = 0;
  for (Vertex x = 0; x < t.order(); ++x)
    if (t.distance(nb, x) < t.distance(from, x)) m |= bit(x);
  return m;
}

// Neighbours of `at` whose branch still holds a possible robber position.
std::vector<Vertex> live_branches(const Graph& t, Vertex at, Mask belief, Vertex skip = -1) {
  std::vector<Vertex> out;
  for (Vertex z : t.neighbors(at))
    if (z != skip && (branch(t, at, z) & belief)) out.push_back(z);
  return out;
}

Vertex next_after(const std::vector<Vertex>& options, Vertex cursor) {
  for (Vertex z : options)
    if (z > cursor) return z;
  return options.front();
}

// Single searcher on a tree. Walks into the only branch that can hold the
// robber; when several can, it parks on a hub and visits the branch roots
// one after another in ascending order, returning to the hub in between.
struct Chase {
  Vertex hub = -1;
  Vertex cursor = -1;

  Vertex step(const Graph& t, Vertex at, Mask belief) {
    const auto live = live_branches(t, at, belief);
    if (live.empty()) return at;
    if (live.size() == 1) {
      if (live[0] != hub) hub = cursor = -1;
      return live[0];
    }
    if (hub != -1 && at != hub && (branch(t, at, hub) & belief)) return hub;
    if (hub != at) {
      hub = at;
      cursor = -1;
    }
    cursor = next_after(live, cursor);
    return cursor;
  }
};

// ---------------------------------------------------------------------------

// c1 is the anchor. Once only one branch at the anchor can hold the robber,
// c2 steps onto its root and c1 follows, so the region behind c1 stays clean.
// With several candidate branches c2 probes their roots in ascending order.
class TreeK2 final : public PolicyImpl {
 public:
  explicit TreeK2(const Graph& t) : t_(t) {
    if (t.order() == 1) {
      start_ = {0, 0};
      return;
    }
    Vertex leaf = 0;
    while (t.degree(leaf) != 1) ++leaf;
    start_ = {leaf, t.neighbors(leaf)[0]};
  }
  std::string name() const override { return "tree-k2"; }
  int num_cops() const override { return 2; }
  std::vector<Vertex> placement() const override { return start_; }
  PolicyState initial_state() const override { return {-1}; }

  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    Vertex c1 = v.cops[0], c2 = v.cops[1], cursor = s[0];
    const auto live = live_branches(t_, c1, v.belief);
    if (live.size() == 1) {
      const Vertex z = live[0];
      if (c2 == z) {
        // Advance the anchor onto z.
        const auto ahead = live_branches(t_, z, v.belief, c1);
        c1 = z;
        if (!ahead.empty()) {
          c2 = ahead.front();
          cursor = ahead.size() > 1 ? c2 : -1;
        }
      } else {
        c2 = c2 == c1 ? z : c1;
        cursor = -1;
      }
    } else if (live.size() > 1) {
      if (c2 == c1) {
        cursor = next_after(live, cursor);
        c2 = cursor;
      } else {
        c2 = c1;
      }
    }
    return {{c1, c2}, {cursor}};
  }

 private:
  Graph t_;
  std::vector<Vertex> start_;
};

// ---------------------------------------------------------------------------

class PendantPathPolicy final : public PolicyImpl {
 public:
  PendantPathPolicy(const Graph& t, PendantPath p) : t_(t), p_(std::move(p)) {}
  std::string name() const override { return "pendant-path"; }
  int num_cops() const override { return 2; }
  std::vector<Vertex> placement() const override {
    const Vertex second = p_.attach >= 0 ? p_.attach : p_.path.back();
    return {p_.path.front(), second};
  }
  PolicyState initial_state() const override { return {-1, -1}; }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    Chase c{s[0], s[1]};
    const Vertex c2 = c.step(t_, v.cops[1], v.belief);
    return {{v.cops[0], c2}, {c.hub, c.cursor}};
  }

 private:
  Graph t_;
  PendantPath p_;
};

// ---------------------------------------------------------------------------

// Two cops on a tree of diameter >= 2k-1. c1 starts on the diametral end v,
// c2 on x_k (k steps from v). Everything past x_k is visible from v, so a
// robber there is chased by c2. Otherwise c1 first walks to the far end u
// while c2 holds x_k, then c2 chases.
class StationaryTree final : public PolicyImpl {
 public:
  StationaryTree(const Graph& t, int k) : t_(t) {
    auto [v, u] = diametral_pair(t);
    const auto path = t.shortest_path(v, u);
    v_ = v;
    u_ = u;
    xk_ = path[k];
    beyond_ = branch(t, path[k - 1], xk_);
  }
  std::string name() const override { return "stationary-pair"; }
  int num_cops() const override { return 2; }
  std::vector<Vertex> placement() const override { return {v_, xk_}; }
  // phase, chase hub, chase cursor
  PolicyState initial_state() const override { return {0, -1, -1}; }

  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    int phase = s[0];
    Vertex c1 = v.cops[0], c2 = v.cops[1];
    Chase c{s[1], s[2]};
    if (phase == 0 && (v.belief & ~beyond_) != 0) phase = 1;
    if (phase == 1) {
      c1 = t_.step_toward(c1, u_);
      if (c1 == u_) phase = 2;
    } else {
      c2 = c.step(t_, c2, v.belief);
    }
    return {{c1, c2}, {phase, c.hub, c.cursor}};
  }

 private:
  Graph t_;
  Vertex v_ = 0, u_ = 0, xk_ = 0;
  Mask beyond_ = 0;
};

// Any graph of diameter >= 2k+1: two cops parked on a diametral pair keep
// the robber visible, the rest play a full-visibility certificate.
class StationaryGeneral final : public PolicyImpl {
 public:
  StationaryGeneral(const Graph& g, std::pair<Vertex, Vertex> ends, int pursuers, Certificate cert)
      : ends_(ends), pursuers_(pursuers), cert_(std::move(cert)) {
    (void)g;
  }
  std::string name() const override { return "stationary-pair"; }
  int num_cops() const override { return 2 + pursuers_; }
  std::vector<Vertex> placement() const override {
    std::vector<Vertex> out{ends_.first, ends_.second};
    out.insert(out.end(), cert_.placement.begin(), cert_.placement.end());
    return out;
  }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    std::vector<Vertex> chasers(v.cops.begin() + 2, v.cops.end());
    std::vector<int> order(chasers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return chasers[a] < chasers[b]; });
    CopSet sorted;
    for (int i : order) sorted.push_back(chasers[i]);
    auto it = cert_.moves.find(BeliefState{sorted, v.belief});
    if (it == cert_.moves.end()) fail(ErrorCode::kInternal, "pursuit certificate has no move");
    std::vector<Vertex> next{v.cops[0], v.cops[1]};
    next.resize(v.cops.size());
    for (std::size_t r = 0; r < order.size(); ++r) next[2 + order[r]] = it->second[r];
    return {next, s};
  }

 private:
  std::pair<Vertex, Vertex> ends_;
  int pursuers_;
  Certificate cert_;
};

// ---------------------------------------------------------------------------

// c1 and c2 sit on a diametral pair; only vertices within k of both can hide
// the robber. c3 searches that small region and chases anything it sees.
class NearDiam final : public PolicyImpl {
 public:
  NearDiam(const Graph& t, int k) : t_(t) {
    (void)k;
    ends_ = diametral_pair(t);
    start_ = metrics(t).center.front();
  }
  std::string name() const override { return "tree-near-diam"; }
  int num_cops() const override { return 3; }
  std::vector<Vertex> placement() const override { return {ends_.first, ends_.second, start_}; }
  PolicyState initial_state() const override { return {-1, -1}; }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    Chase c{s[0], s[1]};
    const Vertex c3 = c.step(t_, v.cops[2], v.belief);
    return {{v.cops[0], v.cops[1], c3}, {c.hub, c.cursor}};
  }

 private:
  Graph t_;
  std::pair<Vertex, Vertex> ends_;
  Vertex start_ = 0;
};

}  // namespace

std::optional<PendantPath> find_pendant_path(const Graph& t, int vertices) {
  if (vertices < 1) return std::nullopt;
  for (Vertex leaf = 0; leaf < t.order(); ++leaf) {
    if (t.order() > 1 && t.degree(leaf) != 1) continue;
    PendantPath p;
    p.path = {leaf};
    Vertex prev = -1, cur = leaf;
    bool ok = true;
    while (static_cast<int>(p.path.size()) < vertices) {
      Vertex nxt = -1;
      for (Vertex w : t.neighbors(cur))
        if (w != prev) nxt = w;
      if (nxt == -1 || t.degree(nxt) > 2) {
        ok = false;
        break;
      }
      prev = cur;
      cur = nxt;
      p.path.push_back(cur);
    }
    if (!ok) continue;
    for (Vertex w : t.neighbors(cur))
      if (w != prev) p.attach = w;
    return p;
  }
  return std::nullopt;
}

CopPolicy tree_k2_policy(const Graph& t) {
  require_tree(t, "tree_k2_policy");
  return CopPolicy(std::make_shared<TreeK2>(t));
}

CopPolicy pendant_path_policy(const Graph& t, int k) {
  require_tree(t, "pendant_path_policy");
  if (k < 2) fail(ErrorCode::kPrecondition, "pendant path strategy needs k >= 2");
  auto p = find_pendant_path(t, k - 1);
  if (!p) fail(ErrorCode::kPrecondition, "no pendant path of required length");
  return CopPolicy(std::make_shared<PendantPathPolicy>(t, std::move(*p)));
}

CopPolicy stationary_pair_policy(const Graph& g, int k, StationaryMode mode) {
  if (!g.fits_mask()) fail(ErrorCode::kInvalidArgument, "graph too large");
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (mode == StationaryMode::kAuto)
    mode = g.is_tree() ? StationaryMode::kTree : StationaryMode::kGeneral;
  const int diam = metrics(g).diameter;
  if (mode == StationaryMode::kTree) {
    require_tree(g, "stationary_pair_policy (tree mode)");
    if (diam < 2 * k - 1) fail(ErrorCode::kPrecondition, "tree diameter below 2k-1");
    return CopPolicy(std::make_shared<StationaryTree>(g, k));
  }
  if (diam < 2 * k + 1) fail(ErrorCode::kPrecondition, "diameter below 2k+1");
  const auto classic = cop_number(g, VisibilityRule::full_visibility());
  if (classic.outcome != Winner::kCopsWin)
    fail(ErrorCode::kLimit, "could not settle the full-visibility cop number");
  GameSpec spec(g, VisibilityRule::full_visibility(), classic.cop_number);
  Certificate cert = extract_certificate(spec, classic.placement);
  return CopPolicy(std::make_shared<StationaryGeneral>(g, diametral_pair(g), classic.cop_number,
                                                       std::move(cert)));
}

CopPolicy tree_near_diam_policy(const Graph& t, int k) {
  require_tree(t, "tree_near_diam_policy");
  const int diam = metrics(t).diameter;
  if (diam < 2 * k - 3 || diam > 2 * k - 2)
    fail(ErrorCode::kPrecondition, "diameter outside [2k-3, 2k-2]");
  return CopPolicy(std::make_shared<NearDiam>(t, k));
}

}  // namespace hyperopic
