#include <algorithm>
#include <array>

#include "strategies.hpp"

namespace hyperopic {

namespace {

// Positions below are vertex ids; arcs are read clockwise along the outer
// cycle of the embedding.
//
// Territory (a, b): cop A on a, cop B on b, the robber is not on the open arc
// strictly between a and b, and no chord joins that arc to the rest. The
// cops only ever move between territories, each strictly larger.
enum Phase : std::int32_t {
  kHold = 0,      // both cops on the territory ends, deciding
  kProbe = 1,     // both cops one step out, returning next round
  kSealB = 2,     // B toggles b <-> m to shut the pocket behind b, A walks to m
  kSealA = 3,     // mirror image
};

class Outerplanar final : public PolicyImpl {
 public:
  Outerplanar(const Graph& g, OuterEmbedding emb)
      : g_(g), order_(std::move(emb.order)), spec_(g, VisibilityRule::hyperopic(2), 2) {
    const int n = g.order();
    pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) pos_[order_[i]] = i;

    // Start inside the longest run of degree-2 vertices.
    std::vector<int> branch_points;
    for (int i = 0; i < n; ++i)
      if (g.degree(order_[i]) >= 3) branch_points.push_back(i);
    int start = 0;
    if (!branch_points.empty()) {
      int best_gap = -1;
      for (std::size_t i = 0; i < branch_points.size(); ++i) {
        const int p = branch_points[i];
        const int q = branch_points[(i + 1) % branch_points.size()];
        int gap = (q - p + n) % n;
        if (gap == 0) gap = n;
        if (gap > best_gap) {
          best_gap = gap;
          start = p;
        }
      }
    }
    a0_ = order_[start];
    b0_ = order_[(start + 1) % n];
  }

  std::string name() const override { return "outerplanar-k2"; }
  int num_cops() const override { return 2; }
  std::vector<Vertex> placement() const override { return {a0_, b0_}; }
  // phase, a, b, m, probe target for A, probe target for B
  PolicyState initial_state() const override { return {kHold, a0_, b0_, -1, -1, -1}; }

  PolicyStep step(const PolicyState& s, const PolicyView& v) const override {
    const Vertex A = v.cops[0], B = v.cops[1];
    Vertex a = s[1], b = s[2], m = s[3];
    switch (s[0]) {
      case kProbe:
        return {{a, b}, {kHold, a, b, -1, -1, -1}};
      case kSealB:
        if (A == m && B == b) return hold(m, b, v.belief);
        return {{A == m ? A : g_.step_toward(A, m), B == b ? m : b}, s};
      case kSealA:
        if (B == m && A == a) return hold(a, m, v.belief);
        return {{A == a ? m : a, B == m ? B : g_.step_toward(B, m)}, s};
      default:
        return hold(a, b, v.belief);
    }
  }

  // Open clockwise arc (from, to).
  Mask arc(Vertex from, Vertex to) const {
    const int n = g_.order();
    Mask out = 0;
    for (int p = (pos_[from] + 1) % n; p != pos_[to]; p = (p + 1) % n) out |= bit(order_[p]);
    return out;
  }

 private:
  int cw(Vertex from, Vertex to) const {
    const int n = g_.order();
    return (pos_[to] - pos_[from] + n) % n;
  }

  struct Pockets {
    Vertex mb = -1, ma = -1;
    Mask pb = 0, pa = 0;
  };

  // mb: b's neighbour outside the territory furthest clockwise from b;
  // pb: the pocket between b and mb. ma / pa mirror this at a.
  Pockets pockets(Vertex a, Vertex b) const {
    Pockets p;
    const Mask outside = arc(b, a);
    for (Vertex w : g_.neighbors(b))
      if ((outside & bit(w)) && (p.mb == -1 || cw(b, w) > cw(b, p.mb))) p.mb = w;
    for (Vertex w : g_.neighbors(a))
      if ((outside & bit(w)) && (p.ma == -1 || cw(w, a) > cw(p.ma, a))) p.ma = w;
    if (p.mb != -1) p.pb = arc(b, p.mb);
    if (p.ma != -1) p.pa = arc(p.ma, a);
    return p;
  }

  static bool resolved(const Pockets& p, Mask belief) {
    return (belief & p.pb) == 0 || (belief & p.pa) == 0 ||
           (belief & ~(p.pb | bit(p.mb))) == 0 || (belief & ~(p.pa | bit(p.ma))) == 0;
  }

  PolicyStep hold(Vertex a, Vertex b, Mask belief) const {
    const Pockets p = pockets(a, b);
    if (p.mb == -1) return {{a, b}, {kHold, a, b, -1, -1, -1}};  // nothing left outside
    if ((belief & p.pb) == 0) return {{a, p.mb}, {kHold, a, p.mb, -1, -1, -1}};
    if ((belief & p.pa) == 0) return {{p.ma, b}, {kHold, p.ma, b, -1, -1, -1}};
    if ((belief & ~(p.pb | bit(p.mb))) == 0)
      return {{g_.step_toward(a, p.mb), p.mb}, {kSealB, a, b, p.mb, -1, -1}};
    if ((belief & ~(p.pa | bit(p.ma))) == 0)
      return {{p.ma, g_.step_toward(b, p.ma)}, {kSealA, a, b, p.ma, -1, -1}};

    // Mixed: pick the out-and-back probe that leaves the fewest unresolved
    // beliefs once both cops are home again.
    std::array<Vertex, 2> best{a, b};
    long best_score = -1;
    std::vector<Vertex> na{a}, nb{b};
    na.insert(na.end(), g_.neighbors(a).begin(), g_.neighbors(a).end());
    nb.insert(nb.end(), g_.neighbors(b).begin(), g_.neighbors(b).end());
    for (Vertex pb : nb) {
      for (Vertex pa : na) {
        const long score = probe_score(a, b, pa, pb, p, belief);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best = {pa, pb};
        }
        if (best_score == 0) break;
      }
      if (best_score == 0) break;
    }
    return {{best[0], best[1]}, {kProbe, a, b, -1, best[0], best[1]}};
  }

  // Unresolved outcomes (weighted by belief size) after probing (pa, pb)
  // and returning to (a, b).
  long probe_score(Vertex a, Vertex b, Vertex pa, Vertex pb, const Pockets& p, Mask belief) const {
    long score = 0;
    const std::array<Vertex, 2> out{pa, pb}, home{a, b};
    auto robber_moves = [&](const std::array<Vertex, 2>& cops, Mask set, auto&& visit) {
      const Mask left = set & ~cop_mask(cops);
      for (const auto& part : observation_split(spec_, cops, left)) {
        const Mask next = g_.closed_neighborhood(part.positions) & ~cop_mask(cops);
        for (const auto& seen : observation_split(spec_, cops, next)) visit(seen.positions);
      }
    };
    robber_moves(out, belief, [&](Mask mid) {
      robber_moves(home, mid, [&](Mask end) {
        if (!resolved(p, end)) score += 1 + popcount(end);
      });
    });
    return score;
  }

  Graph g_;
  std::vector<Vertex> order_;
  std::vector<int> pos_;
  GameSpec spec_;
  Vertex a0_ = 0, b0_ = 0;
};

}  // namespace

CopPolicy outerplanar_k2_policy(const Graph& g) {
  if (g.order() < 3) fail(ErrorCode::kPrecondition, "outerplanar strategy needs a 2-connected graph");
  auto emb = find_outer_embedding(g);
  if (!emb) fail(ErrorCode::kPrecondition, "graph is not 2-connected outerplanar");
  return CopPolicy(std::make_shared<Outerplanar>(g, std::move(*emb)));
}

}  // namespace hyperopic
