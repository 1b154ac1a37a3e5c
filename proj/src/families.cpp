#include "families.hpp"

#include <algorithm>
#include <map>

namespace hyperopic {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::kInvalidArgument, what);
}

void require_params(const FamilySpec& spec, std::size_t count) {
  require(spec.params.size() == count,
          family_name(spec.family) + " expects " + std::to_string(count) + " parameter(s)");
}

struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  Vertex add() { return n++; }
  void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  // Path of `len` new vertices hanging off `from`; returns the far end.
  Vertex leg(Vertex from, int len) {
    for (int i = 0; i < len; ++i) {
      Vertex v = add();
      link(from, v);
      from = v;
    }
    return from;
  }
  // Copies g in, returning the id offset.
  int absorb(const Graph& g) {
    int off = n;
    n += g.order();
    for (auto [u, v] : g.edges()) link(u + off, v + off);
    return off;
  }
  Graph build() const { return Graph::build(n, edges); }
};

struct TMember {
  Graph tree;
  Vertex hub;
};

TMember t_member(int m, Attach attach) {
  if (m == 1) return {Graph::build(1, {}), 0};
  TMember prev = t_member(m - 1, attach);
  Vertex anchor = prev.hub;
  if (attach == Attach::kEccentricLeaf) {
    int best = -1;
    for (Vertex v = 0; v < prev.tree.order(); ++v)
      if (prev.tree.distance(prev.hub, v) > best) {
        best = prev.tree.distance(prev.hub, v);
        anchor = v;
      }
  }
  Builder b;
  Vertex x = b.add();
  for (int i = 0; i < 3; ++i) {
    Vertex y = b.add();
    b.link(x, y);
    int off = b.absorb(prev.tree);
    b.link(y, anchor + off);
  }
  return {b.build(), x};
}

}  // namespace

std::optional<Family> family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"path", Family::kPath},
      {"cycle", Family::kCycle},
      {"complete", Family::kComplete},
      {"complete_bipartite", Family::kCompleteBipartite},
      {"bipartite", Family::kCompleteBipartite},
      {"caterpillar", Family::kCaterpillar},
      {"spider", Family::kSpider},
      {"t_hat", Family::kTHat},
      {"that", Family::kTHat},
      {"g_k", Family::kGk},
      {"gk", Family::kGk},
      {"t_family", Family::kTFamily},
      {"tfamily", Family::kTFamily},
      {"tree_diam10", Family::kTreeDiam10},
      {"diam10", Family::kTreeDiam10},
      {"subdivision", Family::kSubdivision},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kCompleteBipartite: return "complete_bipartite";
    case Family::kCaterpillar: return "caterpillar";
    case Family::kSpider: return "spider";
    case Family::kTHat: return "t_hat";
    case Family::kGk: return "g_k";
    case Family::kTFamily: return "t_family";
    case Family::kTreeDiam10: return "tree_diam10";
    case Family::kSubdivision: return "subdivision";
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kPath: {
      require_params(spec, 1);
      require(p[0] >= 1, "path needs n >= 1");
      Builder b;
      Vertex v = b.add();
      b.leg(v, p[0] - 1);
      return b.build();
    }
    case Family::kCycle: {
      require_params(spec, 1);
      require(p[0] >= 3, "cycle needs n >= 3");
      Builder b;
      b.n = p[0];
      for (int i = 0; i < p[0]; ++i) b.link(i, (i + 1) % p[0]);
      return b.build();
    }
    case Family::kComplete: {
      require_params(spec, 1);
      require(p[0] >= 1, "complete needs n >= 1");
      Builder b;
      b.n = p[0];
      for (int i = 0; i < p[0]; ++i)
        for (int j = i + 1; j < p[0]; ++j) b.link(i, j);
      return b.build();
    }
    case Family::kCompleteBipartite: {
      require_params(spec, 2);
      require(p[0] >= 1 && p[1] >= 1, "complete_bipartite needs m, n >= 1");
      Builder b;
      b.n = p[0] + p[1];
      for (int i = 0; i < p[0]; ++i)
        for (int j = 0; j < p[1]; ++j) b.link(i, p[0] + j);
      return b.build();
    }
    case Family::kCaterpillar: {
      require(!p.empty(), "caterpillar needs at least one spine vertex");
      Builder b;
      Vertex prev = -1;
      for (int leaves : p) {
        require(leaves >= 0, "caterpillar leaf counts must be >= 0");
        Vertex s = b.add();
        if (prev >= 0) b.link(prev, s);
        for (int i = 0; i < leaves; ++i) b.link(s, b.add());
        prev = s;
      }
      return b.build();
    }
    case Family::kSpider: {
      require(!p.empty(), "spider needs at least one leg");
      Builder b;
      Vertex hub = b.add();
      for (int len : p) {
        require(len >= 1, "spider legs must have length >= 1");
        b.leg(hub, len);
      }
      return b.build();
    }
    case Family::kTHat:
      require_params(spec, 0);
      return spider_graph({2, 2, 2});
    case Family::kGk: {
      require_params(spec, 2);
      const int m = p[0], k = p[1];
      require(m >= 3 && k >= 1, "g_k needs m >= 3 and k >= 1");
      Builder b;
      b.n = 3 * m;
      for (int i = 0; i < 3 * m; ++i)
        for (int j = i + 1; j < 3 * m; ++j) b.link(i, j);
      for (int part = 0; part < 3; ++part) {
        Vertex first = b.add();
        for (int i = 0; i < m; ++i) b.link(part * m + i, first);
        b.leg(first, k - 1);
      }
      return b.build();
    }
    case Family::kTFamily:
      require_params(spec, 1);
      require(p[0] >= 1 && p[0] <= 6, "t_family needs 1 <= m <= 6");
      return t_member(p[0], spec.attach).tree;
    case Family::kTreeDiam10: {
      require_params(spec, 0);
      Builder b;
      Vertex hub = b.add();
      for (int i = 0; i < 3; ++i) {
        Vertex end = b.leg(hub, 2);
        for (int j = 0; j < 3; ++j) b.leg(end, 3);
      }
      return b.build();
    }
    case Family::kSubdivision: {
      require_params(spec, 1);
      require(spec.base.has_value(), "subdivision needs a base graph");
      require(p[0] >= 0, "subdivision needs t >= 0");
      return subdivide(*spec.base, p[0]);
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

Graph path_graph(int n) { return generate(FamilySpec{Family::kPath, {n}, Attach::kHub, std::nullopt}); }
Graph cycle_graph(int n) { return generate(FamilySpec{Family::kCycle, {n}, Attach::kHub, std::nullopt}); }
Graph complete_graph(int n) { return generate(FamilySpec{Family::kComplete, {n}, Attach::kHub, std::nullopt}); }
Graph complete_bipartite_graph(int m, int n) {
  return generate(FamilySpec{Family::kCompleteBipartite, {m, n}, Attach::kHub, std::nullopt});
}
Graph spider_graph(const std::vector<int>& legs) { return generate(FamilySpec{Family::kSpider, legs, Attach::kHub, std::nullopt}); }
Graph t_hat() { return spider_graph({2, 2, 2}); }

Graph subdivide(const Graph& g, int t) {
  Builder b;
  b.n = g.order();
  for (auto [u, v] : g.edges()) {
    Vertex end = b.leg(u, t);
    b.link(end, v);
  }
  return b.build();
}

}  // namespace hyperopic
