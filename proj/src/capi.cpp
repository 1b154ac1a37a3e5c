#include "hyperopic/hyperopic.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "audit.hpp"
#include "families.hpp"
#include "graph_io.hpp"

struct hyp_graph {
  hyperopic::Graph g;
};

namespace {

using namespace hyperopic;

thread_local std::string last_error;

hyp_status to_status(ErrorCode c) { return static_cast<hyp_status>(static_cast<int>(c)); }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
hyp_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const Json::exception& e) {
    last_error = e.what();
    return HYP_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HYP_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HYP_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::kInvalidArgument, what);
}

std::unique_ptr<ResultCache> open_cache(const char* path) {
  if (path != nullptr && *path != '\0') return std::make_unique<ResultCache>(path);
  if (auto p = default_cache_path()) return std::make_unique<ResultCache>(*p);
  return nullptr;
}

CopPolicy make_policy(const Graph& g, const std::string& name, int k) {
  if (name == "matching") return matching_policy(g);
  if (name == "tree2") return tree_k2_policy(g);
  if (name == "pendant") return pendant_path_policy(g, k);
  if (name == "stationary") return stationary_pair_policy(g, k);
  if (name == "neardiam") return tree_near_diam_policy(g, k);
  if (name == "outerplanar") return outerplanar_k2_policy(g);
  fail(ErrorCode::kInvalidArgument, "unknown policy '" + name + "'");
}

}  // namespace

extern "C" {

const char* hyp_last_error(void) { return last_error.c_str(); }

void hyp_string_free(char* s) { std::free(s); }

hyp_status hyp_graph_from_graph6(const char* text, hyp_graph** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new hyp_graph{from_graph6(text)};
    return HYP_OK;
  });
}

hyp_status hyp_graph_from_edge_list(const char* text, hyp_graph** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new hyp_graph{from_edge_list(text)};
    return HYP_OK;
  });
}

hyp_status hyp_graph_generate(const char* family, const int* params, size_t num_params, const hyp_graph* base,
                              int eccentric_attach, hyp_graph** out) {
  return guard([&] {
    require(family != nullptr && out != nullptr, "null argument");
    require(num_params == 0 || params != nullptr, "null parameter list");
    auto f = family_from_name(family);
    if (!f) fail(ErrorCode::kInvalidArgument, std::string("unknown family '") + family + "'");
    FamilySpec spec{*f, std::vector<int>(params, params + num_params),
                    eccentric_attach ? Attach::kEccentricLeaf : Attach::kHub, std::nullopt};
    if (base != nullptr) spec.base = base->g;
    *out = new hyp_graph{generate(spec)};
    return HYP_OK;
  });
}

void hyp_graph_free(hyp_graph* g) { delete g; }

int hyp_graph_order(const hyp_graph* g) { return g == nullptr ? -1 : g->g.order(); }

int hyp_graph_size(const hyp_graph* g) { return g == nullptr ? -1 : g->g.size(); }

hyp_status hyp_graph_to_graph6(const hyp_graph* g, char** out) {
  return guard([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup(to_graph6(g->g));
    return HYP_OK;
  });
}

hyp_status hyp_graph_to_edge_list(const hyp_graph* g, char** out) {
  return guard([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup(to_edge_list(g->g));
    return HYP_OK;
  });
}

hyp_status hyp_graph_stats_json(const hyp_graph* g, char** out) {
  return guard([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const Graph& G = g->g;
    const Metrics m = metrics(G);
    const Json j = {{"n", G.order()},
                    {"m", G.size()},
                    {"diameter", m.diameter},
                    {"radius", m.radius},
                    {"matching_number", maximum_matching(G).edges.size()},
                    {"caterpillar", is_caterpillar(G)},
                    {"tree", G.is_tree()},
                    {"graph6", to_graph6(G)}};
    *out = dup(j.dump());
    return HYP_OK;
  });
}

hyp_status hyp_copnum_json(const hyp_graph* g, const char* rule, int k, int max_cops, int jobs,
                           const char* cache_path, char** out_json) {
  return guard([&] {
    require(g != nullptr && rule != nullptr && out_json != nullptr, "null argument");
    const VisibilityRule r = parse_rule(rule, k);
    auto cache = open_cache(cache_path);
    SolveOptions opts;
    opts.jobs = std::max(jobs, 0);
    const CopnumRecord rec = cached_cop_number(g->g, r, opts, max_cops, cache.get());
    Json j = to_json(rec);
    j["cache_hit"] = rec.cache_hit;
    j["warnings"] = cache ? cache->warnings() : std::vector<std::string>{};
    *out_json = dup(j.dump());
    if (rec.outcome == Winner::kUndecided) {
      last_error = "state cap reached; cop number undecided";
      return HYP_ERR_LIMIT;
    }
    return HYP_OK;
  });
}

hyp_status hyp_verify_json(const hyp_graph* g, const char* policy, const char* rule, int k, char** out_json) {
  return guard([&] {
    require(g != nullptr && policy != nullptr && rule != nullptr && out_json != nullptr, "null argument");
    const VisibilityRule r = parse_rule(rule, k);
    const CopPolicy p = make_policy(g->g, policy, k);
    const VerifyOutcome o = verify_policy(g->g, r, p);
    Json j = to_json(o, p.name(), p.num_cops());
    j["rule"] = r.name();
    j["k"] = r.k;
    *out_json = dup(j.dump());
    if (o.kind == VerifyOutcome::Kind::kTimeout) {
      last_error = "verifier node cap reached";
      return HYP_ERR_LIMIT;
    }
    return HYP_OK;
  });
}

hyp_status hyp_audit(const char* claim, int n_max, int jobs, const char* cache_path, hyp_line_fn on_line,
                     void* user, char** summary_json) {
  return guard([&] {
    require(claim != nullptr, "null argument");
    auto cache = open_cache(cache_path);
    AuditOptions opts;
    opts.n_max = n_max;
    opts.jobs = std::max(jobs, 0);
    opts.cache = cache.get();
    const AuditSummary s = run_audit(claim, opts, [&](const Json& j) {
      if (on_line != nullptr) on_line(j.dump().c_str(), user);
    });
    if (summary_json != nullptr) {
      Json j = to_json(s);
      j["documented"] = s.documented;
      j["exit_code"] = s.exit_code();
      *summary_json = dup(j.dump());
    }
    return HYP_OK;
  });
}

hyp_status hyp_audit_claims(char** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    std::string s;
    for (const auto& c : audit_claims()) s += c + "\n";
    *out = dup(s);
    return HYP_OK;
  });
}

}  // extern "C"
