#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hyperopic/hyperopic.h"

namespace {

using Json = nlohmann::json;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;  // evaded policy, or an unexpected audit violation
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitIo = 5;
constexpr int kExitInternal = 6;

int exit_for(hyp_status s) {
  switch (s) {
    case HYP_OK: return kExitOk;
    case HYP_ERR_INVALID_ARGUMENT:
    case HYP_ERR_PARSE: return kExitUsage;
    case HYP_ERR_PRECONDITION: return kExitPrecondition;
    case HYP_ERR_LIMIT: return kExitUndecided;
    case HYP_ERR_IO: return kExitIo;
    case HYP_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

int report(hyp_status s) {
  std::cerr << "error: " << hyp_last_error() << "\n";
  return exit_for(s);
}

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  hyp_string_free(s);
  return out;
}

struct GraphHandle {
  hyp_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { hyp_graph_free(g); }
};

struct GraphInput {
  std::string graph;
  std::string input;
  std::string format = "graph6";
  std::string family;
  std::vector<int> params;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-g,--graph", graph, "graph given inline (graph6 string or edge-list text)");
    cmd->add_option("-i,--input", input, "file holding the graph, '-' for standard input");
    cmd->add_option("--format", format, "input format")->check(CLI::IsMember({"graph6", "edges"}));
    cmd->add_option("--family", family, "generate the graph from a named family instead");
    cmd->add_option("--params", params, "family parameters")->delimiter(',');
  }

  hyp_status load(GraphHandle& out) const {
    if (!family.empty())
      return hyp_graph_generate(family.c_str(), params.data(), params.size(), nullptr, 0, &out.g);
    std::string text = graph;
    if (text.empty()) {
      if (input.empty() || input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream f(input);
        if (!f) {
          std::cerr << "error: cannot read " << input << "\n";
          return HYP_ERR_IO;
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
      }
    }
    if (format == "graph6") {
      // First non-empty line only.
      std::istringstream ss(text);
      std::string line;
      while (std::getline(ss, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
      }
      line.erase(line.find_last_not_of(" \t\r") + 1);
      return hyp_graph_from_graph6(line.c_str(), &out.g);
    }
    return hyp_graph_from_edge_list(text.c_str(), &out.g);
  }
};

int run_copnum(const GraphInput& in, const std::string& rule, int k, int max_cops, int jobs,
               const std::string& cache) {
  GraphHandle g;
  if (hyp_status s = in.load(g); s != HYP_OK) return report(s);
  char* raw = nullptr;
  const hyp_status s = hyp_copnum_json(g.g, rule.c_str(), k, max_cops, jobs, cache.empty() ? nullptr : cache.c_str(), &raw);
  if (raw == nullptr) return report(s);
  Json j = Json::parse(take(raw));
  for (const auto& w : j["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
  if (j["cache_hit"].get<bool>()) std::cerr << "cache hit\n";
  j.erase("warnings");
  j.erase("cache_hit");
  if (s == HYP_ERR_LIMIT) {
    std::cout << "undecided\n" << j.dump() << "\n";
    std::cerr << "error: " << hyp_last_error() << "\n";
    return kExitUndecided;
  }
  if (j["outcome"] == "robber") std::cout << "> " << j["max_cops"] << "\n";
  else std::cout << j["cop_number"] << "\n";
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_verify(const GraphInput& in, const std::string& policy, std::string rule, int k) {
  GraphHandle g;
  if (hyp_status s = in.load(g); s != HYP_OK) return report(s);
  if (rule.empty()) rule = policy == "matching" ? "zero" : "hyperopic";
  char* raw = nullptr;
  const hyp_status s = hyp_verify_json(g.g, policy.c_str(), rule.c_str(), k, &raw);
  if (raw == nullptr) return report(s);
  const Json j = Json::parse(take(raw));
  std::cout << j.dump() << "\n";
  if (s != HYP_OK) return report(s);
  return j["outcome"] == "win" ? kExitOk : kExitFailed;
}

struct GenArgs {
  std::string family;
  int n = -1, m = -1, k = -1, t = -1;
  std::vector<int> params;
  std::string attach = "hub";
  std::string base;
  std::string format = "graph6";
  bool stats = false;
};

int run_gen(const GenArgs& a) {
  std::vector<int> p = a.params;
  if (p.empty()) {
    for (int v : {a.m, a.n, a.k, a.t})
      if (v >= 0) p.push_back(v);
  }
  GraphHandle base;
  if (!a.base.empty())
    if (hyp_status s = hyp_graph_from_graph6(a.base.c_str(), &base.g); s != HYP_OK) return report(s);
  GraphHandle g;
  if (hyp_status s = hyp_graph_generate(a.family.c_str(), p.data(), p.size(), base.g, a.attach == "eccentric", &g.g);
      s != HYP_OK)
    return report(s);
  char* raw = nullptr;
  const hyp_status s = a.format == "graph6" ? hyp_graph_to_graph6(g.g, &raw) : hyp_graph_to_edge_list(g.g, &raw);
  if (s != HYP_OK) return report(s);
  std::cout << take(raw);
  if (a.format == "graph6") std::cout << "\n";
  if (a.stats) {
    if (hyp_status st = hyp_graph_stats_json(g.g, &raw); st != HYP_OK) return report(st);
    const Json j = Json::parse(take(raw));
    std::cout << "n=" << j["n"] << " m=" << j["m"] << " diam=" << j["diameter"] << " radius=" << j["radius"]
              << " matching=" << j["matching_number"] << " caterpillar=" << (j["caterpillar"].get<bool>() ? "yes" : "no")
              << "\n";
  }
  return kExitOk;
}

void print_line(const char* line, void*) { std::cout << line << "\n"; }

int run_audit_cmd(const std::vector<std::string>& claims, int n_max, int jobs, const std::string& cache) {
  std::vector<Json> summaries;
  int code = kExitOk;
  for (const auto& claim : claims) {
    char* raw = nullptr;
    const hyp_status s =
        hyp_audit(claim.c_str(), n_max, jobs, cache.empty() ? nullptr : cache.c_str(), print_line, nullptr, &raw);
    if (s != HYP_OK) return report(s);
    std::cout.flush();
    Json j = Json::parse(take(raw));
    if (j["exit_code"].get<int>() != 0) code = kExitFailed;
    summaries.push_back(std::move(j));
  }
  std::cerr << "claim                instances   pass  viol  undec  verdict\n";
  for (const auto& j : summaries) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-20s %9d %6d %5d %6d  %s\n", j["claim"].get<std::string>().c_str(),
                  j["instances"].get<int>(), j["pass"].get<int>(), j["violations"].get<int>(),
                  j["undecided"].get<int>(), j["verdict"].get<std::string>().c_str());
    std::cerr << buf;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver, strategy verifier and claim audits for k-hyperopic cops and robber"};
  app.require_subcommand(1);

  GraphInput cin_, vin;
  std::string rule = "hyperopic", cache;
  int k = 1, max_cops = 0, jobs = 0;
  auto* copnum = app.add_subcommand("copnum", "compute the cop number");
  cin_.add_to(copnum);
  copnum->add_option("--rule", rule, "visibility rule")->check(CLI::IsMember({"hyperopic", "zero", "classic"}));
  copnum->add_option("--k", k, "hyperopia radius")->check(CLI::PositiveNumber);
  copnum->add_option("--max-cops", max_cops, "largest cop count to try (default: ceil(n/2)+1)");
  copnum->add_option("--jobs", jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  copnum->add_option("--cache", cache, "JSON-lines result cache (default: $HYPEROPIC_CACHE)");

  std::string policy, vrule;
  int vk = 2;
  auto* verify = app.add_subcommand("verify", "verify a cop strategy against every robber");
  vin.add_to(verify);
  verify->add_option("--policy", policy, "strategy")
      ->required()
      ->check(CLI::IsMember({"matching", "tree2", "pendant", "stationary", "neardiam", "outerplanar"}));
  verify->add_option("--rule", vrule, "visibility rule (default: zero for matching, else hyperopic)")
      ->check(CLI::IsMember({"hyperopic", "zero", "classic"}));
  verify->add_option("--k", vk, "hyperopia radius")->check(CLI::PositiveNumber);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", gen_args.family, "family name")->required();
  gen->add_option("--n", gen_args.n, "size parameter");
  gen->add_option("--m", gen_args.m, "first parameter (m)");
  gen->add_option("--k", gen_args.k, "path length parameter (g_k)");
  gen->add_option("--t", gen_args.t, "subdivision count");
  gen->add_option("--params", gen_args.params, "explicit parameter list")->delimiter(',');
  gen->add_option("--attach", gen_args.attach, "t_family attachment")->check(CLI::IsMember({"hub", "eccentric"}));
  gen->add_option("--base", gen_args.base, "base graph (graph6) for subdivision");
  gen->add_option("--format", gen_args.format, "output format")->check(CLI::IsMember({"graph6", "edges"}));
  gen->add_flag("--stats", gen_args.stats, "print n, diameter, radius, matching number, caterpillar flag");

  std::vector<std::string> claims;
  int n_max = 0, ajobs = 0;
  std::string acache;
  bool list = false;
  auto* audit = app.add_subcommand("audit", "check a claim over an exhaustive instance set");
  audit->add_option("--claim", claims, "claim id, repeatable, or 'all'");
  audit->add_option("--n-max", n_max, "instance size bound (default per claim)");
  audit->add_option("--jobs", ajobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  audit->add_option("--cache", acache, "JSON-lines result cache (default: $HYPEROPIC_CACHE)");
  audit->add_flag("--list", list, "list claim ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (copnum->parsed()) return run_copnum(cin_, rule, k, max_cops, jobs, cache);
  if (verify->parsed()) return run_verify(vin, policy, vrule, vk);
  if (gen->parsed()) return run_gen(gen_args);

  char* raw = nullptr;
  if (hyp_status s = hyp_audit_claims(&raw); s != HYP_OK) return report(s);
  std::vector<std::string> all;
  {
    std::istringstream ss(take(raw));
    for (std::string c; std::getline(ss, c);) all.push_back(c);
  }
  if (list) {
    for (const auto& c : all) std::cout << c << "\n";
    return kExitOk;
  }
  if (claims.empty()) {
    std::cerr << "error: --claim is required\n";
    return kExitUsage;
  }
  if (claims.size() == 1 && claims[0] == "all") claims = all;
  return run_audit_cmd(claims, n_max, ajobs, acache);
}
