#include "records.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "graph_io.hpp"

namespace hyperopic {

Json rule_json(const VisibilityRule& rule) {
  return {{"rule", rule.name()}, {"k", rule.k}};
}

VisibilityRule parse_rule(const std::string& name, int k) {
  if (name == "hyperopic") return VisibilityRule::hyperopic(k);
  if (name == "zero") return VisibilityRule::zero_visibility();
  if (name == "classic") return VisibilityRule::full_visibility();
  fail(ErrorCode::kInvalidArgument, "unknown visibility rule '" + name + "'");
}

namespace {

Winner winner_from_name(const std::string& s) {
  if (s == winner_name(Winner::kCopsWin)) return Winner::kCopsWin;
  if (s == winner_name(Winner::kRobberWins)) return Winner::kRobberWins;
  return Winner::kUndecided;
}

}  // namespace

Json to_json(const CopnumRecord& r) {
  Json j = {{"graph6", r.graph6},
            {"rule", r.rule.name()},
            {"k", r.rule.k},
            {"max_cops", r.max_cops},
            {"outcome", winner_name(r.outcome)},
            {"states_explored", r.states_explored},
            {"cop_number", r.cop_number},
            {"placement", r.placement}};
  return j;
}

CopnumRecord copnum_from_json(const Json& j) {
  CopnumRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.rule = parse_rule(j.at("rule").get<std::string>(), j.at("k").get<int>());
  r.max_cops = j.at("max_cops").get<int>();
  r.outcome = winner_from_name(j.at("outcome").get<std::string>());
  r.states_explored = j.at("states_explored").get<std::uint64_t>();
  r.placement = j.at("placement").get<CopSet>();
  r.cop_number = j.at("cop_number").get<int>();
  return r;
}

Json to_json(const VerifyOutcome& o, const std::string& policy, int cops) {
  Json j = {{"policy", policy},
            {"cops_used", cops},
            {"outcome", outcome_name(o.kind)},
            {"nodes", o.nodes}};
  if (o.kind == VerifyOutcome::Kind::kWin) j["rounds"] = o.rounds;
  if (o.kind == VerifyOutcome::Kind::kEvaded) {
    Json w = Json::array();
    for (const auto& n : o.witness) w.push_back({{"cops", n.cops}, {"belief", to_vertices(n.belief)}});
    j["witness"] = w;
  }
  return j;
}

std::string checksum_hex(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("record") || !j.contains("checksum") ||
        !j["checksum"].is_string() || j["checksum"].get<std::string>() != checksum_hex(j["record"].dump())) {
      warnings_.push_back("cache line " + std::to_string(lineno) + ": bad checksum, skipped");
      continue;
    }
    records_.push_back(j["record"]);
  }
  std::ofstream probe(path_, std::ios::app);
  if (!probe) {
    writable_ = false;
    warnings_.push_back("cache " + path_ + " is not writable; continuing without it");
  }
}

std::optional<CopnumRecord> ResultCache::find_copnum(const std::string& graph6,
                                                     const VisibilityRule& rule,
                                                     int max_cops) const {
  std::lock_guard lock(mu_);
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    const Json& j = *it;
    if (j.value("kind", "") != "copnum") continue;
    try {
      CopnumRecord r = copnum_from_json(j);
      if (r.graph6 != graph6 || !(r.rule == rule)) continue;
      // A decided answer within the requested bound is reusable; anything
      // else only for the identical request.
      const bool decided = r.outcome == Winner::kCopsWin && r.cop_number <= max_cops;
      if (decided || r.max_cops == max_cops) {
        r.cache_hit = true;
        return r;
      }
    } catch (const std::exception&) {
      continue;
    }
  }
  return std::nullopt;
}

std::vector<std::string> ResultCache::warnings() const {
  std::lock_guard lock(mu_);
  return warnings_;
}

void ResultCache::store(const CopnumRecord& r) {
  std::lock_guard lock(mu_);
  Json rec = to_json(r);
  rec["kind"] = "copnum";
  records_.push_back(rec);
  if (!writable_) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    writable_ = false;
    warnings_.push_back("cache " + path_ + " is not writable; continuing without it");
    return;
  }
  const Json line = {{"checksum", checksum_hex(rec.dump())}, {"record", rec}};
  out << line.dump() << '\n';
}

std::optional<std::string> default_cache_path() {
  if (const char* p = std::getenv("HYPEROPIC_CACHE"); p != nullptr && *p != '\0') return std::string(p);
  return std::nullopt;
}

CopnumRecord cached_cop_number(const Graph& g, const VisibilityRule& rule, const SolveOptions& options,
                               int max_cops, ResultCache* cache) {
  if (max_cops <= 0) max_cops = (g.order() + 1) / 2 + 1;
  const std::string g6 = to_graph6(g);
  if (cache != nullptr)
    if (auto hit = cache->find_copnum(g6, rule, max_cops)) return *hit;
  const CopNumberResult res = cop_number(g, rule, options, max_cops);
  CopnumRecord r;
  r.graph6 = g6;
  r.rule = rule;
  r.max_cops = max_cops;
  r.outcome = res.outcome;
  r.cop_number = res.cop_number;
  r.states_explored = res.states_explored;
  r.placement = res.placement;
  if (cache != nullptr && res.outcome != Winner::kUndecided) cache->store(r);
  return r;
}

}  // namespace hyperopic
