#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "solver.hpp"
#include "strategies.hpp"

namespace hyperopic {

using Json = nlohmann::json;

// "hyperopic" + k, or "zero" / "classic" with k = 0.
Json rule_json(const VisibilityRule& rule);
VisibilityRule parse_rule(const std::string& name, int k);

struct CopnumRecord {
  std::string graph6;
  VisibilityRule rule;
  int max_cops = 0;
  Winner outcome = Winner::kUndecided;
  int cop_number = 0;
  std::uint64_t states_explored = 0;
  CopSet placement;
  bool cache_hit = false;
};

Json to_json(const CopnumRecord& r);
CopnumRecord copnum_from_json(const Json& j);

Json to_json(const VerifyOutcome& o, const std::string& policy, int cops);

// Append-only JSON-lines store. Every line carries an FNV-1a checksum of its
// record; damaged lines are skipped and reported in warnings().
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  std::optional<CopnumRecord> find_copnum(const std::string& graph6, const VisibilityRule& rule,
                                          int max_cops) const;
  void store(const CopnumRecord& r);

  std::vector<std::string> warnings() const;
  bool writable() const { return writable_; }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::vector<Json> records_;
  std::vector<std::string> warnings_;
  bool writable_ = true;
};

std::string checksum_hex(const std::string& payload);

// Default cache location from the HYPEROPIC_CACHE environment variable.
std::optional<std::string> default_cache_path();

// cop_number with an optional cache in front of it.
CopnumRecord cached_cop_number(const Graph& g, const VisibilityRule& rule, const SolveOptions& options,
                               int max_cops, ResultCache* cache);

}  // namespace hyperopic
