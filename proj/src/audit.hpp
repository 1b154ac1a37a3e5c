#pragma once

#include <functional>
#include <string>
#include <vector>

#include "records.hpp"

namespace hyperopic {

struct AuditOptions {
  int n_max = 0;  // 0: the claim's default size bound
  int jobs = 0;   // worker threads across instances; 0: hardware concurrency
  ResultCache* cache = nullptr;
};

struct AuditSummary {
  std::string claim;
  int instances = 0;
  int passed = 0;
  int violations = 0;
  int undecided = 0;
  bool documented = false;  // claim known to fail as stated
  std::string verdict;      // pass | violation | violation-documented | undecided

  // Nonzero only for a violation of a claim expected to hold.
  int exit_code() const { return violations > 0 && !documented ? 1 : 0; }
};

Json to_json(const AuditSummary& s);

const std::vector<std::string>& audit_claims();
bool is_documented_discrepancy(const std::string& claim);

// Streams one record per instance to `emit`, in a fixed instance order that
// does not depend on `jobs`. Throws kInvalidArgument for an unknown claim.
AuditSummary run_audit(const std::string& claim, const AuditOptions& options,
                       const std::function<void(const Json&)>& emit);

// True iff f : V(g) -> keep fixes keep pointwise and is a weak homomorphism;
// returns the first such map found by backtracking.
std::optional<std::vector<Vertex>> find_retraction(const Graph& g, const std::vector<Vertex>& keep);

// Every block is a bridge or a 2-connected outerplanar graph.
bool is_outerplanar(const Graph& g);

}  // namespace hyperopic
