#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "game.hpp"
#include "solver.hpp"

namespace hyperopic {

using PolicyState = std::vector<std::int32_t>;

// What the cops know when they decide: their own (labelled) positions, the
// latest observation, and the set of robber positions consistent with every
// observation so far. The set is a deterministic function of the
// observation history, so a policy may use it freely.
struct PolicyView {
  const std::vector<Vertex>& cops;
  Observation observation;
  Mask belief = 0;
};

struct PolicyStep {
  std::vector<Vertex> cops;  // new labelled positions, cop i stays within N[cops[i]]
  PolicyState state;
};

class PolicyImpl {
 public:
  virtual ~PolicyImpl() = default;
  virtual std::string name() const = 0;
  virtual int num_cops() const = 0;
  virtual std::vector<Vertex> placement() const = 0;
  virtual PolicyState initial_state() const { return {}; }
  virtual PolicyStep step(const PolicyState& state, const PolicyView& view) const = 0;
};

// Immutable, cheap to copy.
class CopPolicy {
 public:
  explicit CopPolicy(std::shared_ptr<const PolicyImpl> impl) : impl_(std::move(impl)) {}

  std::string name() const { return impl_->name(); }
  int num_cops() const { return impl_->num_cops(); }
  std::vector<Vertex> placement() const { return impl_->placement(); }
  PolicyState initial_state() const { return impl_->initial_state(); }
  PolicyStep step(const PolicyState& s, const PolicyView& v) const { return impl_->step(s, v); }

 private:
  std::shared_ptr<const PolicyImpl> impl_;
};

struct WitnessNode {
  std::vector<Vertex> cops;
  Mask belief = 0;
};

struct VerifyOutcome {
  enum class Kind { kWin, kEvaded, kTimeout };
  Kind kind = Kind::kTimeout;
  int rounds = 0;                     // kWin: worst-case rounds to capture
  std::vector<WitnessNode> witness;   // kEvaded: the repeating cycle
  std::uint64_t nodes = 0;
};

std::string outcome_name(VerifyOutcome::Kind k);

struct TraceEvent {
  const PolicyState& state;
  const PolicyView& view;
  const std::vector<Vertex>& move;
  const PolicyState& next_state;
  Mask after_move;  // belief once the cops have moved, before the robber
  int round;
};

struct VerifyOptions {
  std::uint64_t node_cap = 100'000'000;
  std::function<void(const TraceEvent&)> trace;  // called once per expanded node
};

// Plays the deterministic policy against every robber behaviour at once:
// DFS over (policy state, cops, belief); a node repeated on the current path
// means the omniscient robber can loop forever.
VerifyOutcome verify_policy(const Graph& g, const VisibilityRule& rule, const CopPolicy& policy,
                            const VerifyOptions& options = {});

// Policy constructors. Each throws ErrorCode::kPrecondition when the graph
// does not meet the strategy's hypothesis.
CopPolicy matching_policy(const Graph& g);
CopPolicy tree_k2_policy(const Graph& t);
CopPolicy pendant_path_policy(const Graph& t, int k);
enum class StationaryMode { kAuto, kTree, kGeneral };
CopPolicy stationary_pair_policy(const Graph& g, int k, StationaryMode mode = StationaryMode::kAuto);
CopPolicy tree_near_diam_policy(const Graph& t, int k);
CopPolicy outerplanar_k2_policy(const Graph& g);

// Simple reference policies.
CopPolicy path_sweep_policy(const Graph& path);
CopPolicy stationary_policy(const Graph& g, std::vector<Vertex> cops);
CopPolicy certificate_policy(const GameSpec& spec, Certificate cert);

// extract_certificate followed by a replay through verify_policy; throws
// kInternal if the replay does not end in a win.
Certificate certified_certificate(const GameSpec& spec, std::span<const Vertex> placement,
                                  const SolveOptions& options = {});

// Matching used by matching_policy: oscillating edges plus the sweeper walk.
struct MatchingPlan {
  Matching matching;
  std::vector<Vertex> remainder;  // unmatched vertices, ascending
  std::vector<Vertex> sweep;      // closed walk through `remainder`
};
MatchingPlan matching_plan(const Graph& g);

// Pendant path used by pendant_path_policy: `path[0]` is the leaf end, the
// path has k-1 vertices, and `attach` is the outside neighbour of its last
// vertex (-1 when the tree is the path itself).
struct PendantPath {
  std::vector<Vertex> path;
  Vertex attach = -1;
};
std::optional<PendantPath> find_pendant_path(const Graph& t, int vertices);

}  // namespace hyperopic
