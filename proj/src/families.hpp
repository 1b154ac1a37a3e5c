#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hyperopic {

enum class Family {
  kPath,               // (n)
  kCycle,              // (n), n >= 3
  kComplete,           // (n)
  kCompleteBipartite,  // (m, n)
  kCaterpillar,        // leaf count per spine vertex
  kSpider,             // leg lengths
  kTHat,               // ()
  kGk,                 // (m, k), m >= 3, k >= 1
  kTFamily,            // (m), m >= 1
  kTreeDiam10,         // ()
  kSubdivision,        // (t) applied to `base`
};

// Where each y_i of a T_m member attaches into its copy of T_{m-1}.
enum class Attach { kHub, kEccentricLeaf };

struct FamilySpec {
  Family family = Family::kPath;
  std::vector<int> params;
  Attach attach = Attach::kHub;
  std::optional<Graph> base;  // kSubdivision only
};

// Deterministic: the same spec always yields the same labelled graph.
Graph generate(const FamilySpec& spec);

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

// Convenience wrappers.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph spider_graph(const std::vector<int>& legs);
Graph t_hat();
Graph subdivide(const Graph& g, int t);

// One representative per isomorphism class of free trees, 1 <= n <= 12.
std::vector<Graph> all_trees(int n);
// Canonical string of a free tree (centre-rooted AHU encoding).
std::string tree_canonical_form(const Graph& t);

// C_n plus every non-crossing chord set, one per dihedral orbit, 3 <= n <= 10.
// Vertices 0..n-1 run around the outer cycle.
std::vector<Graph> all_two_connected_outerplanar(int n);

// One representative per isomorphism class of connected graphs, 1 <= n <= 7.
std::vector<Graph> all_connected_graphs(int n);

}  // namespace hyperopic
