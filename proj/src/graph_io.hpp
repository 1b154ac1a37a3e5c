#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace hyperopic {

// graph6: N(n) followed by the upper triangle in column order, six bits per
// printable byte (value + 63). The ">>graph6<<" header is accepted on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// One "u v" pair per line, 0-based. Blank lines and '#' comments are ignored;
// an optional "n <count>" line fixes the vertex count (needed for K_1).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace hyperopic
