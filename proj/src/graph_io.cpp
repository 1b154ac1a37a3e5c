#include "graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hyperopic {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    fail(ErrorCode::kInvalidArgument, "graph too large for graph6");
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) fail(ErrorCode::kParse, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) fail(ErrorCode::kParse, "invalid graph6 byte");

  std::size_t at = 0;
  long n = text[at++] - 63;
  if (n == 63) {
    if (text.size() < 4) fail(ErrorCode::kParse, "truncated graph6 size");
    if (text[1] - 63 == 63) fail(ErrorCode::kParse, "graph6 sizes above 258047 unsupported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | (text[at++] - 63);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() - at != (bits + 5) / 6) fail(ErrorCode::kParse, "graph6 length does not match vertex count");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[at + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (n == 0) fail(ErrorCode::kParse, "graph6 graph has no vertices");
  return Graph::build(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (g.order() == 1) out << "n 1\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = -1, max_id = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream in{std::string(line)};
    std::string first;
    in >> first;
    if (first == "n") {
      if (!(in >> n) || n < 1) fail(ErrorCode::kParse, "bad vertex count on line " + std::to_string(line_no));
      continue;
    }
    int u = 0, v = 0;
    auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), u);
    if (ec != std::errc{} || p != first.data() + first.size() || !(in >> v)) {
      fail(ErrorCode::kParse, "expected 'u v' on line " + std::to_string(line_no));
    }
    std::string rest;
    if (in >> rest) fail(ErrorCode::kParse, "trailing text on line " + std::to_string(line_no));
    if (u < 0 || v < 0) fail(ErrorCode::kParse, "negative vertex id on line " + std::to_string(line_no));
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  if (n < 0) n = max_id + 1;
  if (n < 1) fail(ErrorCode::kParse, "edge list is empty");
  return Graph::build(n, edges);
}

}  // namespace hyperopic
