#pragma once

// Graphs around patterns: the standard graph representation of a pattern, the
// exact cutwidth of small multigraphs, and the reductions between cutwidth and
// the locality number.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varpat/core.hpp"

namespace varpat {

using GraphEdge = std::pair<std::size_t, std::size_t>;  // 1-indexed endpoints

struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> edges;
};

// Text format: "n m", then m lines "u v"; lines starting with '#' are
// comments. Errors report the 1-indexed line.
Multigraph parse_graph(std::string_view text);
std::string to_string(const Multigraph& g);

struct LinearArrangement {
  std::vector<std::size_t> order;  // 1-indexed vertices
};

struct CutwidthResult {
  std::size_t value = 0;
  LinearArrangement witness;
};

inline constexpr std::size_t kMaxCutwidthVertices = 20;

// Maximum, over the proper prefixes of the arrangement, of the number of
// edges with exactly one endpoint in the prefix.
std::size_t cutwidth_of(const Multigraph& g, const LinearArrangement& order);
CutwidthResult cutwidth_exact(const Multigraph& g);

struct PatternGraph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> neighbour_edges;
  std::vector<GraphEdge> equality_edges;
  std::vector<std::size_t> terminal_vertices;
};

PatternGraph standard_graph(const Pattern& p);
std::string to_dot(const Pattern& p, const PatternGraph& g);

// One word per vertex over the alphabet {0, ..., n-1} (vertex v is terminal
// v - 1): a closed walk that traverses every edge twice, started at v.
std::vector<Word> graph_to_words(const Multigraph& g);

struct WordGraph {
  Multigraph graph;
  std::vector<Terminal> symbols;  // symbols[v - 1] for the non-sentinel vertices
  std::size_t source = 0;
  std::size_t sink = 0;
};

// Vertices: the distinct symbols of w (ascending) followed by two sentinels.
WordGraph word_to_graph(const Word& w);

}  // namespace varpat
