#include "varpat/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "varpat/kernels.hpp"

namespace varpat {

namespace {

void require_loopless(const Multigraph& g) {
  for (const auto& [u, v] : g.edges) {
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > g.vertex_count || v > g.vertex_count) throw Error("edge endpoint out of range");
  }
}

bool connected(const Multigraph& g) {
  std::vector<std::size_t> parent(g.vertex_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);
  for (std::size_t v = 2; v <= g.vertex_count; ++v) {
    if (find(v) != find(1)) return false;
  }
  return true;
}

std::vector<std::size_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<std::size_t> out;
  std::string token;
  while (in >> token) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size() || token.front() == '-') throw ParseError("invalid number '" + token + "'", line_no, "line");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  Multigraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto numbers = parse_numbers(line, line_no);
    if (numbers.size() != 2) throw ParseError("expected two numbers", line_no, "line");
    if (!header) {
      g.vertex_count = numbers[0];
      expected = numbers[1];
      header = true;
      continue;
    }
    const auto [u, v] = std::pair{numbers[0], numbers[1]};
    if (u < 1 || v < 1 || u > g.vertex_count || v > g.vertex_count) {
      throw ParseError("vertex index out of range", line_no, "line");
    }
    if (u == v) throw ParseError("self-loop", line_no, "line");
    if (g.edges.size() == expected) throw ParseError("more edges than declared", line_no, "line");
    g.edges.emplace_back(u, v);
  }
  if (!header) throw ParseError("missing header", line_no + 1, "line");
  if (g.edges.size() != expected) throw ParseError("fewer edges than declared", line_no + 1, "line");
  return g;
}

std::string to_string(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count) + " " + std::to_string(g.edges.size()) + "\n";
  for (const auto& [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::size_t cutwidth_of(const Multigraph& g, const LinearArrangement& order) {
  std::vector<std::size_t> rank(g.vertex_count + 1, 0);
  for (std::size_t i = 0; i < order.order.size(); ++i) rank[order.order.at(i)] = i;
  std::size_t best = 0;
  for (std::size_t cut = 0; cut + 1 < order.order.size(); ++cut) {
    std::size_t crossing = 0;
    for (const auto& [u, v] : g.edges) crossing += (rank[u] <= cut) != (rank[v] <= cut);
    best = std::max(best, crossing);
  }
  return best;
}

CutwidthResult cutwidth_exact(const Multigraph& g) {
  if (g.vertex_count > kMaxCutwidthVertices) throw Error("graph too large for exact cutwidth");
  require_loopless(g);
  CutwidthResult r;
  if (g.vertex_count == 0) return r;
  std::vector<kernels::Edge> edges;
  for (const auto& [u, v] : g.edges) {
    edges.push_back({static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1)});
  }
  const auto f = kernels::cut_function(g.vertex_count, edges);
  const auto table = kernels::parallel::tabulate(f);
  const auto layout = kernels::parallel::minmax_layout(table, g.vertex_count);
  r.value = layout.value;
  for (const auto v : layout.order) r.witness.order.push_back(v + 1);
  return r;
}

PatternGraph standard_graph(const Pattern& p) {
  PatternGraph g;
  const auto s = p.symbols();
  g.vertex_count = s.size();
  std::map<VariableId, std::size_t> previous;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i > 1) g.neighbour_edges.emplace_back(i - 1, i);
    const Symbol& sym = s[i - 1];
    if (sym.is_terminal()) {
      g.terminal_vertices.push_back(i);
      continue;
    }
    if (auto it = previous.find(sym.value); it != previous.end()) {
      g.equality_edges.emplace_back(it->second, i);
      it->second = i;
    } else {
      previous.emplace(sym.value, i);
    }
  }
  std::sort(g.equality_edges.begin(), g.equality_edges.end());
  return g;
}

std::string to_dot(const Pattern& p, const PatternGraph& g) {
  std::ostringstream out;
  out << "graph pattern {\n";
  for (std::size_t i = 1; i <= g.vertex_count; ++i) {
    const Symbol& sym = p[i - 1];
    out << "  " << i << " [label=\"";
    if (sym.is_terminal()) {
      out << to_string(Word{sym.value}) << "\", style=filled, fillcolor=grey";
    } else {
      out << p.variable_name(sym.value) << "\"";
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.neighbour_edges) out << "  " << u << " -- " << v << ";\n";
  for (const auto& [u, v] : g.equality_edges) out << "  " << u << " -- " << v << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

std::vector<Word> graph_to_words(const Multigraph& g) {
  require_loopless(g);
  if (g.edges.empty()) throw Error("graph has no edges");
  if (!connected(g)) throw Error("graph is not connected");

  // Doubled edge list: copies 2e and 2e+1 of edge e.
  const std::size_t m = 2 * g.edges.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(g.vertex_count);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u, v] = g.edges[e / 2];
    adjacency[u - 1].emplace_back(e, v - 1);
    adjacency[v - 1].emplace_back(e, u - 1);
  }
  std::vector<bool> used(m, false);
  std::vector<std::size_t> next(g.vertex_count, 0);
  std::vector<std::size_t> stack{0}, circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    auto& k = next[v];
    while (k < adjacency[v].size() && used[adjacency[v][k].first]) ++k;
    if (k == adjacency[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[adjacency[v][k].first] = true;
      stack.push_back(adjacency[v][k].second);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();  // closed walk; keep one copy of the start

  std::vector<Word> words;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const auto at = static_cast<std::size_t>(std::find(circuit.begin(), circuit.end(), v) - circuit.begin());
    Word w;
    for (std::size_t i = 0; i <= circuit.size(); ++i) w.push_back(static_cast<Terminal>(circuit[(at + i) % circuit.size()]));
    words.push_back(std::move(w));
  }
  return words;
}

WordGraph word_to_graph(const Word& w) {
  WordGraph r;
  r.symbols = w;
  std::sort(r.symbols.begin(), r.symbols.end());
  r.symbols.erase(std::unique(r.symbols.begin(), r.symbols.end()), r.symbols.end());
  if (r.symbols.size() < 2) throw Error("word must contain at least two distinct symbols");
  auto vertex = [&](Terminal t) {
    return static_cast<std::size_t>(std::lower_bound(r.symbols.begin(), r.symbols.end(), t) - r.symbols.begin()) + 1;
  };
  r.source = r.symbols.size() + 1;
  r.sink = r.symbols.size() + 2;
  r.graph.vertex_count = r.symbols.size() + 2;
  r.graph.edges.emplace_back(r.source, vertex(w.front()));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != w[i + 1]) r.graph.edges.emplace_back(vertex(w[i]), vertex(w[i + 1]));
  }
  r.graph.edges.emplace_back(vertex(w.back()), r.sink);
  return r;
}

}  // namespace varpat
