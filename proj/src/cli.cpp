#include "varpat/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "varpat/equations.hpp"
#include "varpat/gapped.hpp"
#include "varpat/graph.hpp"
#include "varpat/matchers.hpp"
#include "varpat/serialize.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

constexpr std::size_t kDefaultEquationBound = 4;

struct Options {
  bool json = false;
  std::string pattern;
  std::string word;
  std::string mode = "nonerasing";
  bool injective = false;
  std::string algorithm = "auto";
  std::string path;
  bool dot = false;
  std::string alpha;
  bool palindrome = false;
  std::string equation;
  std::optional<std::size_t> max_len;
};

SubstitutionMode parse_mode(const std::string& text) {
  if (text == "erasing") return SubstitutionMode::erasing;
  if (text == "nonerasing" || text == "non-erasing") return SubstitutionMode::non_erasing;
  throw Error("unknown mode '" + text + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& out, std::string_view key, const std::string& value) {
  out << std::left << std::setw(22) << key << value << "\n";
}

std::string names_of(const MarkingSequence& sigma, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < sigma.order.size(); ++i) s += (i ? "," : "") + names.at(sigma.order[i]);
  return s + ")";
}

std::string letters_of(const MarkingSequence& sigma) {
  std::string s = "(";
  for (std::size_t i = 0; i < sigma.order.size(); ++i) s += (i ? "," : "") + to_string(Word{sigma.order[i]});
  return s + ")";
}

std::string vertices_of(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i] + 1);
  return s;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Pattern p = parse_pattern(o.pattern);
  const ClassReport r = classify(p);
  if (o.json) {
    out << to_json(r, p).dump(2) << "\n";
    return kExitOk;
  }
  row(out, "pattern", to_string(p));
  row(out, "variables", std::to_string(r.num_variables));
  row(out, "repeated variables", std::to_string(r.num_repeated_variables));
  row(out, "one-variable blocks", std::to_string(r.num_one_var_blocks));
  row(out, "scd", std::to_string(r.scd));
  row(out, "locality", r.locality ? std::to_string(*r.locality) + " " + names_of(*r.locality_witness, p.variable_names())
                                  : "not computed (too many variables)");
  row(out, "regular", yes_no(r.flags.is_regular));
  row(out, "non-cross", yes_no(r.flags.is_non_cross));
  row(out, "nested", yes_no(r.flags.is_nested));
  row(out, "strongly nested", yes_no(r.flags.is_strongly_nested));
  row(out, "closely entwined", yes_no(r.flags.is_closely_entwined));
  row(out, "mildly entwined", yes_no(r.flags.is_mildly_entwined));
  row(out, "repetition", r.repetition_structure
                             ? "root length " + std::to_string(r.repetition_structure->root_skeleton_length) +
                                   ", exponent " + std::to_string(r.repetition_structure->exponent)
                             : "none");
  return kExitOk;
}

int cmd_match(const Options& o, std::ostream& out) {
  const Pattern p = parse_pattern(o.pattern);
  const Word w = parse_word(o.word);
  MatchOptions opts;
  opts.mode = parse_mode(o.mode);
  opts.injective = o.injective;
  const auto algorithm = algorithm_from_string(o.algorithm);
  if (!algorithm) throw Error("unknown algorithm '" + o.algorithm + "'");
  opts.algorithm = *algorithm;
  const MatchResult r = match(p, w, opts);
  if (o.json) {
    out << to_json(r, p).dump(2) << "\n";
  } else {
    row(out, "matched", yes_no(r.matched));
    row(out, "algorithm", std::string(to_string(r.algorithm_used)));
    if (r.witness) {
      const Json images = to_json(*r.witness, p.symbols(), p.variable_names());
      for (const auto& [name, image] : images.items()) {
        const auto text = image.get<std::string>();
        row(out, "  " + name, text.empty() ? "()" : text);
      }
    }
    row(out, "states explored", std::to_string(r.stats.states_explored));
    row(out, "candidates tested", std::to_string(r.stats.candidates_tested));
  }
  return r.matched ? kExitOk : kExitNegative;
}

int cmd_loc(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const LocalityResult r = locality_number(w);
  if (o.json) {
    Json j;
    j["locality"] = r.k;
    Json witness = Json::array();
    for (const auto t : r.witness.order) witness.push_back(to_string(Word{t}));
    j["witness"] = std::move(witness);
    out << j.dump(2) << "\n";
  } else {
    row(out, "locality", std::to_string(r.k));
    row(out, "witness", letters_of(r.witness));
  }
  return kExitOk;
}

int cmd_cutwidth(const Options& o, std::ostream& out) {
  const Multigraph g = parse_graph(read_file(o.path));
  const CutwidthResult r = cutwidth_exact(g);
  if (o.json) {
    out << Json{{"cutwidth", r.value}, {"order", r.witness.order}}.dump(2) << "\n";
  } else {
    std::string order;
    for (const auto v : r.witness.order) order += (order.empty() ? "" : " ") + std::to_string(v);
    row(out, "cutwidth", std::to_string(r.value));
    row(out, "order", order);
  }
  return kExitOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const Pattern p = parse_pattern(o.pattern);
  const PatternGraph g = standard_graph(p);
  if (o.dot) {
    out << to_dot(p, g);
  } else if (o.json) {
    out << to_json(g).dump(2) << "\n";
  } else {
    auto edges = [](const std::vector<GraphEdge>& list) {
      std::string s;
      for (const auto& [u, v] : list) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
      return s;
    };
    std::string grey;
    for (const auto v : g.terminal_vertices) grey += (grey.empty() ? "" : " ") + std::to_string(v);
    row(out, "vertices", std::to_string(g.vertex_count));
    row(out, "neighbour edges", edges(g.neighbour_edges));
    row(out, "equality edges", edges(g.equality_edges));
    row(out, "terminal vertices", grey);
  }
  return kExitOk;
}

int cmd_word2graph(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const WordGraph g = word_to_graph(w);
  if (o.json) {
    Json j = to_json(g.graph);
    Json symbols = Json::array();
    for (const auto t : g.symbols) symbols.push_back(to_string(Word{t}));
    j["symbols"] = std::move(symbols);
    j["source"] = g.source;
    j["sink"] = g.sink;
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t v = 1; v <= g.symbols.size(); ++v) out << "# " << v << " = " << to_string(Word{g.symbols[v - 1]}) << "\n";
    out << "# " << g.source << " = source\n# " << g.sink << " = sink\n" << to_string(g.graph);
  }
  return kExitOk;
}

int cmd_graph2word(const Options& o, std::ostream& out) {
  const Multigraph g = parse_graph(read_file(o.path));
  const auto words = graph_to_words(g);
  const bool exact = g.vertex_count <= kMaxLocalitySymbols;
  std::optional<std::size_t> best;
  Json list = Json::array();
  for (std::size_t v = 0; v < words.size(); ++v) {
    std::vector<std::size_t> seq;
    for (const auto t : words[v]) seq.push_back(t + 1);
    Json entry{{"start", v + 1}, {"word", seq}};
    if (exact) {
      const std::size_t k = locality_number(words[v]).k;
      best = best ? std::min(*best, k) : k;
      entry["locality"] = k;
      if (!o.json) out << v + 1 << ": " << vertices_of(words[v]) << "  (locality " << k << ")\n";
    } else {
      entry["locality"] = nullptr;
      if (!o.json) out << v + 1 << ": " << vertices_of(words[v]) << "\n";
    }
    list.push_back(std::move(entry));
  }
  if (o.json) {
    out << Json{{"words", list}, {"minLocality", best ? Json(*best) : Json(nullptr)}}.dump(2) << "\n";
  } else if (best) {
    row(out, "min locality", std::to_string(*best));
  }
  return kExitOk;
}

int cmd_gapped(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const Ratio alpha = parse_ratio(o.alpha);
  const auto list = o.palindrome ? find_maximal_gapped_palindromes(w, alpha) : find_maximal_gapped_repeats(w, alpha);
  if (o.json) {
    out << to_json(list).dump(2) << "\n";
  } else {
    out << std::left << std::setw(8) << "start" << std::setw(8) << "arm" << std::setw(8) << "gap" << "kind\n";
    for (const auto& g : list) {
      out << std::setw(8) << g.start << std::setw(8) << g.arm_length << std::setw(8) << g.gap_length
          << to_string(g.kind) << "\n";
    }
  }
  return kExitOk;
}

int cmd_equation(const Options& o, std::ostream& out) {
  const Equation e = parse_equation(o.equation);
  const SubstitutionMode mode = parse_mode(o.mode);
  const EquationClassReport classes = classify_equation(e);

  std::size_t distinct = 0;
  {
    std::vector<bool> seen(e.names.size(), false);
    for (const auto* side : {&e.lhs, &e.rhs}) {
      for (const Symbol& s : *side) {
        if (s.is_variable() && !seen[s.value]) {
          seen[s.value] = true;
          ++distinct;
        }
      }
    }
  }

  std::string solver, verdict;
  std::optional<Substitution> witness;
  std::optional<std::size_t> bound;
  if (distinct == 1 && !o.max_len) {
    const auto r = solve_one_variable(e, mode);
    solver = "one-variable";
    verdict = std::string(to_string(r.verdict));
    witness = r.witness;
    bound = r.bound;
  } else {
    const std::size_t limit = o.max_len.value_or(kDefaultEquationBound);
    const auto r = solve_bounded(e, limit, mode);
    solver = "bounded";
    verdict = r.witness ? "sat" : "none-within-bound";
    witness = r.witness;
    bound = limit;
  }

  SymbolSeq both = e.lhs;
  both.insert(both.end(), e.rhs.begin(), e.rhs.end());
  if (o.json) {
    Json j;
    j["equation"] = to_string(e);
    j["classes"] = to_json(classes);
    j["solver"] = solver;
    j["verdict"] = verdict;
    j["witness"] = witness ? to_json(*witness, both, e.names) : Json(nullptr);
    j["bound"] = bound ? Json(*bound) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    row(out, "equation", to_string(e));
    row(out, "quadratic", yes_no(classes.is_quadratic));
    row(out, "regular (both sides)", yes_no(classes.is_regular_both_sides));
    row(out, "regular ordered", yes_no(classes.is_regular_ordered));
    row(out, "non-cross (both)", yes_no(classes.is_non_cross_both_sides));
    row(out, "one repeated variable", yes_no(classes.is_one_repeated_variable));
    row(out, "solver", solver);
    row(out, "verdict", verdict);
    if (bound) row(out, "bound", std::to_string(*bound));
    if (witness) {
      const Json images = to_json(*witness, both, e.names);
      for (const auto& [name, image] : images.items()) {
        const auto text = image.get<std::string>();
        row(out, "  " + name, text.empty() ? "()" : text);
      }
    }
  }
  return verdict == "sat" ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pattern matching with variables: structure analysis, matching, reductions", "varpat"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Write JSON to stdout");

  auto* analyze = app.add_subcommand("analyze", "Structural parameters and class memberships of a pattern");
  analyze->add_option("pattern", o.pattern, "Pattern, e.g. [x1]a[x2][x1]")->required();

  auto* match_cmd = app.add_subcommand("match", "Match a pattern against a word");
  match_cmd->add_option("pattern", o.pattern)->required();
  match_cmd->add_option("word", o.word)->required();
  match_cmd->add_option("--mode", o.mode, "erasing or nonerasing")->check(CLI::IsMember({"erasing", "nonerasing", "non-erasing"}));
  match_cmd->add_flag("--injective", o.injective, "Require distinct images");
  match_cmd->add_option("--algorithm", o.algorithm, "auto, brute, regular, noncross, scd, repvar, local, repetition")
      ->check(CLI::IsMember({"auto", "brute", "regular", "noncross", "scd", "repvar", "local", "repetition"}));

  auto* loc = app.add_subcommand("loc", "Locality number of a word");
  loc->add_option("word", o.word)->required();

  auto* cutwidth = app.add_subcommand("cutwidth", "Exact cutwidth of a multigraph file");
  cutwidth->add_option("graphfile", o.path)->required();

  auto* graph = app.add_subcommand("graph", "Standard graph representation of a pattern");
  graph->add_option("pattern", o.pattern)->required();
  graph->add_flag("--dot", o.dot, "Write Graphviz DOT");

  auto* reduce = app.add_subcommand("reduce", "Reductions between words and graphs");
  reduce->require_subcommand(1, 1);
  auto* word2graph = reduce->add_subcommand("word2graph", "Graph whose cutwidth brackets twice the locality");
  word2graph->add_option("word", o.word)->required();
  auto* graph2word = reduce->add_subcommand("graph2word", "Words whose least locality is the cutwidth");
  graph2word->add_option("graphfile", o.path)->required();

  auto* gapped = app.add_subcommand("gapped", "Maximal alpha-gapped repeats or palindromes");
  gapped->add_option("word", o.word)->required();
  gapped->add_option("--alpha", o.alpha, "Ratio p/q >= 1")->required();
  gapped->add_flag("--palindrome", o.palindrome, "Report palindromes u v u^R");

  auto* equation = app.add_subcommand("equation", "Classify and solve a word equation lhs=rhs");
  equation->add_option("equation", o.equation)->required();
  equation->add_option("--max-len", o.max_len, "Bound on image lengths for the bounded solver");
  equation->add_option("--mode", o.mode, "erasing or nonerasing")->check(CLI::IsMember({"erasing", "nonerasing", "non-erasing"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (match_cmd->parsed()) return cmd_match(o, out);
    if (loc->parsed()) return cmd_loc(o, out);
    if (cutwidth->parsed()) return cmd_cutwidth(o, out);
    if (graph->parsed()) return cmd_graph(o, out);
    if (word2graph->parsed()) return cmd_word2graph(o, out);
    if (graph2word->parsed()) return cmd_graph2word(o, out);
    if (gapped->parsed()) return cmd_gapped(o, out);
    if (equation->parsed()) return cmd_equation(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace varpat
