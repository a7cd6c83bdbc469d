// Acceptance suite: one PASS/FAIL line per criterion. Run with criterion
// numbers as arguments to select a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "varpat/equations.hpp"
#include "varpat/gapped.hpp"
#include "varpat/graph.hpp"
#include "varpat/matchers.hpp"
#include "varpat/structure.hpp"

using namespace varpat;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kPointChecksSeconds = 1.0;
constexpr double kRegularSeconds = 1.0;
constexpr double kNonCrossSeconds = 30.0;
constexpr double kCutwidthSeconds = 60.0;
constexpr std::size_t kAllowedMismatches = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t failures = 0;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 10) std::cerr << "  mismatch: " << what << "\n";
    ++failures;
    pass = false;
  }
};

std::string image_of(const MatchResult& r, const Pattern& p, std::string_view name) {
  if (!r.witness) return "<none>";
  const auto& names = p.variable_names();
  const auto id = static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
  return to_display(r.witness->images.at(id));
}

// ---- 1 ---------------------------------------------------------------------

void point_checks(Outcome& o) {
  const auto t0 = Clock::now();
  const Pattern beta = parse_pattern("[x1]a[x2]b[x2][x1][x2]");
  const auto u = match(beta, parse_word("bacbabbbbacbb"));
  o.require(u.matched && image_of(u, beta, "x1") == "bacb" && image_of(u, beta, "x2") == "b", "example 1, u");
  const auto v = match(beta, parse_word("abaabbababab"));
  o.require(v.matched && apply_substitution(beta, *v.witness) == parse_word("abaabbababab"), "example 1, v");
  const auto vb = match_brute(beta, parse_word("abaabbababab"));
  o.require(vb.matched && image_of(vb, beta, "x1") == "ab" && image_of(vb, beta, "x2") == "ab", "example 1, v brute");
  const Word w = parse_word("acbbcbcb");
  o.require(!match(beta, w).matched, "example 1, w non-erasing");
  const auto we = match(beta, w, {SubstitutionMode::erasing});
  o.require(we.matched && image_of(we, beta, "x1") == "()" && image_of(we, beta, "x2") == "cb", "example 1, w erasing");

  o.require(scope_coincidence_degree(parse_pattern("[x1][x2][x1][x3][x2][x3][x1][x2][x3]")) == 3, "scd(alpha1)");
  o.require(scope_coincidence_degree(parse_pattern("[x1][x2][x1][x1][x2][x3][x2][x3][x3]")) == 2, "scd(alpha2)");

  const Word ag = parse_word("agagcac");
  const auto loc = locality_number(ag);
  o.require(loc.k == 2 && loc.witness.order == parse_word("gac"), "loc(agagcac)");
  o.require(marking_number(ag, MarkingSequence{parse_word("agc")}) == 3, "marking number of (a,g,c)");

  const auto blocks = one_variable_blocks(parse_pattern("[x1][x2][x2]a[x2][x2][x2][x3]a[x3][x2][x2][x3][x3]"));
  o.require(blocks.blocks.size() == 7, "7-block decomposition");

  o.require(period(parse_word("abacabacabacabacab")) == 4, "period");

  const auto g = standard_graph(parse_pattern("[x1][x2][x3]bb[x2][x1]a[x2][x3][x2]c[x1]"));
  std::vector<GraphEdge> eq = g.equality_edges;
  std::sort(eq.begin(), eq.end());
  std::vector<GraphEdge> neighbours;
  for (std::size_t i = 1; i < 13; ++i) neighbours.emplace_back(i, i + 1);
  o.require(g.neighbour_edges == neighbours, "figure 1 neighbour edges");
  o.require(eq == std::vector<GraphEdge>{{1, 7}, {2, 6}, {3, 10}, {6, 9}, {7, 13}, {9, 11}}, "figure 1 equality edges");

  const Pattern sat = parse_pattern("[x1][x2][x3]b[x2][x4][x5]b[x3][x1][x3]b[x4][x1][x2]");
  const auto s = match(sat, parse_word("abababa"), {SubstitutionMode::erasing});
  o.require(s.matched, "satisfiability instance");

  const double elapsed = seconds_since(t0);
  o.require(elapsed < kPointChecksSeconds, "point checks took too long");
  o.detail << "13 checks in " << elapsed << " s (limit " << kPointChecksSeconds << " s)";
}

// ---- 2 ---------------------------------------------------------------------

struct Contender {
  std::string name;
  std::function<MatchResult(const Word&)> run;
};

std::vector<Contender> contenders(const Pattern& p) {
  std::vector<Contender> out;
  out.push_back({"auto", [&p](const Word& w) { return match(p, w); }});
  if (!p.has_variables()) return out;
  const ClassReport r = classify(p);
  if (r.flags.is_regular) out.push_back({"regular", [&p](const Word& w) { return match_regular(p, w); }});
  if (r.flags.is_non_cross) out.push_back({"noncross", [&p](const Word& w) { return match_non_cross(p, w); }});
  const std::size_t k_scd = std::max<std::size_t>(1, r.scd);
  if (k_scd <= kMaxScdParameter) {
    out.push_back({"scd", [&p, k_scd](const Word& w) { return match_scd(p, w, k_scd); }});
  }
  const std::size_t k_rep = std::max<std::size_t>(1, r.num_repeated_variables);
  out.push_back({"repvar", [&p, k_rep](const Word& w) { return match_repvar(p, w, k_rep); }});
  if (r.locality && *r.locality <= kMaxLocalParameter) {
    const std::size_t k = *r.locality;
    const MarkingSequence sigma = *r.locality_witness;
    out.push_back({"local", [&p, k, sigma](const Word& w) { return match_k_local(p, w, k, sigma); }});
  }
  if (auto rep = as_repetition(p)) {
    auto beta = std::make_shared<Pattern>(rep->first);
    const std::size_t k = rep->second;
    out.push_back({"repetition", [beta, k](const Word& w) { return match_repetition(*beta, k, w); }});
  }
  return out;
}

void oracle_grid(Outcome& o) {
  std::vector<Word> words;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (auto& w : oracle::all_words(n, 2)) words.push_back(std::move(w));
  }
  std::size_t patterns = 0, instances = 0, comparisons = 0;
  std::map<std::string, std::size_t> per_matcher;
  oracle::for_each_pattern(8, 2, 3, [&](const Pattern& p) {
    if (++patterns % 10000 == 0) std::cerr << "  grid: " << patterns << " patterns" << std::endl;
    const auto list = contenders(p);
    for (const auto& c : list) per_matcher[c.name] += words.size();
    comparisons += list.size() * words.size();
    for (const Word& w : words) {
      ++instances;
      const bool expect = match_brute(p, w).matched;
      for (const auto& c : list) {
        bool got = false;
        try {
          got = c.run(w).matched;
        } catch (const std::exception& e) {
          o.require(false, c.name + " threw " + e.what() + " on " + to_string(p) + " / " + to_display(w));
          continue;
        }
        if (got != expect) o.require(false, c.name + " on " + to_string(p) + " / " + to_display(w));
      }
    }
  });
  o.pass = o.failures <= kAllowedMismatches;
  o.detail << patterns << " patterns x " << words.size() << " words = " << instances << " instances, " << comparisons
           << " comparisons (";
  bool first = true;
  for (const auto& [name, count] : per_matcher) {
    o.detail << (first ? "" : ", ") << name << " " << count;
    first = false;
  }
  o.detail << "), " << o.failures << " mismatches";
}

// ---- 3 ---------------------------------------------------------------------

Word canonical(const Word& w) {
  std::map<Terminal, Terminal> rename;
  Word out;
  for (const auto c : w) out.push_back(rename.try_emplace(c, static_cast<Terminal>(rename.size())).first->second);
  return out;
}

void locality_grid(Outcome& o) {
  std::map<Word, std::size_t> cache;
  std::size_t words = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Word& w : oracle::all_words(n, 5)) {
      ++words;
      const Word c = canonical(w);
      auto it = cache.find(c);
      if (it == cache.end()) it = cache.emplace(c, oracle::locality(c)).first;
      const auto loc = locality_number(w);
      const bool ok = loc.k == it->second && oracle::marking_number(w, loc.witness.order) == loc.k;
      o.require(ok, "locality of " + to_display(w));
    }
  }
  o.detail << words << " words (" << cache.size() << " up to renaming), " << o.failures << " mismatches";
}

// ---- 4 ---------------------------------------------------------------------

bool connected(const Multigraph& g) {
  std::vector<std::size_t> parent(g.vertex_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);
  for (std::size_t v = 2; v <= g.vertex_count; ++v) {
    if (find(v) != find(1)) return false;
  }
  return true;
}

void check_bridge(Outcome& o, const Multigraph& g) {
  const std::size_t cw = cutwidth_exact(g).value;
  std::size_t best = SIZE_MAX;
  for (const Word& w : graph_to_words(g)) best = std::min(best, locality_number(w).k);
  o.require(cw == best, "graph " + to_string(g) + ": cutwidth " + std::to_string(cw) + " vs locality " +
                            std::to_string(best));
}

void cutwidth_bridge(Outcome& o) {
  std::size_t multigraphs = 0, simple = 0, words = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<GraphEdge> pairs;
    for (std::size_t u = 1; u <= n; ++u)
      for (std::size_t v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    Multigraph g{n, {}};
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (!g.edges.empty() && connected(g)) {
        ++multigraphs;
        check_bridge(o, g);
      }
      if (g.edges.size() == 6) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        g.edges.push_back(pairs[i]);
        grow(i);
        g.edges.pop_back();
      }
    };
    grow(0);
  }
  {
    std::vector<GraphEdge> pairs;
    for (std::size_t u = 1; u <= 5; ++u)
      for (std::size_t v = u + 1; v <= 5; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      Multigraph g{5, {}};
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) g.edges.push_back(pairs[i]);
      }
      if (!connected(g)) continue;
      ++simple;
      check_bridge(o, g);
    }
  }
  const std::size_t before = o.failures;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Word& w : oracle::all_words(n, 4)) {
      if (std::all_of(w.begin(), w.end(), [&](Terminal t) { return t == w[0]; })) continue;
      ++words;
      const std::size_t loc = locality_number(w).k;
      const std::size_t cw = cutwidth_exact(word_to_graph(w).graph).value;
      o.require(cw + 2 >= 2 * loc && cw <= 2 * loc, "bracket violated on " + to_display(w));
    }
  }
  o.detail << multigraphs << " connected multigraphs (n <= 4, |E| <= 6), " << simple
           << " connected simple graphs (n = 5), " << words << " words for the bracket; "
           << before << " bridge mismatches, " << o.failures - before
           << " bracket violations";
}

// ---- 5 ---------------------------------------------------------------------

void gapped_grid(Outcome& o) {
  std::size_t words = 0;
  for (std::size_t n = 2; n <= 14; ++n) {
    for (const Word& w : oracle::all_words(n, 2)) {
      ++words;
      for (const Ratio a : {Ratio{1, 1}, Ratio{3, 2}, Ratio{2, 1}}) {
        o.require(find_maximal_gapped_repeats(w, a) == oracle::gapped_repeats(w, a),
                  "repeats of " + to_display(w) + " alpha " + to_string(a));
        o.require(find_maximal_gapped_palindromes(w, a) == oracle::gapped_palindromes(w, a),
                  "palindromes of " + to_display(w) + " alpha " + to_string(a));
      }
    }
  }
  const std::size_t grid_failures = o.failures;
  std::mt19937_64 rng(20240601);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    Word w(2 + rng() % 199);
    const std::uint32_t sigma = 2 + static_cast<std::uint32_t>(rng() % 3);
    for (auto& c : w) c = static_cast<Terminal>(rng() % sigma);
    for (std::uint64_t alpha = 1; alpha <= 4; ++alpha) {
      const std::size_t count = find_maximal_gapped_repeats(w, {alpha, 1}).size();
      const std::size_t bound = 18 * alpha * w.size();
      worst = std::max(worst, static_cast<double>(count) / static_cast<double>(bound));
      o.require(count <= bound, "count bound on a random word");
    }
  }
  o.detail << words << " words x 3 ratios x 2 kinds, " << grid_failures << " mismatches; 10000 random words x alpha 1..4, "
           << o.failures - grid_failures << " bound violations (largest count/bound " << worst << ")";
}

// ---- 6 ---------------------------------------------------------------------

Word random_word(std::mt19937_64& rng, std::size_t n, std::uint32_t sigma, Terminal offset = 0) {
  Word w(n);
  for (auto& c : w) c = offset + static_cast<Terminal>(rng() % sigma);
  return w;
}

void performance(Outcome& o) {
  std::mt19937_64 rng(7);
  {
    const Pattern p = parse_pattern("[x1]abca[x2]ddcb[x3]aadb[x4]c[x5]");
    Word w = random_word(rng, 1000000, 4);
    const auto t0 = Clock::now();
    const auto r = match_regular(p, w);
    const double t = seconds_since(t0);
    o.require(t < kRegularSeconds, "regular matching too slow");
    o.detail << "regular |w|=1e6 " << t << " s (" << (r.matched ? "match" : "no match") << ", limit " << kRegularSeconds
             << " s); ";
  }
  {
    // Five variables, two one-variable blocks each, separated by "cd"; the
    // images avoid c and d.
    const Pattern p = parse_pattern("[x1]a[x1]cd[x2]b[x2]cd[x3]a[x3]cd[x4]b[x4]cd[x5]a[x5]b");
    constexpr std::size_t target = 100000;
    const std::size_t free = target - p.terminal_count();
    Substitution h{std::vector<Word>(p.table_size())};
    for (auto& img : h.images) img = random_word(rng, free / 10, 2);
    h.images.back().resize(h.images.back().size() + (free - 10 * (free / 10)) / 2, 0);
    const Word w = apply_substitution(p, h);
    o.require(w.size() == target, "non-cross instance has the wrong length");
    const auto t0 = Clock::now();
    const auto r = match_non_cross(p, w);
    const double t = seconds_since(t0);
    o.require(r.matched, "planted non-cross instance not matched");
    o.require(t < kNonCrossSeconds, "non-cross matching too slow");
    o.detail << "non-cross |w|=" << w.size() << ", " << one_variable_blocks(p).blocks.size() << " blocks " << t
             << " s (limit " << kNonCrossSeconds << " s); ";
  }
  {
    Multigraph g{16, {}};
    for (std::size_t u = 1; u <= 16; ++u) {
      for (int e = 0; e < 3; ++e) {
        const std::size_t v = 1 + rng() % 16;
        if (v != u) g.edges.emplace_back(u, v);
      }
    }
    const auto t0 = Clock::now();
    const auto r = cutwidth_exact(g);
    const double t = seconds_since(t0);
    o.require(t < kCutwidthSeconds && cutwidth_of(g, r.witness) == r.value, "cutwidth n=16");
    o.detail << "cutwidth n=16, |E|=" << g.edges.size() << " " << t << " s (limit " << kCutwidthSeconds << " s)";
  }
}

// ---- 7 ---------------------------------------------------------------------

// Smallest L for which some substitution with images over {a, b} of length
// <= L solves the equation, by plain enumeration; SIZE_MAX if none up to 3.
std::size_t enumerate_equation(const Equation& e, std::size_t vars, SubstitutionMode mode) {
  std::vector<Word> candidates;
  for (std::size_t n = mode == SubstitutionMode::erasing ? 0 : 1; n <= 3; ++n) {
    for (auto& w : oracle::all_words(n, 2)) candidates.push_back(std::move(w));
  }
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> idx(vars, 0);
  Substitution h{std::vector<Word>(std::max<std::size_t>(vars, 1)), mode};
  while (true) {
    std::size_t longest = 0;
    for (std::size_t v = 0; v < vars; ++v) {
      h.images[v] = candidates[idx[v]];
      longest = std::max(longest, h.images[v].size());
    }
    if (longest < best && apply_substitution(e.lhs, h) == apply_substitution(e.rhs, h)) best = longest;
    std::size_t v = 0;
    while (v < vars && ++idx[v] == candidates.size()) idx[v++] = 0;
    if (v == vars) break;
  }
  return best;
}

void equations(Outcome& o) {
  // Equations with |lhs| + |rhs| <= 8 over a, b, x1, x2 (variables numbered by
  // first occurrence in lhs . rhs).
  std::size_t count = 0;
  SymbolSeq all;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
    for (std::size_t split = 0; split <= all.size(); ++split) {
      Equation e{SymbolSeq(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(split)),
                 SymbolSeq(all.begin() + static_cast<std::ptrdiff_t>(split), all.end()), {"x1", "x2"}};
      e.names.resize(used);
      ++count;
      for (const auto mode : {SubstitutionMode::erasing, SubstitutionMode::non_erasing}) {
        const std::size_t least = enumerate_equation(e, used, mode);
        for (std::size_t L = 0; L <= 3; ++L) {
          const auto got = solve_bounded(e, L, mode);
          bool ok = got.witness.has_value() == (least <= L);
          if (got.witness) {
            ok = ok && apply_substitution(e.lhs, *got.witness) == apply_substitution(e.rhs, *got.witness);
            for (VariableId v = 0; v < used; ++v) {
              ok = ok && got.witness->images[v].size() <= L &&
                   (mode == SubstitutionMode::erasing || !got.witness->images[v].empty());
            }
          }
          o.require(ok, "equation " + to_string(e) + " L=" + std::to_string(L));
        }
      }
    }
    if (all.size() == 8) return;
    for (std::uint32_t t = 0; t < 2; ++t) {
      all.push_back(Symbol::terminal(t));
      rec(used);
      all.pop_back();
    }
    for (std::uint32_t v = 0; v <= used && v < 2; ++v) {
      all.push_back(Symbol::variable(v));
      rec(std::max(used, v + 1));
      all.pop_back();
    }
  };
  rec(0);
  const std::size_t grid_failures = o.failures;

  const Equation family = parse_equation("[x1]ab[x2]=a[x1][x2]b");
  std::set<std::pair<Word, Word>> solutions;
  std::vector<Word> short_words;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (auto& w : oracle::all_words(n, 2)) short_words.push_back(std::move(w));
  }
  for (const Word& a : short_words) {
    for (const Word& b : short_words) {
      const Substitution h{{a, b}, SubstitutionMode::erasing};
      if (apply_substitution(family.lhs, h) == apply_substitution(family.rhs, h)) solutions.insert({a, b});
    }
  }
  std::set<std::pair<Word, Word>> expected;
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l) expected.insert({Word(k, 0), Word(l, 1)});
  o.require(solutions == expected, "solution family of the example equation");
  for (std::size_t L = 0; L <= 2; ++L) {
    for (const auto mode : {SubstitutionMode::erasing, SubstitutionMode::non_erasing}) {
      if (mode == SubstitutionMode::non_erasing && L == 0) continue;
      const auto r = solve_bounded(family, L, mode);
      o.require(r.witness && expected.count({r.witness->images[0], r.witness->images[1]}) == 1,
                "solve_bounded on the example equation, L=" + std::to_string(L));
    }
  }
  const auto report = classify_equation(parse_equation("[x1]a[x2]ba[x3][x4]=b[x1][x3]aa[x4]"));
  o.require(report.is_regular_ordered, "regular-ordered example");

  o.detail << count << " equations x 2 modes x L 0..3, " << grid_failures << " mismatches; family (a^k, b^l) for k,l <= 2 "
           << (solutions == expected ? "exact" : "wrong") << "; regular-ordered example "
           << (report.is_regular_ordered ? "accepted" : "rejected");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"literature point checks", point_checks},
      {"oracle equivalence grid", oracle_grid},
      {"locality DP vs permutation brute force", locality_grid},
      {"cutwidth bridge and word-graph bracket", cutwidth_bridge},
      {"gapped repeats and palindromes", gapped_grid},
      {"performance smoke", performance},
      {"equation suite", equations},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(number)) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << "criterion " << number << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " | "
              << o.detail.str() << " | " << seconds_since(t0) << " s" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
