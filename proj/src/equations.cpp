#include "varpat/equations.hpp"

#include <algorithm>
#include <numeric>

#include "varpat/structure.hpp"

namespace varpat {

namespace {

std::vector<std::size_t> counts_of(std::span<const Symbol> s, std::size_t table) {
  std::vector<std::size_t> counts(table, 0);
  for (const Symbol& sym : s) {
    if (sym.is_variable()) ++counts[sym.value];
  }
  return counts;
}

std::size_t terminals_of(std::span<const Symbol> s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](const Symbol& x) { return x.is_terminal(); }));
}

Word alphabet_of(const Equation& e) {
  Word letters;
  for (const auto* side : {&e.lhs, &e.rhs}) {
    for (const Symbol& s : *side) {
      if (s.is_terminal()) letters.push_back(s.value);
    }
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  if (letters.empty()) letters.push_back(terminal_from_char('a', 0));
  return letters;
}

std::vector<VariableId> order_on(std::span<const Symbol> s, const std::vector<bool>& keep) {
  std::vector<VariableId> out;
  for (const Symbol& sym : s) {
    if (sym.is_variable() && keep[sym.value]) out.push_back(sym.value);
  }
  return out;
}

class BoundedSearch {
 public:
  BoundedSearch(const Equation& e, std::size_t max_len, SubstitutionMode mode)
      : e_(e), max_len_(max_len), min_len_(mode == SubstitutionMode::erasing ? 0 : 1), mode_(mode),
        alphabet_(alphabet_of(e)), images_(e.names.size()), assigned_(e.names.size(), false),
        partial_(e.names.size(), false) {
    const auto l = counts_of(e.lhs, e.names.size());
    const auto r = counts_of(e.rhs, e.names.size());
    for (VariableId x = 0; x < e.names.size(); ++x) {
      if (l[x] + r[x] > 0) vars_.push_back(x);
      weight_.push_back(static_cast<std::ptrdiff_t>(l[x]) - static_cast<std::ptrdiff_t>(r[x]));
    }
    base_difference_ = static_cast<std::ptrdiff_t>(terminals_of(e.lhs)) - static_cast<std::ptrdiff_t>(terminals_of(e.rhs));
  }

  std::optional<Substitution> run() {
    if (!lengths_feasible(0)) return std::nullopt;
    if (assign(0)) return Substitution{images_, mode_};
    return std::nullopt;
  }

  std::size_t states = 0;

 private:
  // Length balance: can the remaining variables (from index i on) still make
  // both sides equally long?
  bool lengths_feasible(std::size_t i) const {
    std::ptrdiff_t lo = base_difference_, hi = base_difference_;
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      const auto w = weight_[vars_[j]];
      if (j < i) {
        lo += w * static_cast<std::ptrdiff_t>(images_[vars_[j]].size());
        hi += w * static_cast<std::ptrdiff_t>(images_[vars_[j]].size());
      } else {
        const auto a = w * static_cast<std::ptrdiff_t>(min_len_), b = w * static_cast<std::ptrdiff_t>(max_len_);
        lo += std::min(a, b);
        hi += std::max(a, b);
      }
    }
    return lo <= 0 && 0 <= hi;
  }

  // Expansion of a side up to the first variable whose image is not fully
  // known; a partially known image contributes its known prefix.
  Word known_prefix(const SymbolSeq& side) const {
    Word out;
    for (const Symbol& s : side) {
      if (s.is_terminal()) {
        out.push_back(s.value);
        continue;
      }
      if (!assigned_[s.value] && !partial_[s.value]) break;
      out.insert(out.end(), images_[s.value].begin(), images_[s.value].end());
      if (partial_[s.value]) break;
    }
    return out;
  }

  Word known_suffix(const SymbolSeq& side) const {
    Word out;
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
      if (it->is_terminal()) {
        out.push_back(it->value);
        continue;
      }
      if (!assigned_[it->value]) break;
      out.insert(out.end(), images_[it->value].rbegin(), images_[it->value].rend());
    }
    return out;
  }

  static bool agree(const Word& a, const Word& b) {
    const std::size_t k = std::min(a.size(), b.size());
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), b.begin());
  }

  bool consistent(bool check_suffix) const {
    if (!agree(known_prefix(e_.lhs), known_prefix(e_.rhs))) return false;
    return !check_suffix || agree(known_suffix(e_.lhs), known_suffix(e_.rhs));
  }

  bool assign(std::size_t i) {
    ++states;
    if (i == vars_.size()) {
      return apply_substitution(e_.lhs, Substitution{images_, mode_}) ==
             apply_substitution(e_.rhs, Substitution{images_, mode_});
    }
    const VariableId x = vars_[i];
    for (std::size_t len = min_len_; len <= max_len_; ++len) {
      if (!lengths_feasible_with(i, len)) continue;
      images_[x].clear();
      partial_[x] = true;
      if (fill(i, x, len)) return true;
      partial_[x] = false;
      images_[x].clear();
    }
    return false;
  }

  bool lengths_feasible_with(std::size_t i, std::size_t len) {
    images_[vars_[i]].assign(len, alphabet_.front());
    const bool ok = lengths_feasible(i + 1);
    images_[vars_[i]].clear();
    return ok;
  }

  // Extends the image of x letter by letter, pruning on known prefixes.
  bool fill(std::size_t i, VariableId x, std::size_t len) {
    ++states;
    if (images_[x].size() == len) {
      partial_[x] = false;
      assigned_[x] = true;
      if (consistent(true) && assign(i + 1)) return true;
      assigned_[x] = false;
      partial_[x] = true;
      return false;
    }
    for (const Terminal t : alphabet_) {
      images_[x].push_back(t);
      if (consistent(false) && fill(i, x, len)) return true;
      images_[x].pop_back();
    }
    return false;
  }

  const Equation& e_;
  std::size_t max_len_;
  std::size_t min_len_;
  SubstitutionMode mode_;
  Word alphabet_;
  std::vector<Word> images_;
  std::vector<bool> assigned_;
  std::vector<bool> partial_;
  std::vector<VariableId> vars_;
  std::vector<std::ptrdiff_t> weight_;
  std::ptrdiff_t base_difference_ = 0;
};

// Image of length len solving e, if any: positions of both expansions are
// unified; every class holds at most one terminal.
std::optional<Word> solve_at_length(const Equation& e, std::size_t len, Terminal filler) {
  // Nodes 0..len-1 are image positions; terminals follow, offset by len.
  Terminal max_terminal = filler;
  for (const auto* side : {&e.lhs, &e.rhs}) {
    for (const Symbol& s : *side) {
      if (s.is_terminal()) max_terminal = std::max(max_terminal, s.value);
    }
  }
  std::vector<std::size_t> parent(len + max_terminal + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  auto expand = [&](const SymbolSeq& side) {
    std::vector<std::size_t> nodes;
    for (const Symbol& s : side) {
      if (s.is_terminal()) {
        nodes.push_back(len + s.value);
      } else {
        for (std::size_t k = 0; k < len; ++k) nodes.push_back(k);
      }
    }
    return nodes;
  };
  const auto left = expand(e.lhs), right = expand(e.rhs);
  if (left.size() != right.size()) return std::nullopt;
  for (std::size_t k = 0; k < left.size(); ++k) {
    auto a = find(left[k]), b = find(right[k]);
    if (a == b) continue;
    if (a >= len && b >= len) return std::nullopt;  // two distinct terminals
    // Keep a terminal as the representative.
    if (a >= len) std::swap(a, b);
    parent[a] = b;
  }
  Word image(len);
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t root = find(k);
    image[k] = root >= len ? static_cast<Terminal>(root - len) : filler;
  }
  return image;
}

}  // namespace

Equation parse_equation(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '='", text.size() + 1);
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("unexpected '='", text.find('=', eq + 1) + 1);
  }
  Equation e;
  e.lhs = parse_symbols(text.substr(0, eq), e.names, true, 0);
  e.rhs = parse_symbols(text.substr(eq + 1), e.names, true, eq + 1);
  return e;
}

std::string to_string(const Equation& e) { return to_string(e.lhs, e.names) + "=" + to_string(e.rhs, e.names); }

EquationClassReport classify_equation(const Equation& e) {
  EquationClassReport r;
  const std::size_t table = e.names.size();
  const auto l = counts_of(e.lhs, table), rc = counts_of(e.rhs, table);
  r.is_quadratic = true;
  std::size_t repeated = 0;
  std::vector<bool> shared(table, false);
  for (std::size_t x = 0; x < table; ++x) {
    const std::size_t total = l[x] + rc[x];
    r.is_quadratic = r.is_quadratic && total <= 2;
    repeated += total >= 2;
    shared[x] = l[x] > 0 && rc[x] > 0;
  }
  r.is_one_repeated_variable = repeated <= 1;
  r.is_regular_both_sides = is_regular(e.lhs) && is_regular(e.rhs);
  r.is_regular_ordered = r.is_regular_both_sides && order_on(e.lhs, shared) == order_on(e.rhs, shared);
  r.is_non_cross_both_sides = scope_coincidence_degree(e.lhs) <= 1 && scope_coincidence_degree(e.rhs) <= 1;
  return r;
}

BoundedSolution solve_bounded(const Equation& e, std::size_t max_len, SubstitutionMode mode) {
  BoundedSearch search(e, max_len, mode);
  BoundedSolution out;
  out.witness = search.run();
  out.states_explored = search.states;
  if (out.witness && apply_substitution(e.lhs, *out.witness) != apply_substitution(e.rhs, *out.witness)) {
    throw std::logic_error("bounded solver produced an invalid solution");
  }
  return out;
}

std::string_view to_string(OneVariableVerdict v) {
  switch (v) {
    case OneVariableVerdict::sat:
      return "sat";
    case OneVariableVerdict::unsat:
      return "unsat";
    case OneVariableVerdict::unknown_beyond_bound:
      return "unknown-beyond-bound";
  }
  return "unknown";
}

OneVariableResult solve_one_variable(const Equation& e, SubstitutionMode mode) {
  const std::size_t table = e.names.size();
  const auto l = counts_of(e.lhs, table), rc = counts_of(e.rhs, table);
  std::optional<VariableId> x;
  for (VariableId v = 0; v < table; ++v) {
    if (l[v] + rc[v] == 0) continue;
    if (x) throw Error("equation must contain exactly one variable");
    x = v;
  }
  if (!x) throw Error("equation must contain exactly one variable");

  const auto p = static_cast<std::ptrdiff_t>(l[*x]), q = static_cast<std::ptrdiff_t>(rc[*x]);
  const auto a = static_cast<std::ptrdiff_t>(terminals_of(e.lhs)), b = static_cast<std::ptrdiff_t>(terminals_of(e.rhs));
  const std::size_t min_len = mode == SubstitutionMode::erasing ? 0 : 1;
  const Terminal filler = alphabet_of(e).front();

  OneVariableResult r;
  auto attempt = [&](std::size_t len) {
    if (auto image = solve_at_length(e, len, filler)) {
      std::vector<Word> images(table);
      images[*x] = std::move(*image);
      r.verdict = OneVariableVerdict::sat;
      r.witness = Substitution{std::move(images), mode};
      if (apply_substitution(e.lhs, *r.witness) != apply_substitution(e.rhs, *r.witness)) {
        throw std::logic_error("one-variable solver produced an invalid solution");
      }
      return true;
    }
    return false;
  };

  if (p != q) {
    if ((b - a) % (p - q) != 0) return r;
    const auto len = (b - a) / (p - q);
    if (len < static_cast<std::ptrdiff_t>(min_len)) return r;
    attempt(static_cast<std::size_t>(len));
    return r;
  }
  if (a != b) return r;
  const std::size_t bound = 2 * (e.lhs.size() + e.rhs.size());
  for (std::size_t len = min_len; len <= bound; ++len) {
    if (attempt(len)) return r;
  }
  r.verdict = OneVariableVerdict::unknown_beyond_bound;
  r.bound = bound;
  return r;
}

}  // namespace varpat
