#include "varpat/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "varpat/kernels.hpp"

namespace varpat {

namespace {

std::size_t table_bound(std::span<const Symbol> s) {
  std::size_t bound = 0;
  for (const Symbol& sym : s) {
    if (sym.is_variable()) bound = std::max<std::size_t>(bound, sym.value + 1);
  }
  return bound;
}

std::vector<std::uint32_t> variable_sequence(std::span<const Symbol> s) {
  std::vector<std::uint32_t> out;
  for (const Symbol& sym : s) {
    if (sym.is_variable()) out.push_back(sym.value);
  }
  return out;
}

void require_variables(const Pattern& p) {
  if (!p.has_variables()) throw Error("no variables");
}

// Sentinel-terminated next-occurrence lookup: next[x][t] is the smallest
// position >= t holding variable x, or size() when there is none.
class NextOccurrence {
 public:
  explicit NextOccurrence(std::span<const Symbol> s) : n_(s.size()), vars_(table_bound(s)) {
    next_.assign(vars_ * (n_ + 1), n_);
    for (std::size_t t = n_; t-- > 0;) {
      for (std::size_t x = 0; x < vars_; ++x) next_[x * (n_ + 1) + t] = next_[x * (n_ + 1) + t + 1];
      if (s[t].is_variable()) next_[s[t].value * (n_ + 1) + t] = t;
    }
  }
  std::size_t at(std::size_t x, std::size_t t) const { return next_[x * (n_ + 1) + t]; }

 private:
  std::size_t n_;
  std::size_t vars_;
  std::vector<std::size_t> next_;
};

class StronglyNestedChecker {
 public:
  explicit StronglyNestedChecker(std::vector<std::uint32_t> seq)
      : seq_(std::move(seq)), vars_(0), memo_(seq_.size() * seq_.size(), -1) {
    for (auto x : seq_) vars_ = std::max<std::size_t>(vars_, x + 1);
  }

  bool run() { return seq_.empty() || check(0, seq_.size() - 1); }

 private:
  bool check(std::size_t i, std::size_t j) {
    signed char& slot = memo_[i * seq_.size() + j];
    if (slot >= 0) return slot == 1;
    const bool result = evaluate(i, j);
    slot = result ? 1 : 0;
    return result;
  }

  bool evaluate(std::size_t i, std::size_t j) {
    std::vector<std::size_t> last(vars_, 0);
    std::size_t distinct = 0;
    std::vector<bool> seen(vars_, false);
    for (std::size_t t = i; t <= j; ++t) {
      last[seq_[t]] = t;
      if (!seen[seq_[t]]) {
        seen[seq_[t]] = true;
        ++distinct;
      }
    }
    if (distinct <= 1) return true;

    // alpha_1 alpha_2 with disjoint variable sets
    std::size_t reach = i;
    for (std::size_t t = i; t < j; ++t) {
      reach = std::max(reach, last[seq_[t]]);
      if (reach == t && check(i, t) && check(t + 1, j)) return true;
    }

    // beta_1 alpha_1 beta_2 with beta_1, beta_2 in x^+
    const auto x = seq_[i];
    if (seq_[j] != x) return false;
    std::size_t lo = i;
    while (lo <= j && seq_[lo] == x) ++lo;
    std::size_t hi = j;
    while (hi >= lo && seq_[hi] == x) --hi;
    for (std::size_t t = lo; t <= hi; ++t) {
      if (seq_[t] == x) return false;
    }
    return check(lo, hi);
  }

  std::vector<std::uint32_t> seq_;
  std::size_t vars_;
  std::vector<signed char> memo_;
};

}  // namespace

// ---- scope coincidence -----------------------------------------------------

std::size_t scope_coincidence_degree(std::span<const Symbol> s) {
  const std::size_t vars = table_bound(s);
  std::vector<std::size_t> first(vars, s.size()), last(vars, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_variable()) continue;
    first[s[i].value] = std::min(first[s[i].value], i);
    last[s[i].value] = i;
  }
  std::vector<std::ptrdiff_t> delta(s.size() + 1, 0);
  for (std::size_t x = 0; x < vars; ++x) {
    if (first[x] == s.size()) continue;
    ++delta[first[x]];
    --delta[last[x] + 1];
  }
  std::ptrdiff_t open = 0, best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    open += delta[i];
    best = std::max(best, open);
  }
  return static_cast<std::size_t>(best);
}

std::size_t scope_coincidence_degree(const Pattern& p) {
  require_variables(p);
  return scope_coincidence_degree(p.symbols());
}

// ---- locality --------------------------------------------------------------

std::size_t marking_number(std::span<const std::uint32_t> seq, const MarkingSequence& sigma) {
  std::vector<std::uint32_t> distinct(seq.begin(), seq.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> given = sigma.order;
  std::sort(given.begin(), given.end());
  if (given != distinct) throw Error("marking sequence is not a permutation of the symbol set");

  std::vector<bool> on(seq.size(), false);
  std::size_t best = 0;
  for (const auto symbol : sigma.order) {
    std::size_t runs = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == symbol) on[i] = true;
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (on[i] && (i == 0 || !on[i - 1])) ++runs;
    }
    best = std::max(best, runs);
  }
  return best;
}

std::size_t marking_number(const Word& w, const MarkingSequence& sigma) {
  return marking_number(std::span<const std::uint32_t>(w), sigma);
}

std::size_t marking_number(const Pattern& p, const MarkingSequence& sigma) {
  require_variables(p);
  const auto seq = variable_sequence(p.symbols());
  return marking_number(std::span<const std::uint32_t>(seq), sigma);
}

LocalityResult locality_number(std::span<const std::uint32_t> seq) {
  if (seq.empty()) throw Error("locality of the empty word is undefined");
  std::unordered_map<std::uint32_t, std::uint32_t> dense;
  std::vector<std::uint32_t> symbol_of;
  std::vector<std::uint32_t> mapped;
  mapped.reserve(seq.size());
  for (const auto c : seq) {
    auto [it, inserted] = dense.try_emplace(c, static_cast<std::uint32_t>(symbol_of.size()));
    if (inserted) symbol_of.push_back(c);
    mapped.push_back(it->second);
  }
  if (symbol_of.size() > kMaxLocalitySymbols) throw Error("alphabet too large for exact locality");

  const auto g = kernels::run_count_function(mapped, symbol_of.size());
  const auto table = kernels::parallel::tabulate(g);
  const auto layout = kernels::parallel::minmax_layout(table, symbol_of.size());

  LocalityResult result;
  result.k = layout.value;
  for (const auto d : layout.order) result.witness.order.push_back(symbol_of[d]);
  return result;
}

LocalityResult locality_number(const Word& w) { return locality_number(std::span<const std::uint32_t>(w)); }

LocalityResult locality_number(const Pattern& p) {
  require_variables(p);
  const auto seq = variable_sequence(p.symbols());
  return locality_number(std::span<const std::uint32_t>(seq));
}

KLocality is_k_local(const Pattern& p, std::size_t k) {
  if (k < 1) throw Error("k must be at least 1");
  auto loc = locality_number(p);
  if (loc.k > k) return {false, std::nullopt};
  return {true, std::move(loc.witness)};
}

// ---- class predicates ------------------------------------------------------

bool is_regular(std::span<const Symbol> s) {
  std::vector<std::size_t> counts(table_bound(s), 0);
  for (const Symbol& sym : s) {
    if (sym.is_variable() && ++counts[sym.value] > 1) return false;
  }
  return true;
}

bool is_nested(std::span<const Symbol> s) {
  const std::size_t vars = table_bound(s);
  if (vars < 2) return true;
  const NextOccurrence next(s);
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < vars; ++x) {
    for (std::size_t y = 0; y < vars; ++y) {
      if (x == y) continue;
      // greedy leftmost embedding of x y x y
      std::size_t t = next.at(x, 0);
      if (t == n) continue;
      t = next.at(y, t + 1);
      if (t == n) continue;
      t = next.at(x, t + 1);
      if (t == n) continue;
      if (next.at(y, t + 1) != n) return false;
    }
  }
  return true;
}

bool is_strongly_nested(std::span<const Symbol> s) {
  // Terminals never obstruct a derivation: they can always be split off as
  // variable-free factors or absorbed into the wrapping parts.
  return StronglyNestedChecker(variable_sequence(s)).run();
}

bool is_closely_entwined(std::span<const Symbol> s) {
  // For x != y and occurrences i1 < j1 < i2 < j2 (x, y, x, y) such that the
  // gap between j1 and i2 contains neither x nor y, the gap must be empty.
  const std::size_t vars = table_bound(s);
  const std::size_t n = s.size();
  if (vars < 2) return true;
  const NextOccurrence next(s);
  std::vector<std::size_t> first(vars, n), last(vars, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!s[i].is_variable()) continue;
    first[s[i].value] = std::min(first[s[i].value], i);
    last[s[i].value] = i;
  }
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    if (!s[j1].is_variable()) continue;
    const std::size_t y = s[j1].value;
    const std::size_t next_y = next.at(y, j1 + 1);
    if (next_y == n) continue;
    for (std::size_t x = 0; x < vars; ++x) {
      if (x == y || first[x] >= j1) continue;
      const std::size_t i2 = next.at(x, j1 + 1);
      if (i2 >= next_y || last[y] <= i2) continue;
      if (i2 != j1 + 1) return false;
    }
  }
  return true;
}

bool is_mildly_entwined(std::span<const Symbol> s) {
  if (!is_closely_entwined(s)) return false;
  std::vector<std::size_t> previous(table_bound(s), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_variable()) continue;
    std::size_t& prev = previous[s[i].value];
    if (prev != s.size() && !is_nested(s.subspan(prev + 1, i - prev - 1))) return false;
    prev = i;
  }
  return true;
}

ClassFlags class_flags(const Pattern& p) {
  require_variables(p);
  const auto s = p.symbols();
  ClassFlags f;
  f.is_regular = is_regular(s);
  f.is_non_cross = scope_coincidence_degree(s) <= 1;
  f.is_nested = is_nested(s);
  f.is_strongly_nested = is_strongly_nested(s);
  f.is_closely_entwined = is_closely_entwined(s);
  f.is_mildly_entwined = f.is_closely_entwined && is_mildly_entwined(s);
  return f;
}

std::vector<VariableId> repeated_variables(const Pattern& p) {
  require_variables(p);
  std::vector<VariableId> out;
  const auto counts = p.occurrence_counts();
  for (VariableId id = 0; id < counts.size(); ++id) {
    if (counts[id] >= 2) out.push_back(id);
  }
  return out;
}

ClassReport classify(const Pattern& p) {
  require_variables(p);
  ClassReport r;
  r.num_variables = p.variables().size();
  r.num_repeated_variables = repeated_variables(p).size();
  r.num_one_var_blocks = one_variable_blocks(p).blocks.size();
  r.scd = scope_coincidence_degree(p);
  if (r.num_variables <= kMaxLocalitySymbols) {
    auto loc = locality_number(p);
    r.locality = loc.k;
    r.locality_witness = std::move(loc.witness);
  }
  r.flags = class_flags(p);
  const auto seq = variable_sequence(p.symbols());
  const auto [root_len, exponent] = root_length_and_exponent(std::span<const std::uint32_t>(seq));
  if (exponent >= 2) r.repetition_structure = RepetitionStructure{root_len, exponent};
  return r;
}

}  // namespace varpat
