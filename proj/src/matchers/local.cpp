#include <map>

#include "detail.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace {

struct Interval {
  std::size_t l;
  std::size_t r;  // inclusive
};

// Maximal factors of alpha that begin and end with a marked variable and
// contain no unmarked variable.
std::vector<Interval> marked_blocks(std::span<const Symbol> s, const std::vector<bool>& marked) {
  std::vector<Interval> out;
  bool open = false;
  std::size_t l = 0, last = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_variable()) continue;
    if (marked[s[i].value]) {
      if (!open) {
        open = true;
        l = i;
      }
      last = i;
    } else if (open) {
      out.push_back({l, last});
      open = false;
    }
  }
  if (open) out.push_back({l, last});
  return out;
}

struct StepPlan {
  VariableId x = 0;
  std::size_t occurrences = 0;
  std::vector<Interval> blocks;
  std::vector<Interval> old_blocks;
  std::vector<std::ptrdiff_t> old_block_at;          // alpha position -> old block starting there
  std::vector<std::vector<std::size_t>> contained;  // per new block, old blocks inside it
  std::vector<bool> has_x;
  std::vector<std::size_t> gap_min;  // symbols strictly between consecutive blocks
  std::size_t prefix_min = 0;
  std::size_t suffix_min = 0;
  bool prefix_exact = false;
  bool suffix_exact = false;
};

using Span = std::pair<std::uint32_t, std::uint32_t>;  // [a, b) in w

struct LocalState {
  std::vector<Span> spans;
  std::size_t parent;
  std::uint32_t image_start;
  std::uint32_t image_length;
};

class LocalMatcher {
 public:
  LocalMatcher(std::span<const Symbol> s, const Word& w, const std::vector<VariableId>& order, std::size_t table)
      : s_(s), w_(w) {
    std::size_t first_var = s.size(), last_var = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_variable()) continue;
      first_var = std::min(first_var, i);
      last_var = i;
    }
    std::vector<bool> marked(table, false);
    std::vector<Interval> previous;
    for (const auto x : order) {
      marked[x] = true;
      StepPlan plan;
      plan.x = x;
      for (const Symbol& sym : s) plan.occurrences += sym.is_variable() && sym.value == x;
      plan.blocks = marked_blocks(s, marked);
      plan.old_blocks = previous;
      plan.old_block_at.assign(s.size(), -1);
      for (std::size_t j = 0; j < previous.size(); ++j) plan.old_block_at[previous[j].l] = static_cast<std::ptrdiff_t>(j);
      for (const auto& b : plan.blocks) {
        std::vector<std::size_t> inside;
        for (std::size_t j = 0; j < previous.size(); ++j) {
          if (previous[j].l >= b.l && previous[j].r <= b.r) inside.push_back(j);
        }
        plan.contained.push_back(std::move(inside));
        bool with_x = false;
        for (std::size_t i = b.l; i <= b.r; ++i) with_x = with_x || (s[i].is_variable() && s[i].value == x);
        plan.has_x.push_back(with_x);
      }
      for (std::size_t i = 0; i + 1 < plan.blocks.size(); ++i) {
        plan.gap_min.push_back(plan.blocks[i + 1].l - plan.blocks[i].r - 1);
      }
      plan.prefix_min = plan.blocks.front().l;
      plan.suffix_min = s.size() - 1 - plan.blocks.back().r;
      plan.prefix_exact = plan.blocks.front().l == first_var;
      plan.suffix_exact = plan.blocks.back().r == last_var;
      plans_.push_back(std::move(plan));
      previous = plans_.back().blocks;
    }
  }

  bool run() {
    const std::size_t n = w_.size();
    if (n < s_.size()) return false;
    // Terminal prefix and suffix of alpha are fixed.
    std::size_t i = 0;
    for (; i < s_.size() && s_[i].is_terminal(); ++i) {
      if (w_[i] != s_[i].value) return false;
    }
    for (std::size_t j = s_.size(); j-- > 0 && s_[j].is_terminal();) {
      if (w_[n - (s_.size() - j)] != s_[j].value) return false;
    }

    layers_.assign(plans_.size() + 1, {});
    layers_[0].push_back({{}, 0, 0, 0});
    for (std::size_t t = 0; t < plans_.size(); ++t) {
      index_.clear();
      for (std::size_t si = 0; si < layers_[t].size(); ++si) expand(t, si);
      if (layers_[t + 1].empty()) return false;
    }
    return true;
  }

  std::vector<Word> images(std::size_t table) const {
    std::vector<Word> out(table);
    std::size_t si = 0;
    for (std::size_t t = plans_.size(); t > 0; --t) {
      const LocalState& st = layers_[t][si];
      out[plans_[t - 1].x] = detail::slice(w_, st.image_start, st.image_length);
      si = st.parent;
    }
    return out;
  }

  MatchStats stats;

 private:
  struct Walk {
    std::size_t start;
    std::size_t end;
    std::size_t image_start;
  };

  // Walks a new block that contains at least one old block. The block start
  // is derived from its first old block; `image` fixes u when known.
  std::optional<Walk> walk_anchored(const StepPlan& plan, std::size_t b, const LocalState& old, std::size_t len,
                                    std::optional<std::size_t> image) const {
    const Interval block = plan.blocks[b];
    const std::size_t first_old = plan.contained[b].front();
    const std::size_t old_l = plan.old_blocks[first_old].l;
    std::size_t offset = 0;
    for (std::size_t i = block.l; i < old_l; ++i) offset += s_[i].is_terminal() ? 1 : len;
    const std::size_t anchor = old.spans[first_old].first;
    if (anchor < offset) return std::nullopt;
    std::size_t cur = anchor - offset;
    const std::size_t start = cur;
    const std::size_t n = w_.size();
    for (std::size_t i = block.l; i <= block.r;) {
      const auto ob = plan.old_block_at[i];
      if (ob >= 0) {
        if (cur != old.spans[static_cast<std::size_t>(ob)].first) return std::nullopt;
        cur = old.spans[static_cast<std::size_t>(ob)].second;
        i = plan.old_blocks[static_cast<std::size_t>(ob)].r + 1;
        continue;
      }
      const Symbol& sym = s_[i];
      if (sym.is_terminal()) {
        if (cur >= n || w_[cur] != sym.value) return std::nullopt;
        ++cur;
      } else {
        if (cur + len > n) return std::nullopt;
        if (!image) {
          image = cur;
        } else if (!detail::factors_equal(w_, *image, cur, len)) {
          return std::nullopt;
        }
        cur += len;
      }
      ++i;
    }
    return Walk{start, cur, image.value_or(0)};
  }

  void expand(std::size_t t, std::size_t si) {
    ++stats.states_explored;
    const StepPlan& plan = plans_[t];
    const LocalState& old = layers_[t][si];
    const std::size_t n = w_.size();
    const std::size_t max_len = (n - (s_.size() - plan.occurrences)) / plan.occurrences;

    std::optional<std::size_t> pivot;
    for (std::size_t b = 0; b < plan.blocks.size() && !pivot; ++b) {
      if (plan.has_x[b] && !plan.contained[b].empty()) pivot = b;
    }

    for (std::size_t len = 1; len <= max_len; ++len) {
      if (pivot) {
        const auto walk = walk_anchored(plan, *pivot, old, len, std::nullopt);
        if (!walk) continue;
        try_image(t, si, walk->image_start, len);
      } else {
        for (const std::size_t start : detail::distinct_factors(w_, len)) try_image(t, si, start, len);
      }
    }
  }

  void try_image(std::size_t t, std::size_t si, std::size_t image_start, std::size_t len) {
    ++stats.candidates_tested;
    const StepPlan& plan = plans_[t];
    const LocalState& old = layers_[t][si];
    const std::size_t nb = plan.blocks.size();
    std::vector<std::vector<Span>> options(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      if (!plan.contained[b].empty()) {
        const auto walk = walk_anchored(plan, b, old, len, image_start);
        if (!walk) return;
        options[b].push_back({static_cast<std::uint32_t>(walk->start), static_cast<std::uint32_t>(walk->end)});
      } else {
        Word inst;
        for (std::size_t i = plan.blocks[b].l; i <= plan.blocks[b].r; ++i) {
          if (s_[i].is_terminal()) {
            inst.push_back(s_[i].value);
          } else {
            inst.insert(inst.end(), w_.begin() + static_cast<std::ptrdiff_t>(image_start),
                        w_.begin() + static_cast<std::ptrdiff_t>(image_start + len));
          }
        }
        for (const auto h : kmp_find_all(w_, inst)) {
          options[b].push_back({static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h + inst.size())});
        }
        if (options[b].empty()) return;
      }
    }
    std::vector<Span> chosen;
    combine(t, si, image_start, len, options, chosen);
  }

  void combine(std::size_t t, std::size_t si, std::size_t image_start, std::size_t len,
               const std::vector<std::vector<Span>>& options, std::vector<Span>& chosen) {
    const StepPlan& plan = plans_[t];
    const std::size_t b = chosen.size();
    const std::size_t n = w_.size();
    if (b == options.size()) {
      auto [it, inserted] = index_.try_emplace(chosen, layers_[t + 1].size());
      if (inserted) {
        layers_[t + 1].push_back(
            {chosen, si, static_cast<std::uint32_t>(image_start), static_cast<std::uint32_t>(len)});
      }
      return;
    }
    const std::size_t lowest = b == 0 ? plan.prefix_min : chosen.back().second + plan.gap_min[b - 1];
    const bool last = b + 1 == options.size();
    for (const Span& option : options[b]) {
      if (option.first < lowest) continue;
      if (b == 0 && plan.prefix_exact && option.first != plan.prefix_min) continue;
      if (last) {
        if (option.second + plan.suffix_min > n) continue;
        if (plan.suffix_exact && option.second + plan.suffix_min != n) continue;
      }
      chosen.push_back(option);
      combine(t, si, image_start, len, options, chosen);
      chosen.pop_back();
    }
  }

  std::span<const Symbol> s_;
  const Word& w_;
  std::vector<StepPlan> plans_;
  std::vector<std::vector<LocalState>> layers_;
  std::map<std::vector<Span>, std::size_t> index_;
};

}  // namespace

MatchResult match_k_local(const Pattern& p, const Word& w, std::size_t k, const MarkingSequence& witness) {
  if (k > kMaxLocalParameter) throw Error("parameter too large; use brute");
  const auto symbols = p.symbols();
  MatchResult r;
  r.algorithm_used = Algorithm::local;
  if (!p.has_variables()) {
    r.matched = apply_substitution(symbols, Substitution{}) == w;
    if (r.matched) r.witness = detail::make_substitution(std::vector<Word>(p.table_size()));
    return detail::finish(symbols, w, std::move(r));
  }
  std::size_t marking = 0;
  try {
    marking = marking_number(p, witness);
  } catch (const Error&) {
    throw Error("invalid marking sequence: not a permutation of the pattern's variables");
  }
  if (marking > k) throw Error("invalid marking sequence: marking number exceeds k");

  LocalMatcher matcher(symbols, w, witness.order, p.table_size());
  r.matched = matcher.run();
  r.stats = matcher.stats;
  if (r.matched) r.witness = detail::make_substitution(matcher.images(p.table_size()));
  return detail::finish(symbols, w, std::move(r));
}

}  // namespace varpat
