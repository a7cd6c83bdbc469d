#include "detail.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace {

class RepeatedVariableSearch {
 public:
  RepeatedVariableSearch(const Pattern& p, const Word& w, std::vector<VariableId> repeated)
      : p_(p), w_(w), repeated_(std::move(repeated)), images_(p.table_size()) {
    const auto counts = p.occurrence_counts();
    for (const auto x : repeated_) occurrences_.push_back(counts[x]);
    free_ = p.size() - p.terminal_count();
    for (const auto c : occurrences_) free_ -= c;
    fixed_ = p.terminal_count() + free_;
    factor_cache_.resize(w.size() + 1);
  }

  bool run() { return assign(0, 0); }

  std::vector<Word> take_images() { return std::move(images_); }

  MatchStats stats;

 private:
  bool assign(std::size_t i, std::size_t used) {
    ++stats.states_explored;
    const std::size_t n = w_.size();
    if (i == repeated_.size()) return finish();
    const std::size_t occ = occurrences_[i];
    // Later repeated variables take at least one letter per occurrence.
    std::size_t later = 0;
    for (std::size_t j = i + 1; j < repeated_.size(); ++j) later += occurrences_[j];
    if (fixed_ + used + later + occ > n) return false;
    const std::size_t room = n - fixed_ - used - later;
    std::size_t lo = 1, hi = room / occ;
    if (free_ == 0 && i + 1 == repeated_.size()) {
      if (room % occ != 0) return false;
      lo = hi = room / occ;
    }
    for (std::size_t len = lo; len <= hi; ++len) {
      for (const std::size_t start : factors_of_length(len)) {
        ++stats.candidates_tested;
        images_[repeated_[i]] = detail::slice(w_, start, len);
        if (assign(i + 1, used + occ * len)) return true;
      }
    }
    return false;
  }

  const std::vector<std::size_t>& factors_of_length(std::size_t len) {
    auto& slot = factor_cache_[len];
    if (!slot) slot = detail::distinct_factors(w_, len);
    return *slot;
  }

  bool finish() {
    SymbolSeq reduced;
    for (const Symbol& s : p_.symbols()) {
      if (s.is_variable() && std::find(repeated_.begin(), repeated_.end(), s.value) != repeated_.end()) {
        for (const auto t : images_[s.value]) reduced.push_back(Symbol::terminal(t));
      } else {
        reduced.push_back(s);
      }
    }
    return detail::match_regular_into(reduced, w_, images_, stats);
  }

  const Pattern& p_;
  const Word& w_;
  std::vector<VariableId> repeated_;
  std::vector<std::size_t> occurrences_;
  std::size_t free_ = 0;
  std::size_t fixed_ = 0;
  std::vector<Word> images_;
  std::vector<std::optional<std::vector<std::size_t>>> factor_cache_;
};

}  // namespace

MatchResult match_repvar(const Pattern& p, const Word& w, std::size_t k) {
  const auto symbols = p.symbols();
  MatchResult r;
  r.algorithm_used = Algorithm::repvar;
  if (!p.has_variables()) {
    r.matched = apply_substitution(symbols, Substitution{}) == w;
    if (r.matched) r.witness = detail::make_substitution(std::vector<Word>(p.table_size()));
    return detail::finish(symbols, w, std::move(r));
  }
  auto repeated = repeated_variables(p);
  if (repeated.size() > k) throw Error("wrong class: more than k repeated variables");
  RepeatedVariableSearch search(p, w, std::move(repeated));
  r.matched = search.run();
  r.stats = search.stats;
  if (r.matched) r.witness = detail::make_substitution(search.take_images());
  return detail::finish(symbols, w, std::move(r));
}

}  // namespace varpat
