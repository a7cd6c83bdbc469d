#include <limits>

#include "detail.hpp"

namespace varpat {

namespace {

// Left-to-right backtracking. Variables get their image at their first
// occurrence, shortest first, so the first solution found is the least one
// under (length, content) with variables in first-occurrence order.
class BruteForce {
 public:
  BruteForce(std::span<const Symbol> s, const Word& w, const MatchOptions& opts, std::size_t table)
      : s_(s), w_(w), opts_(opts), start_(table, 0), len_(table, 0), assigned_(table, false) {
    min_len_ = opts.mode == SubstitutionMode::erasing ? 0 : 1;
  }

  bool run() { return search(0, 0); }

  std::vector<Word> images() const {
    std::vector<Word> out(start_.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      if (assigned_[x]) out[x] = detail::slice(w_, start_[x], len_[x]);
    }
    return out;
  }

  MatchStats stats;

 private:
  // Fixed length of s[from..] not counting variable `skip`; unassigned
  // variables count at their minimum length.
  std::size_t rest_length(std::size_t from, std::size_t skip, std::size_t& skip_count) const {
    std::size_t total = 0;
    skip_count = 0;
    for (std::size_t i = from; i < s_.size(); ++i) {
      const Symbol& sym = s_[i];
      if (sym.is_terminal()) {
        ++total;
      } else if (sym.value == skip) {
        ++skip_count;
      } else {
        total += assigned_[sym.value] ? len_[sym.value] : min_len_;
      }
    }
    return total;
  }

  bool distinct_from_assigned(std::size_t x, std::size_t start, std::size_t len) const {
    for (std::size_t y = 0; y < assigned_.size(); ++y) {
      if (y == x || !assigned_[y] || len_[y] != len) continue;
      if (detail::factors_equal(w_, start_[y], start, len)) return false;
    }
    return true;
  }

  bool search(std::size_t pos, std::size_t wpos) {
    ++stats.states_explored;
    if (pos == s_.size()) return wpos == w_.size();
    const Symbol& sym = s_[pos];
    if (sym.is_terminal()) {
      return wpos < w_.size() && w_[wpos] == sym.value && search(pos + 1, wpos + 1);
    }
    const std::size_t x = sym.value;
    if (assigned_[x]) {
      if (wpos + len_[x] > w_.size() || !detail::factors_equal(w_, start_[x], wpos, len_[x])) return false;
      return search(pos + 1, wpos + len_[x]);
    }

    std::size_t occurrences = 0;
    const std::size_t fixed = rest_length(pos, x, occurrences);
    const std::size_t room = w_.size() - wpos;
    if (fixed > room) return false;
    const std::size_t max_len = (room - fixed) / occurrences;

    assigned_[x] = true;
    start_[x] = wpos;
    for (std::size_t len = min_len_; len <= max_len; ++len) {
      ++stats.candidates_tested;
      if (opts_.injective && !distinct_from_assigned(x, wpos, len)) continue;
      len_[x] = len;
      if (search(pos + 1, wpos + len)) return true;
    }
    assigned_[x] = false;
    return false;
  }

  std::span<const Symbol> s_;
  const Word& w_;
  MatchOptions opts_;
  std::size_t min_len_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> len_;
  std::vector<bool> assigned_;
};

}  // namespace

MatchResult match_brute(const Pattern& p, const Word& w, const MatchOptions& opts) {
  BruteForce search(p.symbols(), w, opts, p.table_size());
  MatchResult r;
  r.algorithm_used = Algorithm::brute;
  r.matched = search.run();
  r.stats = search.stats;
  if (r.matched) r.witness = Substitution{search.images(), opts.mode};
  return detail::finish(p.symbols(), w, std::move(r));
}

}  // namespace varpat
