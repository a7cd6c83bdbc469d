#include "detail.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace detail {

namespace {

struct RegularShape {
  // counts[i] variables precede factor i; counts.back() follow the last one.
  std::vector<std::vector<VariableId>> groups;
  std::vector<Word> factors;
};

RegularShape regular_shape(std::span<const Symbol> symbols) {
  RegularShape shape;
  shape.groups.emplace_back();
  bool in_factor = false;
  for (const Symbol& s : symbols) {
    if (s.is_terminal()) {
      if (!in_factor) {
        shape.factors.emplace_back();
        in_factor = true;
      }
      shape.factors.back().push_back(s.value);
    } else {
      if (in_factor) {
        shape.groups.emplace_back();
        in_factor = false;
      }
      shape.groups.back().push_back(s.value);
    }
  }
  if (in_factor) shape.groups.emplace_back();
  return shape;
}

void fill_group(const std::vector<VariableId>& group, const Word& w, std::size_t begin, std::size_t end,
                std::vector<Word>& images) {
  std::size_t cur = begin;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const std::size_t len = i + 1 == group.size() ? end - cur : 1;
    images[group[i]] = slice(w, cur, len);
    cur += len;
  }
}

}  // namespace

bool match_regular_into(std::span<const Symbol> symbols, const Word& w, std::vector<Word>& images,
                        MatchStats& stats) {
  const RegularShape shape = regular_shape(symbols);
  const std::size_t n = w.size();
  const std::size_t r = shape.factors.size();
  std::vector<std::size_t> starts(r);

  std::size_t pos = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Word& u = shape.factors[i];
    const std::size_t earliest = pos + shape.groups[i].size();
    std::size_t start;
    ++stats.candidates_tested;
    if (i + 1 == r && shape.groups[r].empty()) {
      if (u.size() > n || n - u.size() < earliest) return false;
      start = n - u.size();
      if (i == 0 && shape.groups[0].empty() && start != 0) return false;
      if (!std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(start))) return false;
    } else if (i == 0 && shape.groups[0].empty()) {
      if (u.size() > n || !std::equal(u.begin(), u.end(), w.begin())) return false;
      start = 0;
    } else {
      start = kmp_find(w, u, earliest);
      if (start == std::string::npos) return false;
    }
    ++stats.states_explored;
    starts[i] = start;
    pos = start + u.size();
  }
  const auto& tail = shape.groups[r];
  if (tail.empty() ? pos != n : n - pos < tail.size()) return false;

  std::size_t begin = 0;
  for (std::size_t i = 0; i <= r; ++i) {
    const std::size_t end = i < r ? starts[i] : n;
    if (!shape.groups[i].empty()) fill_group(shape.groups[i], w, begin, end, images);
    if (i < r) begin = starts[i] + shape.factors[i].size();
  }
  return true;
}

}  // namespace detail

MatchResult match_regular(const Pattern& p, const Word& w) {
  if (!is_regular(p.symbols())) throw Error("wrong class: pattern is not regular");
  MatchResult r;
  r.algorithm_used = Algorithm::regular;
  std::vector<Word> images(p.table_size());
  r.matched = detail::match_regular_into(p.symbols(), w, images, r.stats);
  if (r.matched) r.witness = detail::make_substitution(std::move(images));
  return detail::finish(p.symbols(), w, std::move(r));
}

}  // namespace varpat
