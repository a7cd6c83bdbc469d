#include "detail.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace {

// alpha = tau_0 gamma_1 tau_1 ... gamma_s tau_s, gamma_j spanning the scope of
// the j-th variable.
struct NonCrossShape {
  Word prefix;
  struct Part {
    VariableId variable;
    std::span<const Symbol> gamma;
    std::size_t terminals;
    std::size_t occurrences;
    Word tail;
  };
  std::vector<Part> parts;
};

NonCrossShape non_cross_shape(std::span<const Symbol> s) {
  NonCrossShape shape;
  std::size_t i = 0;
  while (i < s.size() && s[i].is_terminal()) shape.prefix.push_back(s[i++].value);
  while (i < s.size()) {
    const VariableId x = s[i].value;
    std::size_t last = i;
    for (std::size_t t = i; t < s.size(); ++t) {
      if (s[t].is_variable() && s[t].value == x) last = t;
    }
    NonCrossShape::Part part{x, s.subspan(i, last - i + 1), 0, 0, {}};
    for (const Symbol& sym : part.gamma) (sym.is_terminal() ? part.terminals : part.occurrences) += 1;
    i = last + 1;
    while (i < s.size() && s[i].is_terminal()) part.tail.push_back(s[i++].value);
    shape.parts.push_back(std::move(part));
  }
  return shape;
}

struct Step {
  std::size_t from = 0;
  std::size_t image_start = 0;
  std::size_t image_length = 0;
};

}  // namespace

MatchResult match_non_cross(const Pattern& p, const Word& w) {
  const auto symbols = p.symbols();
  if (scope_coincidence_degree(symbols) > 1) throw Error("wrong class: pattern is not non-cross");
  MatchResult r;
  r.algorithm_used = Algorithm::noncross;
  const std::size_t n = w.size();
  const NonCrossShape shape = non_cross_shape(symbols);
  const std::size_t s = shape.parts.size();

  // Minimal length of everything after gamma_j (including tau_j).
  std::vector<std::size_t> rest(s + 1, 0);
  for (std::size_t j = s; j-- > 0;) {
    const auto& part = shape.parts[j];
    rest[j] = part.tail.size() + (j + 1 < s ? shape.parts[j + 1].terminals + shape.parts[j + 1].occurrences : 0) +
              rest[j + 1];
  }

  if (shape.prefix.size() > n || !std::equal(shape.prefix.begin(), shape.prefix.end(), w.begin())) {
    return detail::finish(symbols, w, std::move(r));
  }
  if (s == 0) {
    r.matched = shape.prefix.size() == n;
    if (r.matched) r.witness = detail::make_substitution(std::vector<Word>(p.table_size()));
    return detail::finish(symbols, w, std::move(r));
  }

  // layers[j][q]: how position q was reached after part j (q = 0-based word
  // position following tau_j).
  std::vector<std::vector<std::optional<Step>>> layers(s, std::vector<std::optional<Step>>(n + 1));
  std::vector<std::size_t> frontier{shape.prefix.size()};

  for (std::size_t j = 0; j < s && !frontier.empty(); ++j) {
    const auto& part = shape.parts[j];
    const bool last_part = j + 1 == s;
    const auto tail_hits = part.tail.empty() || last_part ? std::vector<std::size_t>{} : kmp_find_all(w, part.tail);
    std::vector<std::size_t> next;

    auto try_length = [&](std::size_t from, std::size_t len) {
      ++r.stats.candidates_tested;
      const auto fit = detail::fit_one_variable(part.gamma, w, from, len);
      if (!fit) return;
      const std::size_t end = fit->end;
      if (end + part.tail.size() > n) return;
      if (!std::equal(part.tail.begin(), part.tail.end(), w.begin() + static_cast<std::ptrdiff_t>(end))) return;
      const std::size_t q = end + part.tail.size();
      if (last_part && q != n) return;
      if (layers[j][q]) return;
      layers[j][q] = Step{from, fit->image_start, len};
      next.push_back(q);
    };

    for (const std::size_t from : frontier) {
      ++r.stats.states_explored;
      const std::size_t fixed = from + part.terminals;
      if (fixed + part.occurrences + rest[j] > n) continue;
      if (last_part) {
        const std::size_t span_len = n - part.tail.size() - fixed;
        if (span_len % part.occurrences == 0) try_length(from, span_len / part.occurrences);
      } else if (!part.tail.empty()) {
        // gamma_j must end right before an occurrence of tau_j.
        const std::size_t lowest = fixed + part.occurrences;
        auto it = std::lower_bound(tail_hits.begin(), tail_hits.end(), lowest);
        for (; it != tail_hits.end() && *it + rest[j] <= n; ++it) {
          const std::size_t span_len = *it - fixed;
          if (span_len % part.occurrences == 0) try_length(from, span_len / part.occurrences);
        }
      } else {
        for (std::size_t len = 1; fixed + part.occurrences * len + rest[j] <= n; ++len) try_length(from, len);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  if (!layers[s - 1][n]) return detail::finish(symbols, w, std::move(r));

  std::vector<Word> images(p.table_size());
  std::size_t q = n;
  for (std::size_t j = s; j-- > 0;) {
    const Step& step = *layers[j][q];
    images[shape.parts[j].variable] = detail::slice(w, step.image_start, step.image_length);
    q = step.from;
  }
  r.matched = true;
  r.witness = detail::make_substitution(std::move(images));
  return detail::finish(symbols, w, std::move(r));
}

}  // namespace varpat
