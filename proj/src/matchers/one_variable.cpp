#include "detail.hpp"

namespace varpat {

OccurrenceList find_one_variable_occurrences(const Pattern& gamma, const Word& w) {
  if (gamma.variables().size() != 1) throw Error("factor must contain exactly one variable");
  const auto symbols = gamma.symbols();
  const std::size_t terminals = gamma.terminal_count();
  const std::size_t occurrences = symbols.size() - terminals;
  const std::size_t n = w.size();

  OccurrenceList out;
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; start + terminals + occurrences * len <= n; ++len) {
      if (detail::fit_one_variable(symbols, w, start, len)) out.push_back({start + 1, len});
    }
  }
  return out;
}

}  // namespace varpat
