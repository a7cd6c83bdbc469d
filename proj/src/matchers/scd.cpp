#include <map>

#include "detail.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace {

struct OpenImage {
  VariableId variable;
  std::uint32_t start;
  std::uint32_t length;
  friend auto operator<=>(const OpenImage&, const OpenImage&) = default;
};

struct ScdState {
  std::size_t pos;
  std::vector<OpenImage> open;  // sorted by variable
  std::size_t parent;
  std::uint32_t chosen_start;
  std::uint32_t chosen_length;
};

using StateKey = std::pair<std::size_t, std::vector<OpenImage>>;

}  // namespace

MatchResult match_scd(const Pattern& p, const Word& w, std::size_t k) {
  if (k > kMaxScdParameter) throw Error("parameter too large; use brute");
  const auto symbols = p.symbols();
  if (scope_coincidence_degree(symbols) > k) throw Error("wrong class: scope coincidence degree exceeds k");
  MatchResult r;
  r.algorithm_used = Algorithm::scd;
  const std::size_t n = w.size();

  if (!p.has_variables()) {
    r.matched = apply_substitution(symbols, Substitution{}) == w;
    if (r.matched) r.witness = detail::make_substitution(std::vector<Word>(p.table_size()));
    return detail::finish(symbols, w, std::move(r));
  }

  const auto decomposition = one_variable_blocks(p);
  const auto& blocks = decomposition.blocks;
  const std::size_t b = blocks.size();
  std::vector<bool> first_block(b), last_block(b);
  {
    std::vector<bool> seen(p.table_size(), false);
    for (std::size_t t = 0; t < b; ++t) {
      first_block[t] = !seen[blocks[t].variable];
      seen[blocks[t].variable] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t t = b; t-- > 0;) {
      last_block[t] = !seen[blocks[t].variable];
      seen[blocks[t].variable] = true;
    }
  }
  // Minimal length of blocks after t.
  std::vector<std::size_t> rest(b + 1, 0);
  for (std::size_t t = b; t-- > 0;) {
    rest[t] = rest[t + 1] + (t + 1 < b ? blocks[t + 1].exponent + blocks[t + 1].trailing.size() : 0);
  }

  const Word& prefix = decomposition.prefix;
  if (prefix.size() > n || !std::equal(prefix.begin(), prefix.end(), w.begin())) {
    return detail::finish(symbols, w, std::move(r));
  }

  std::vector<std::vector<ScdState>> layers(b + 1);
  layers[0].push_back({prefix.size(), {}, 0, 0, 0});

  for (std::size_t t = 0; t < b && !layers[t].empty(); ++t) {
    const auto& block = blocks[t];
    const Word& trailing = block.trailing;
    std::map<StateKey, std::size_t> index;

    auto emit = [&](std::size_t parent, std::size_t pos, std::vector<OpenImage> open, std::size_t img_start,
                    std::size_t img_len) {
      if (pos + trailing.size() > n) return;
      if (!std::equal(trailing.begin(), trailing.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return;
      pos += trailing.size();
      if (t + 1 == b && pos != n) return;
      StateKey key{pos, open};
      if (index.contains(key)) return;
      index.emplace(std::move(key), layers[t + 1].size());
      layers[t + 1].push_back({pos, std::move(open), parent, static_cast<std::uint32_t>(img_start),
                               static_cast<std::uint32_t>(img_len)});
    };

    for (std::size_t si = 0; si < layers[t].size(); ++si) {
      const ScdState& state = layers[t][si];
      ++r.stats.states_explored;
      const std::size_t pos = state.pos;
      auto it = std::find_if(state.open.begin(), state.open.end(),
                             [&](const OpenImage& o) { return o.variable == block.variable; });
      if (it != state.open.end()) {
        ++r.stats.candidates_tested;
        const std::size_t len = it->length;
        if (pos + block.exponent * len > n) continue;
        bool ok = true;
        for (std::size_t e = 0; e < block.exponent && ok; ++e) ok = detail::factors_equal(w, it->start, pos + e * len, len);
        if (!ok) continue;
        auto open = state.open;
        const OpenImage img = *it;
        if (last_block[t]) open.erase(open.begin() + (it - state.open.begin()));
        emit(si, pos + block.exponent * len, std::move(open), img.start, img.length);
        continue;
      }

      const std::size_t fixed = pos + trailing.size() + rest[t];
      if (fixed > n) continue;
      const std::size_t max_len = (n - fixed) / block.exponent;
      for (std::size_t len = 1; len <= max_len; ++len) {
        ++r.stats.candidates_tested;
        bool ok = true;
        for (std::size_t e = 1; e < block.exponent && ok; ++e) ok = detail::factors_equal(w, pos, pos + e * len, len);
        if (!ok) continue;
        auto open = state.open;
        if (!last_block[t]) {
          const OpenImage img{block.variable, static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(len)};
          open.insert(std::upper_bound(open.begin(), open.end(), img), img);
        }
        emit(si, pos + block.exponent * len, std::move(open), pos, len);
      }
    }
  }

  if (layers[b].empty()) return detail::finish(symbols, w, std::move(r));

  std::vector<Word> images(p.table_size());
  std::size_t si = 0;
  for (std::size_t t = b; t > 0; --t) {
    const ScdState& state = layers[t][si];
    images[blocks[t - 1].variable] = detail::slice(w, state.chosen_start, state.chosen_length);
    si = state.parent;
  }
  r.matched = true;
  r.witness = detail::make_substitution(std::move(images));
  return detail::finish(symbols, w, std::move(r));
}

}  // namespace varpat
