#pragma once

// Matching patterns with variables against words: a complete brute-force
// matcher, the specialised polynomial matchers for the tractable classes, and
// a dispatcher that picks one from the pattern's structure.
//
// Specialised matchers handle the non-erasing case only. Every matched result
// carries a witness that has been re-applied to the pattern and compared with
// the word before it is returned.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "varpat/core.hpp"
#include "varpat/structure.hpp"

namespace varpat {

enum class Algorithm { automatic, brute, regular, noncross, scd, repvar, local, repetition };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

struct MatchOptions {
  SubstitutionMode mode = SubstitutionMode::non_erasing;
  bool injective = false;
  Algorithm algorithm = Algorithm::automatic;
};

struct MatchStats {
  std::uint64_t states_explored = 0;
  std::uint64_t candidates_tested = 0;

  MatchStats& operator+=(const MatchStats& o) {
    states_explored += o.states_explored;
    candidates_tested += o.candidates_tested;
    return *this;
  }
};

struct MatchResult {
  bool matched = false;
  std::optional<Substitution> witness;
  Algorithm algorithm_used = Algorithm::brute;
  MatchStats stats;
};

// 1-indexed start, image length.
struct Occurrence {
  std::size_t start;
  std::size_t image_length;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};
using OccurrenceList = std::vector<Occurrence>;

// Complete for both modes and for injectivity. The witness is the least
// assignment under (image length, then content), variables by id.
MatchResult match_brute(const Pattern& p, const Word& w, const MatchOptions& opts = {});

MatchResult match_regular(const Pattern& p, const Word& w);

OccurrenceList find_one_variable_occurrences(const Pattern& gamma, const Word& w);

MatchResult match_non_cross(const Pattern& p, const Word& w);

inline constexpr std::size_t kMaxScdParameter = 4;
inline constexpr std::size_t kMaxLocalParameter = 3;

MatchResult match_scd(const Pattern& p, const Word& w, std::size_t k);
MatchResult match_repvar(const Pattern& p, const Word& w, std::size_t k);
MatchResult match_k_local(const Pattern& p, const Word& w, std::size_t k, const MarkingSequence& witness);

// The full pattern is beta^k.
MatchResult match_repetition(const Pattern& beta, std::size_t k, const Word& w);

// If the symbol sequence of p is a proper power beta^k (k >= 2), returns beta
// and k.
std::optional<std::pair<Pattern, std::size_t>> as_repetition(const Pattern& p);

MatchResult match(const Pattern& p, const Word& w, const MatchOptions& opts = {});

}  // namespace varpat
