#pragma once

// Maximal alpha-gapped repeats u v u and palindromes u v u^R, with
// |uv| <= alpha |u| and alpha a rational p/q >= 1.
//
// A repeat with period d = |uv| is maximal when its arms cannot both be
// extended one symbol to the right, and cannot both be extended one symbol to
// the left, while keeping d. A palindrome is maximal when the arms cannot be
// extended outward (u to the left, u^R to the right) nor inward (u to the
// right, u^R to the left; needs |v| >= 2).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "varpat/core.hpp"

namespace varpat {

struct Ratio {
  std::uint64_t p = 1;
  std::uint64_t q = 1;
};

// "p/q" or an integer. Throws unless the value is >= 1.
Ratio parse_ratio(std::string_view text);
std::string to_string(Ratio r);

enum class GappedKind { repeat, palindrome };
std::string_view to_string(GappedKind k);

struct GappedOccurrence {
  std::size_t start;  // 1-indexed
  std::size_t arm_length;
  std::size_t gap_length;
  GappedKind kind;

  friend auto operator<=>(const GappedOccurrence&, const GappedOccurrence&) = default;
};

namespace gapped {

// One pass per period (repeats) or per centre (palindromes). Results sorted by
// (start, arm, gap).
namespace serial {
std::vector<GappedOccurrence> repeats(const Word& w, Ratio alpha);
std::vector<GappedOccurrence> palindromes(const Word& w, Ratio alpha);
}  // namespace serial

namespace parallel {
std::vector<GappedOccurrence> repeats(const Word& w, Ratio alpha);
std::vector<GappedOccurrence> palindromes(const Word& w, Ratio alpha);
}  // namespace parallel

}  // namespace gapped

// Require |w| >= 2 and alpha >= 1.
std::vector<GappedOccurrence> find_maximal_gapped_repeats(const Word& w, Ratio alpha);
std::vector<GappedOccurrence> find_maximal_gapped_palindromes(const Word& w, Ratio alpha);

}  // namespace varpat
