#pragma once

// Value types for patterns with variables and terminal words, plus the
// elementary word combinatorics (periods, roots, blocks, scopes) the rest of
// the library is built on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varpat/error.hpp"

namespace varpat {

// Terminals are small integer codes. The text syntax maps [a-z] to 0..25 and
// [0-9] to 26..35; algorithms accept any code.
using Terminal = std::uint32_t;
using VariableId = std::uint32_t;
using Word = std::vector<Terminal>;

inline constexpr Terminal kTextAlphabetSize = 36;

struct Symbol {
  enum class Kind : std::uint8_t { terminal, variable };

  Kind kind = Kind::terminal;
  std::uint32_t value = 0;

  static constexpr Symbol terminal(Terminal t) { return {Kind::terminal, t}; }
  static constexpr Symbol variable(VariableId v) { return {Kind::variable, v}; }

  constexpr bool is_variable() const { return kind == Kind::variable; }
  constexpr bool is_terminal() const { return kind == Kind::terminal; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

using SymbolSeq = std::vector<Symbol>;

// A nonempty sequence of terminals and variables. Variable ids index into a
// name table; patterns produced by the parser number variables 0.. in order
// of first occurrence. Derived patterns (skeletons, sub-patterns) keep the
// table of the pattern they came from, so some table entries may not occur.
class Pattern {
 public:
  Pattern(SymbolSeq symbols, std::vector<std::string> variable_names);

  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  std::size_t table_size() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(VariableId id) const { return names_.at(id); }

  // Occurrence count per table entry.
  std::vector<std::size_t> occurrence_counts() const;
  // Ids that occur at least once, ascending.
  std::vector<VariableId> variables() const;
  std::size_t terminal_count() const;
  bool has_variables() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  SymbolSeq symbols_;
  std::vector<std::string> names_;
};

enum class SubstitutionMode { erasing, non_erasing };

// images[id] is the image of variable `id`. Entries for variables that do not
// occur in the pattern are ignored.
struct Substitution {
  std::vector<Word> images;
  SubstitutionMode mode = SubstitutionMode::non_erasing;
};

struct VariableBlock {
  VariableId variable;
  std::size_t exponent;
  Word trailing;
};

// alpha = prefix . prod_i (variable_i ^ exponent_i . trailing_i)
struct OneVarBlockDecomposition {
  Word prefix;
  std::vector<VariableBlock> blocks;
};

// 1-indexed leftmost and rightmost occurrence.
struct Scope {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Scope&, const Scope&) = default;
};

// ---- text syntax -----------------------------------------------------------

Terminal terminal_from_char(char c, std::size_t position);
char terminal_to_char(Terminal t);

Pattern parse_pattern(std::string_view text);
// Parses into a shared name table (used by equations). Accepts "()" for an
// empty sequence when allow_empty is set.
SymbolSeq parse_symbols(std::string_view text, std::vector<std::string>& names, bool allow_empty,
                        std::size_t position_offset = 0);

Word parse_word(std::string_view text);
std::string to_string(const Word& w);          // "" for the empty word
std::string to_display(const Word& w);         // "()" for the empty word
std::string to_string(const Pattern& p);
std::string to_string(std::span<const Symbol> symbols, const std::vector<std::string>& names);

// ---- substitution ----------------------------------------------------------

Word apply_substitution(std::span<const Symbol> symbols, const Substitution& h);
Word apply_substitution(const Pattern& p, const Substitution& h);

// ---- structure -------------------------------------------------------------

Pattern skeleton(const Pattern& p);
OneVarBlockDecomposition one_variable_blocks(const Pattern& p);
std::map<VariableId, Scope> scopes(const Pattern& p);

// ---- periodicity -----------------------------------------------------------

// Knuth-Morris-Pratt failure function: border[i] is the length of the longest
// proper border of s[0..i].
template <typename T>
std::vector<std::size_t> prefix_function(std::span<const T> s) {
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && !(s[i] == s[k])) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

template <typename T>
std::size_t minimal_period_of(std::span<const T> s) {
  if (s.empty()) throw Error("period of the empty word is undefined");
  return s.size() - prefix_function(s).back();
}

// Leftmost occurrence of `needle` in `haystack` starting at or after `from`;
// npos if absent. KMP, O(|needle| + |haystack|).
std::size_t kmp_find(std::span<const Terminal> haystack, std::span<const Terminal> needle,
                     std::size_t from = 0);
std::vector<std::size_t> kmp_find_all(std::span<const Terminal> haystack,
                                      std::span<const Terminal> needle);

std::size_t period(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent;
};
PrimitiveRoot primitive_root(const Word& w);

// Root/exponent of an arbitrary symbol sequence (used on skeletons and for
// detecting syntactic repetitions beta^k).
template <typename T>
std::pair<std::size_t, std::size_t> root_length_and_exponent(std::span<const T> s) {
  const std::size_t p = minimal_period_of(s);
  if (s.size() % p == 0) return {p, s.size() / p};
  return {s.size(), 1};
}

}  // namespace varpat
