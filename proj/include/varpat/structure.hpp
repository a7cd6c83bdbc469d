#pragma once

// Structural parameters of patterns (scope coincidence degree, locality
// number, repeated variables) and the class memberships derived from them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "varpat/core.hpp"

namespace varpat {

// Order in which symbols get marked. Entries are symbol codes: variable ids
// for patterns, terminal codes for words.
struct MarkingSequence {
  std::vector<std::uint32_t> order;
  friend bool operator==(const MarkingSequence&, const MarkingSequence&) = default;
};

struct LocalityResult {
  std::size_t k = 0;
  MarkingSequence witness;
};

inline constexpr std::size_t kMaxLocalitySymbols = 24;

std::size_t scope_coincidence_degree(const Pattern& p);

// Marking number of `sigma` on an arbitrary symbol sequence. Throws unless
// sigma is a permutation of the distinct symbols of `seq`.
std::size_t marking_number(std::span<const std::uint32_t> seq, const MarkingSequence& sigma);
std::size_t marking_number(const Word& w, const MarkingSequence& sigma);
// Terminals are ignored; sigma ranges over the pattern's variables.
std::size_t marking_number(const Pattern& p, const MarkingSequence& sigma);

LocalityResult locality_number(std::span<const std::uint32_t> seq);
LocalityResult locality_number(const Word& w);
LocalityResult locality_number(const Pattern& p);

struct KLocality {
  bool is_local = false;
  std::optional<MarkingSequence> witness;
};
KLocality is_k_local(const Pattern& p, std::size_t k);

struct ClassFlags {
  bool is_regular = false;
  bool is_non_cross = false;
  bool is_nested = false;
  bool is_strongly_nested = false;
  bool is_closely_entwined = false;
  bool is_mildly_entwined = false;
};
ClassFlags class_flags(const Pattern& p);

// Individual predicates, usable on any symbol sequence (equation sides, gaps
// between occurrences). Terminal-only or empty sequences satisfy all of them.
bool is_regular(std::span<const Symbol> s);
bool is_nested(std::span<const Symbol> s);
bool is_strongly_nested(std::span<const Symbol> s);
bool is_closely_entwined(std::span<const Symbol> s);
bool is_mildly_entwined(std::span<const Symbol> s);
std::size_t scope_coincidence_degree(std::span<const Symbol> s);

std::vector<VariableId> repeated_variables(const Pattern& p);

struct RepetitionStructure {
  std::size_t root_skeleton_length;
  std::size_t exponent;
};

struct ClassReport {
  std::size_t num_variables = 0;
  std::size_t num_repeated_variables = 0;
  std::size_t num_one_var_blocks = 0;
  std::size_t scd = 0;
  // Empty when the pattern has more than kMaxLocalitySymbols variables.
  std::optional<std::size_t> locality;
  std::optional<MarkingSequence> locality_witness;
  ClassFlags flags;
  // Present when the skeleton is a proper power (exponent >= 2).
  std::optional<RepetitionStructure> repetition_structure;
};

ClassReport classify(const Pattern& p);

}  // namespace varpat
