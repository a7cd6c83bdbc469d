#pragma once

// Word equations lhs = rhs over patterns sharing one variable name table.
// Either side may be empty (written "()").

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varpat/core.hpp"

namespace varpat {

struct Equation {
  SymbolSeq lhs;
  SymbolSeq rhs;
  std::vector<std::string> names;
};

Equation parse_equation(std::string_view text);
std::string to_string(const Equation& e);

struct EquationClassReport {
  bool is_quadratic = false;
  bool is_regular_both_sides = false;
  bool is_regular_ordered = false;
  bool is_non_cross_both_sides = false;
  bool is_one_repeated_variable = false;
};

EquationClassReport classify_equation(const Equation& e);

struct BoundedSolution {
  std::optional<Substitution> witness;  // empty: none with all images of length <= bound
  std::size_t states_explored = 0;
};

// Images range over words on the equation's terminals ({a} when it has none),
// shortest first, then lexicographically, variables by id.
BoundedSolution solve_bounded(const Equation& e, std::size_t max_len, SubstitutionMode mode);

enum class OneVariableVerdict { sat, unsat, unknown_beyond_bound };
std::string_view to_string(OneVariableVerdict v);

struct OneVariableResult {
  OneVariableVerdict verdict = OneVariableVerdict::unsat;
  std::optional<Substitution> witness;
  std::optional<std::size_t> bound;  // B*, set when lengths up to it were searched
};

OneVariableResult solve_one_variable(const Equation& e, SubstitutionMode mode);

}  // namespace varpat
