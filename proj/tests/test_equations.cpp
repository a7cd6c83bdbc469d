#include <doctest.h>

#include "oracles.hpp"
#include "varpat/equations.hpp"
#include "varpat/matchers.hpp"

using namespace varpat;

namespace {

Word side(const Equation& e, bool left, const Substitution& h) {
  return apply_substitution(left ? e.lhs : e.rhs, h);
}

std::string image(const Substitution& h, const Equation& e, std::string_view name) {
  const auto id = static_cast<std::size_t>(std::find(e.names.begin(), e.names.end(), name) - e.names.begin());
  return to_display(h.images.at(id));
}

}  // namespace

TEST_SUITE("equations") {
  TEST_CASE("parsing") {
    const auto e = parse_equation("[x1]ab[x2]=a[x1][x2]b");
    CHECK(e.lhs.size() == 4);
    CHECK(e.rhs.size() == 4);
    CHECK(e.names == std::vector<std::string>{"x1", "x2"});
    CHECK(to_string(e) == "[x1]ab[x2]=a[x1][x2]b");
    CHECK(parse_equation("()=()").lhs.empty());
    CHECK_THROWS_AS(parse_equation("[x]a"), ParseError);
    CHECK_THROWS_AS(parse_equation("a=b=c"), ParseError);
  }

  TEST_CASE("classification") {
    const auto ro = classify_equation(parse_equation("[x1]a[x2]ba[x3][x4]=b[x1][x3]aa[x4]"));
    CHECK(ro.is_regular_ordered);
    CHECK(ro.is_regular_both_sides);
    CHECK(ro.is_quadratic);
    CHECK(classify_equation(parse_equation("[x1]ab[x2]=a[x1][x2]b")).is_quadratic);
    CHECK(classify_equation(parse_equation("[x]a=a[x]")).is_one_repeated_variable);
    CHECK_FALSE(classify_equation(parse_equation("[x][y]=[y][x]")).is_regular_ordered);
    CHECK_FALSE(classify_equation(parse_equation("[x][x][x]=a")).is_quadratic);
  }

  TEST_CASE("bounded solving") {
    const auto e = parse_equation("[x1]ab[x2]=a[x1][x2]b");
    const auto one = solve_bounded(e, 1, SubstitutionMode::non_erasing);
    REQUIRE(one.witness.has_value());
    CHECK(image(*one.witness, e, "x1") == "a");
    CHECK(image(*one.witness, e, "x2") == "b");
    const auto zero = solve_bounded(e, 0, SubstitutionMode::erasing);
    REQUIRE(zero.witness.has_value());
    CHECK(image(*zero.witness, e, "x1") == "()");
    CHECK(image(*zero.witness, e, "x2") == "()");
    for (const auto mode : {SubstitutionMode::erasing, SubstitutionMode::non_erasing}) {
      CHECK_FALSE(solve_bounded(parse_equation("[x1]a=b[x1]"), 4, mode).witness.has_value());
    }
    CHECK(solve_bounded(parse_equation("ab=ab"), 0, SubstitutionMode::non_erasing).witness.has_value());
    CHECK_FALSE(solve_bounded(parse_equation("ab=ba"), 3, SubstitutionMode::erasing).witness.has_value());
  }

  TEST_CASE("one-variable equations") {
    const auto comm = solve_one_variable(parse_equation("[x]a=a[x]"), SubstitutionMode::non_erasing);
    CHECK(comm.verdict == OneVariableVerdict::sat);
    CHECK(to_string(comm.witness->images[0]) == "a");
    const auto erased = solve_one_variable(parse_equation("[x]a=a[x]"), SubstitutionMode::erasing);
    CHECK(erased.verdict == OneVariableVerdict::sat);
    CHECK(erased.witness->images[0].empty());
    CHECK(solve_one_variable(parse_equation("[x]aa=a[x]"), SubstitutionMode::non_erasing).verdict ==
          OneVariableVerdict::unsat);
    const auto open = solve_one_variable(parse_equation("[x]b=a[x]"), SubstitutionMode::non_erasing);
    CHECK(open.verdict == OneVariableVerdict::unknown_beyond_bound);
    CHECK(open.bound == 8);
    const auto lin = solve_one_variable(parse_equation("[x][x]=abab"), SubstitutionMode::non_erasing);
    CHECK(lin.verdict == OneVariableVerdict::sat);
    CHECK(to_string(lin.witness->images[0]) == "ab");
    CHECK(solve_one_variable(parse_equation("[x][x]=aba"), SubstitutionMode::non_erasing).verdict ==
          OneVariableVerdict::unsat);
    CHECK(solve_one_variable(parse_equation("[x]=()"), SubstitutionMode::non_erasing).verdict == OneVariableVerdict::unsat);
    CHECK_THROWS_AS(solve_one_variable(parse_equation("[x]=[y]"), SubstitutionMode::erasing), Error);
    CHECK_THROWS_AS(solve_one_variable(parse_equation("a=a"), SubstitutionMode::erasing), Error);
  }

  TEST_CASE("one-variable verdicts against bounded search") {
    oracle::for_each_pattern(5, 2, 1, [](const Pattern& lhs) {
      oracle::for_each_pattern(4, 2, 1, [&](const Pattern& rhs) {
        Equation e{SymbolSeq(lhs.symbols().begin(), lhs.symbols().end()),
                   SymbolSeq(rhs.symbols().begin(), rhs.symbols().end()), {"x1"}};
        if (!lhs.has_variables() && !rhs.has_variables()) return;
        for (const auto mode : {SubstitutionMode::erasing, SubstitutionMode::non_erasing}) {
          const auto r = solve_one_variable(e, mode);
          const auto b = solve_bounded(e, 18, mode);
          INFO(to_string(e));
          if (r.verdict == OneVariableVerdict::sat) {
            REQUIRE(r.witness.has_value());
            CHECK(side(e, true, *r.witness) == side(e, false, *r.witness));
            CHECK(b.witness.has_value());
          } else {
            CHECK_FALSE(b.witness.has_value());
          }
          const auto counts = [&](const SymbolSeq& s) { return std::count(s.begin(), s.end(), Symbol::variable(0)); };
          if (counts(e.lhs) != counts(e.rhs)) CHECK(r.verdict != OneVariableVerdict::unknown_beyond_bound);
        }
      });
    });
  }

  TEST_CASE("matching as an equation") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const Word& w : oracle::all_words(n, 2)) {
        oracle::for_each_pattern(4, 2, 2, [&](const Pattern& p) {
          Equation e{SymbolSeq(p.symbols().begin(), p.symbols().end()), {}, p.variable_names()};
          for (const Terminal t : w) e.rhs.push_back(Symbol::terminal(t));
          for (const auto mode : {SubstitutionMode::erasing, SubstitutionMode::non_erasing}) {
            CHECK(match_brute(p, w, {mode}).matched == solve_bounded(e, w.size(), mode).witness.has_value());
          }
        });
      }
    }
  }
}
