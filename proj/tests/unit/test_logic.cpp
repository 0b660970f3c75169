#include <algorithm>
#include <random>

#include "agorum/error.hpp"
#include "agorum/logic.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace agorum;

namespace {

Formula f(const char* text) { return parse_formula(text); }

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(f("~p & q | r") == Formula::disjunction(Formula::conjunction(Formula::negation(f("p")), f("q")), f("r")));
  CHECK(f("p -> q -> r") == Formula::implication(f("p"), Formula::implication(f("q"), f("r"))));
  CHECK(f("p & q & r") == Formula::conjunction(Formula::conjunction(f("p"), f("q")), f("r")));
  CHECK(f("p | q -> r <-> s") ==
        Formula::biconditional(Formula::implication(Formula::disjunction(f("p"), f("q")), f("r")), f("s")));
  CHECK(f("p <-> q <-> r") == Formula::biconditional(Formula::biconditional(f("p"), f("q")), f("r")));
  CHECK(f("T").connective() == Connective::top);
  CHECK(f("F").connective() == Connective::bottom);
  CHECK(f("  p   # trailing comment") == f("p"));
}

TEST_CASE("no normalisation") {
  CHECK(f("p") != f("p & T"));
  CHECK(f("~~p") != f("p"));
  CHECK(f("p & q") != f("q & p"));
}

TEST_CASE("syntax errors carry a column") {
  try {
    parse_formula("p & (q | ");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::syntax);
    CHECK(e.column() >= 9);
  }
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p $ q"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p ->"), ParseError);
}

TEST_CASE("printing parses back to the same tree") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 500; ++i) {
    const Formula g = oracle::random_formula(rng, vars, 4);
    CHECK(parse_formula(to_string(g)) == g);
  }
  CHECK(to_string(f("~(p & q)")) == "~(p & q)");
  CHECK(to_string(f("(p -> q) -> r")) == "(p -> q) -> r");
}

TEST_CASE("complement is syntactic") {
  CHECK(complement(f("p")) == f("~p"));
  CHECK(complement(f("~p")) == f("p"));
  CHECK(complement(f("~~p")) == f("~p"));
  CHECK(complement(f("p & q")) == f("~(p & q)"));
}

TEST_CASE("evaluate needs every variable") {
  CHECK(evaluate(f("p -> q"), Assignment{{"p", true}, {"q", false}}) == false);
  CHECK(evaluate(f("p <-> q"), Assignment{{"p", false}, {"q", false}}));
  CHECK_THROWS_AS(evaluate(f("p & r"), Assignment{{"p", true}}), Error);
}

TEST_CASE("consistency agrees with truth tables") {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> vars{"p", "q", "r", "s"};
  std::size_t sat = 0;
  for (int i = 0; i < 1500; ++i) {
    std::vector<Formula> set;
    for (int k = 0, n = 1 + i % 4; k < n; ++k) set.push_back(oracle::random_formula(rng, vars, 3));
    const bool expected = oracle::satisfiable(set);
    sat += expected;
    REQUIRE(is_consistent(set) == expected);
    const auto model = find_model(set);
    REQUIRE(model.has_value() == expected);
    if (model)
      for (const Formula& g : set) CHECK(evaluate(g, *model));
  }
  CHECK(sat > 300);
  CHECK(sat < 1400);
}

TEST_CASE("entailment, equivalence, tautology") {
  CHECK(entails({f("p"), f("p -> q")}, f("q")));
  CHECK_FALSE(entails({f("p | q")}, f("p")));
  CHECK(entails({f("p & ~p")}, f("r")));
  CHECK(are_equivalent(f("p -> q"), f("~p | q")));
  CHECK(are_equivalent(f("p"), f("p & p")));
  CHECK_FALSE(are_equivalent(f("p"), f("q")));
  CHECK(is_tautology(f("p | ~p")));
  CHECK(is_tautology(f("T")));
  CHECK(is_contradiction(f("p & ~p")));
  CHECK(is_contradiction(f("F")));
  CHECK_FALSE(is_tautology(f("p")));
  CHECK(is_consistent(std::vector<Formula>{}));
}

TEST_CASE("syntactic variants") {
  const auto v = syntactic_variants(f("p | q"), 3);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == f("p | q"));
  CHECK(v[1] == f("(p | q) & T"));
  CHECK(v[2] == f("(p | q) & T & T"));
  for (const Formula& g : v) CHECK(are_equivalent(g, v[0]));
  CHECK_THROWS_AS(syntactic_variants(f("p"), 0), Error);
}

TEST_CASE("minimal inconsistent core is inconsistent and minimal") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vars{"p", "q", "r"};
  int checked = 0;
  while (checked < 200) {
    std::vector<Formula> set;
    for (int k = 0; k < 5; ++k) set.push_back(oracle::random_formula(rng, vars, 2));
    if (oracle::satisfiable(set)) continue;
    ++checked;
    const auto core = minimal_inconsistent_core(set);
    std::vector<Formula> chosen;
    for (std::size_t i : core) chosen.push_back(set[i]);
    REQUIRE_FALSE(oracle::satisfiable(chosen));
    for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
      std::vector<Formula> rest = chosen;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(oracle::satisfiable(rest));
    }
  }
}

TEST_CASE("realizable valuations match the truth table") {
  std::mt19937_64 rng(77);
  const std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 200; ++i) {
    std::vector<Formula> set;
    for (int k = 0; k < 3; ++k) set.push_back(oracle::random_formula(rng, vars, 3));
    std::set<std::string> names;
    for (const Formula& g : set) oracle::collect_variables(g, names);
    std::set<std::vector<bool>, std::greater<>> expected;
    oracle::any_valuation(names, [&](const oracle::Valuation& v) {
      std::vector<bool> row;
      for (const Formula& g : set) row.push_back(oracle::eval(g, v));
      expected.insert(row);
      return false;
    });
    const auto got = realizable_valuations(set);
    CHECK(std::vector<std::vector<bool>>(expected.begin(), expected.end()) == got);
  }
}
