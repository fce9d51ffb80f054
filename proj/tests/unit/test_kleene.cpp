#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "trel/error.hpp"
#include "trel/kleene.hpp"
#include "trel/parser.hpp"
#include "trel/render.hpp"

using namespace trel;

namespace {

constexpr TruthValue T = TruthValue::T, F = TruthValue::F, X = TruthValue::X;

const char* kPeirce = "((A -> B) -> A) -> A";
const char* kSyllogism = "(P -> Q) -> ((Q -> R) -> (P -> R))";

TruthValue eval(const char* formula, const char* assignment) {
  return evaluate(parse(formula), parse_assignment(assignment));
}

std::vector<TruthValue> values(const TruthTable& t) { return t.values; }

VarSet vars(std::initializer_list<const char*> names) {
  VarSet out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

}  // namespace

TEST_CASE("connectives match the elementary tables entry by entry") {
  for (TruthValue a : kAllTruthValues) {
    CHECK(kleene_not(a) == oracle::table_not(a));
    for (TruthValue b : kAllTruthValues) {
      CHECK(kleene_and(a, b) == oracle::table_and(a, b));
      CHECK(kleene_or(a, b) == oracle::table_or(a, b));
      CHECK(kleene_implies(a, b) == oracle::table_implies(a, b));
    }
  }
}

TEST_CASE("evaluation examples") {
  CHECK(eval("A -> B", "A=X,B=X") == X);
  CHECK(eval("A -> B", "A=F,B=X") == T);
  CHECK(eval("A -> B", "A=X,B=F") == X);
  CHECK(eval("A -> B", "A=T,B=X") == X);
  CHECK(eval("A | B", "A=T,B=X") == T);
  CHECK(eval("A & B", "A=X,B=F") == F);
  CHECK(eval(kPeirce, "A=T,B=X") == T);
  CHECK(eval(kPeirce, "A=F,B=X") == T);
  CHECK(eval(kPeirce, "A=X,B=F") == X);
  CHECK(eval(kPeirce, "A=X,B=x") == X);
  // No shortcut identities: excluded middle stays unknown.
  CHECK(eval("P | ~P", "P=X") == X);
  // Extra entries are ignored.
  CHECK(eval("P", "Q=F,P=T") == T);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval("P & Q", "P=T"), EvaluationError);
  CHECK_THROWS_AS(evaluate_classical(parse("P"), parse_assignment("P=X")), ArgumentError);
  CHECK(evaluate_classical(parse("P & ~P"), parse_assignment("P=T")) == F);
  CHECK(evaluate_classical(parse("P & ~P"), parse_assignment("P=F")) == F);
}

TEST_CASE("assignment syntax") {
  const Assignment a = parse_assignment("P=T, Q=x ,R=F");
  CHECK(a.size() == 3);
  CHECK(a.at(Variable("Q")) == X);
  CHECK_FALSE(a.is_definite());
  CHECK(to_string(a) == "P=T,Q=x,R=F");
  CHECK(parse_assignment("").size() == 0);
  CHECK_THROWS_AS(parse_assignment("P=Y"), ParseError);
  CHECK_THROWS_AS(parse_assignment("P"), ParseError);
  CHECK_THROWS_AS(parse_assignment("P=T,P=F"), ParseError);
  CHECK_THROWS_AS(parse_assignment("1=T"), ParseError);
}

TEST_CASE("information order") {
  CHECK(information_leq(X, T));
  CHECK(information_leq(X, F));
  CHECK(information_leq(T, T));
  CHECK_FALSE(information_leq(T, F));
  CHECK_FALSE(information_leq(T, X));
  CHECK(information_leq(parse_assignment("P=X,Q=T"), parse_assignment("P=F,Q=T")));
  CHECK_FALSE(information_leq(parse_assignment("P=T"), parse_assignment("P=X")));
}

TEST_CASE("tautologies") {
  CHECK(is_tautology(parse(kPeirce)));
  CHECK(is_tautology(parse("(~B | M) | (~M | B)")));
  CHECK(is_tautology(parse(kSyllogism)));
  CHECK_FALSE(is_tautology(parse("P -> Q")));
  Limits tight;
  tight.max_two_valued_vars = 2;
  CHECK_THROWS_AS(is_tautology(parse(kSyllogism), tight), LimitError);
}

TEST_CASE("classical tables") {
  const TruthTable peirce = table(parse(kPeirce), TableMode::Classical);
  CHECK(peirce.row_count() == 4);
  CHECK(values(peirce) == std::vector{T, T, T, T});
  CHECK(peirce.assignment(1) == parse_assignment("A=T,B=F"));
  CHECK(peirce.assignment(2) == parse_assignment("A=F,B=T"));

  const TruthTable syllogism = table(parse(kSyllogism), TableMode::Classical);
  CHECK(syllogism.row_count() == 8);
  CHECK(values(syllogism) == std::vector<TruthValue>(8, T));
}

TEST_CASE("partial tables pin the rest to X") {
  const Formula peirce = parse(kPeirce);
  const TruthTable a = table(peirce, TableMode::Partial, vars({"A"}));
  CHECK(values(a) == std::vector{T, T});
  CHECK(a.assignment(0) == parse_assignment("A=T,B=X"));
  CHECK(a.assignment(1) == parse_assignment("A=F,B=X"));
  CHECK(values(table(peirce, TableMode::Partial, vars({"B"}))) == std::vector{X, X});
  CHECK(values(table(peirce, TableMode::Partial, {})) == std::vector{X});

  const Formula syllogism = parse(kSyllogism);
  CHECK(values(table(syllogism, TableMode::Partial, vars({"P", "Q"}))) == std::vector{X, T, T, T});
  CHECK(values(table(syllogism, TableMode::Partial, vars({"P", "R"}))) == std::vector{T, X, T, T});
  CHECK(values(table(syllogism, TableMode::Partial, vars({"Q", "R"}))) == std::vector{T, T, T, X});
  // Varied order follows the formula, not the argument.
  CHECK(values(table(syllogism, TableMode::Partial, vars({"Q", "P"}))) == std::vector{X, T, T, T});

  CHECK_THROWS_AS(table(peirce, TableMode::Partial, vars({"Z"})), ArgumentError);
}

TEST_CASE("three-valued tables enumerate T < F < X") {
  const TruthTable t = table(parse("P -> Q"), TableMode::ThreeValued);
  REQUIRE(t.row_count() == 9);
  CHECK(t.assignment(0) == parse_assignment("P=T,Q=T"));
  CHECK(t.assignment(1) == parse_assignment("P=T,Q=F"));
  CHECK(t.assignment(2) == parse_assignment("P=T,Q=X"));
  CHECK(t.assignment(8) == parse_assignment("P=X,Q=X"));
  CHECK(values(t) == std::vector{T, F, X, T, T, T, T, X, X});
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    CHECK(t.values[i] == evaluate(t.formula, t.assignment(i)));
  }

  Limits tight;
  tight.max_three_valued_vars = 1;
  CHECK_THROWS_AS(table(parse("P -> Q"), TableMode::ThreeValued, {}, tight), LimitError);
  CHECK_NOTHROW(table(parse("P -> Q"), TableMode::Classical, {}, tight));
}

TEST_CASE("table text rendering") {
  const TruthTable t = table(parse(kPeirce), TableMode::Partial, vars({"B"}));
  CHECK(render::table_tsv(t) == "A\tB\tvalue\nx\tT\tx\nx\tF\tx\n");
}

TEST_CASE("De Morgan holds pointwise") {
  std::mt19937_64 rng(5);
  const auto rows = oracle::rows(2, {T, F, X});
  for (int i = 0; i < 300; ++i) {
    const Formula a = oracle::random_formula(rng, 2, 3);
    const Formula b = oracle::random_formula(rng, 2, 3);
    const Formula lhs = Formula::negation(Formula::conjunction(a, b));
    const Formula rhs = Formula::disjunction(Formula::negation(a), Formula::negation(b));
    const Formula lhs2 = Formula::negation(Formula::disjunction(a, b));
    const Formula rhs2 = Formula::conjunction(Formula::negation(a), Formula::negation(b));
    for (const auto& row : rows) {
      const Assignment asg(vars({"p0", "p1"}), row);
      CHECK(evaluate(lhs, asg) == evaluate(rhs, asg));
      CHECK(evaluate(lhs2, asg) == evaluate(rhs2, asg));
    }
  }
}
