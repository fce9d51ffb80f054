#include "trel/theorem.hpp"

#include <algorithm>

#include "trel/error.hpp"
#include "trel/kernels.hpp"
#include "trel/kleene.hpp"

namespace trel {

namespace {

VarSet deduplicated(std::span<const Variable> in) {
  VarSet out;
  for (const Variable& v : in) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

// Right-nested fold of one term per variable.
template <class Term>
Formula fold_right(const VarSet& vars, Connective joiner, Term term) {
  Formula acc = term(vars.back());
  for (std::size_t i = vars.size() - 1; i-- > 0;) {
    acc = Formula::binary(joiner, term(vars[i]), std::move(acc));
  }
  return acc;
}

}  // namespace

CanonicalConjunction::CanonicalConjunction(VarSet variables)
    : variables_(deduplicated(variables)) {
  if (variables_.empty()) throw ArgumentError("canonical conjunction needs at least one variable");
}

Formula CanonicalConjunction::to_formula() const {
  return fold_right(variables_, Connective::And, [](const Variable& v) {
    const Formula p = Formula::variable(v);
    return Formula::disjunction(p, Formula::negation(p));
  });
}

TruthValue canonical_value(const CanonicalConjunction& c, const Assignment& a) {
  TruthValue acc = TruthValue::T;
  for (const Variable& v : c.variables()) {
    const TruthValue value = a.at(v);
    acc = kleene_and(acc, kleene_or(value, kleene_not(value)));
  }
  return acc;
}

EquivalenceVerdict check_equivalence(const Formula& formula, std::span<const Variable> set,
                                     const Limits& limits) {
  const VarSet vars = variables(formula);
  EquivalenceVerdict verdict{formula, canonical_subset(vars, set), std::nullopt};
  if (verdict.set.empty()) throw ArgumentError("the variable set must not be empty");
  require_within_cap(vars.size(), limits.max_three_valued_vars, "equivalence check");

  const CanonicalConjunction canonical(verdict.set);
  const kernels::Program lhs(formula, vars);
  const kernels::Program rhs(canonical.to_formula(), vars);
  const kernels::RowSpace space(
      std::vector<kernels::ColumnDomain>(vars.size(), kernels::ColumnDomain::full()));
  if (auto row = kernels::find_first_mismatch(lhs, rhs, space)) {
    std::vector<TruthValue> values(vars.size());
    std::vector<std::uint8_t> digits(vars.size());
    space.decode(*row, values, digits);
    Assignment a(vars, values);
    verdict.witness = Witness{a, evaluate(formula, a), canonical_value(canonical, a)};
  }
  return verdict;
}

Formula negated_form(std::span<const Variable> set) {
  const VarSet vars = deduplicated(set);
  if (vars.empty()) throw ArgumentError("the variable set must not be empty");
  return fold_right(vars, Connective::Or, [](const Variable& v) {
    const Formula p = Formula::variable(v);
    return Formula::conjunction(p, Formula::negation(p));
  });
}

}  // namespace trel
