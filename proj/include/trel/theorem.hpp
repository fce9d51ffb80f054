#pragma once

#include <optional>
#include <span>

#include "trel/assignment.hpp"
#include "trel/formula.hpp"
#include "trel/limits.hpp"
#include "trel/truth_value.hpp"

namespace trel {

// (R1 | ~R1) & ((R2 | ~R2) & ...) over a nonempty variable list.
class CanonicalConjunction {
 public:
  // Throws ArgumentError on an empty list; duplicates are dropped.
  explicit CanonicalConjunction(VarSet variables);

  const VarSet& variables() const noexcept { return variables_; }
  Formula to_formula() const;

 private:
  VarSet variables_;
};

// T when every listed variable is definite in `a`, X otherwise; never F.
// Variables of `a` outside the conjunction are ignored.
TruthValue canonical_value(const CanonicalConjunction& c, const Assignment& a);

struct Witness {
  Assignment assignment;  // over variables(formula), canonical order
  TruthValue formula_value;
  TruthValue canonical_value;
};

struct EquivalenceVerdict {
  Formula formula;
  VarSet set;  // canonical order
  std::optional<Witness> witness;

  bool holds() const noexcept { return !witness.has_value(); }
};

// Compares the formula against the canonical conjunction of `set` on all
// 3^n assignments. The witness, if any, is the first differing assignment
// in T < F < X lexicographic order.
EquivalenceVerdict check_equivalence(const Formula& formula, std::span<const Variable> set,
                                     const Limits& limits = {});

// (R1 & ~R1) | ((R2 & ~R2) | ...). Throws ArgumentError on an empty list.
Formula negated_form(std::span<const Variable> set);

}  // namespace trel
