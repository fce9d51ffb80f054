#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "trel/assignment.hpp"
#include "trel/formula.hpp"
#include "trel/limits.hpp"
#include "trel/truth_value.hpp"

namespace trel {

// Three-valued evaluation by the strong tables, bottom-up with no
// shortcut identities. Variables not in `a` raise EvaluationError; extra
// entries are ignored.
TruthValue evaluate(const Formula& f, const Assignment& a);

// Classical evaluation. Throws ArgumentError if `a` maps anything to X.
TruthValue evaluate_classical(const Formula& f, const Assignment& a);

// True on all 2^n definite assignments. Throws LimitError past
// limits.max_two_valued_vars.
bool is_tautology(const Formula& f, const Limits& limits = {});

enum class TableMode {
  Classical,    // every variable over {T, F}
  ThreeValued,  // every variable over {T, F, X}
  Partial,      // varied variables over {T, F}, the rest pinned to X
};

std::string_view to_string(TableMode mode);

struct TruthTable {
  Formula formula;
  VarSet variables;  // columns, canonical order
  VarSet varied;     // columns that range; all of them unless Partial
  TableMode mode;
  std::vector<TruthValue> cells;   // row-major, variables.size() per row
  std::vector<TruthValue> values;  // formula value per row

  std::size_t row_count() const noexcept { return values.size(); }
  std::span<const TruthValue> row(std::size_t i) const {
    return std::span<const TruthValue>(cells).subspan(i * variables.size(), variables.size());
  }
  Assignment assignment(std::size_t i) const { return Assignment(variables, row(i)); }
};

// Rows in lexicographic order with T < F < X per column. `varied` is only
// consulted for Partial and must be a subset of variables(f).
TruthTable table(const Formula& f, TableMode mode, std::span<const Variable> varied = {},
                 const Limits& limits = {});

}  // namespace trel
