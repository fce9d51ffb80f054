#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "trel/formula.hpp"
#include "trel/kernels.hpp"
#include "trel/limits.hpp"

namespace trel {

// True iff every T/F assignment to `set`, with every other variable of f
// pinned to X, gives f a definite value under the strong tables.
// Throws ArgumentError if `set` is not a subset of variables(f).
bool is_determining(const Formula& f, std::span<const Variable> set, const Limits& limits = {});

// True iff some determining set omits `v`. By superset monotonicity that is
// the same as variables(f) minus v being determining.
bool is_redundant(const Formula& f, const Variable& v, const Limits& limits = {});

enum class Classification { NotTautology, TautologyNotTRelevant, TRelevantTautology };

std::string_view to_string(Classification c);

struct RelevanceReport {
  Formula formula;
  VarSet variables;
  // All inclusion-minimal determining sets, by ascending size then
  // lexicographically in canonical variable order.
  std::vector<VarSet> minimal_determining_sets;
  VarSet redundant;
  VarSet relevant;  // variables minus redundant
  bool t_relevant = false;
  Classification classification = Classification::NotTautology;
};

// Full report. Enumeration cost is about 3^n kernel rows, so n is capped by
// limits.max_three_valued_vars.
RelevanceReport analyze(const Formula& f, const Limits& limits = {},
                        kernels::Execution execution = kernels::Execution::Automatic);

}  // namespace trel
