#include "trel/kleene.hpp"

#include <algorithm>

#include "trel/error.hpp"
#include "trel/kernels.hpp"

namespace trel {

TruthValue evaluate(const Formula& f, const Assignment& a) {
  switch (f.connective()) {
    case Connective::Var:
      return a.at(f.variable());
    case Connective::Not:
      return kleene_not(evaluate(f.operand(), a));
    case Connective::And:
      return kleene_and(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
    case Connective::Or:
      return kleene_or(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
    case Connective::Implies:
      return kleene_implies(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
  }
  return TruthValue::X;
}

namespace {

bool classical(const Formula& f, const Assignment& a) {
  switch (f.connective()) {
    case Connective::Var:
      return a.at(f.variable()) == TruthValue::T;
    case Connective::Not:
      return !classical(f.operand(), a);
    case Connective::And:
      return classical(f.lhs(), a) && classical(f.rhs(), a);
    case Connective::Or:
      return classical(f.lhs(), a) || classical(f.rhs(), a);
    case Connective::Implies:
      return !classical(f.lhs(), a) || classical(f.rhs(), a);
  }
  return false;
}

}  // namespace

TruthValue evaluate_classical(const Formula& f, const Assignment& a) {
  if (!a.is_definite()) throw ArgumentError("classical evaluation needs a definite assignment");
  return classical(f, a) ? TruthValue::T : TruthValue::F;
}

bool is_tautology(const Formula& f, const Limits& limits) {
  const VarSet vars = variables(f);
  require_within_cap(vars.size(), limits.max_two_valued_vars, "tautology check");
  const kernels::Program program(f, vars);
  const kernels::RowSpace space(
      std::vector<kernels::ColumnDomain>(vars.size(), kernels::ColumnDomain::definite()));
  return !kernels::find_first_outside(program, space, mask_of(TruthValue::T)).has_value();
}

std::string_view to_string(TableMode mode) {
  switch (mode) {
    case TableMode::Classical: return "classical";
    case TableMode::ThreeValued: return "three";
    case TableMode::Partial: return "partial";
  }
  return "";
}

TruthTable table(const Formula& f, TableMode mode, std::span<const Variable> varied,
                 const Limits& limits) {
  TruthTable out{f, variables(f), {}, mode, {}, {}};
  std::vector<kernels::ColumnDomain> domains;
  switch (mode) {
    case TableMode::Classical:
      require_within_cap(out.variables.size(), limits.max_two_valued_vars, "classical table");
      out.varied = out.variables;
      domains.assign(out.variables.size(), kernels::ColumnDomain::definite());
      break;
    case TableMode::ThreeValued:
      require_within_cap(out.variables.size(), limits.max_three_valued_vars, "three-valued table");
      out.varied = out.variables;
      domains.assign(out.variables.size(), kernels::ColumnDomain::full());
      break;
    case TableMode::Partial:
      out.varied = canonical_subset(out.variables, varied);
      require_within_cap(out.varied.size(), limits.max_two_valued_vars, "partial table");
      for (const Variable& v : out.variables) {
        const bool ranges = std::find(out.varied.begin(), out.varied.end(), v) != out.varied.end();
        domains.push_back(ranges ? kernels::ColumnDomain::definite()
                                 : kernels::ColumnDomain::pinned(TruthValue::X));
      }
      break;
  }

  const kernels::Program program(f, out.variables);
  const kernels::RowSpace space(std::move(domains));
  const std::size_t rows = static_cast<std::size_t>(space.size());
  const std::size_t width = out.variables.size();
  out.values.resize(rows);
  kernels::evaluate_rows(program, space, out.values);

  out.cells.resize(rows * width);
  std::vector<TruthValue> row(width);
  std::vector<std::uint8_t> digits(width);
  space.decode(0, row, digits);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(row.begin(), row.end(), out.cells.begin() + static_cast<std::ptrdiff_t>(i * width));
    space.advance(row, digits);
  }
  return out;
}

}  // namespace trel
