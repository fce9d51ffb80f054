#include "trel/relevance.hpp"

#include <algorithm>
#include <cstdint>

#include "trel/error.hpp"
#include "trel/kleene.hpp"

namespace trel {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskVars = 63;

bool determining_mask(const kernels::Program& program, std::size_t width, Mask set) {
  std::vector<kernels::ColumnDomain> domains;
  domains.reserve(width);
  for (std::size_t i = 0; i < width; ++i) {
    domains.push_back((set >> i) & 1 ? kernels::ColumnDomain::definite()
                                     : kernels::ColumnDomain::pinned(TruthValue::X));
  }
  const kernels::RowSpace space(std::move(domains));
  return !kernels::serial::find_first_outside(program, space, kDefiniteMask).has_value();
}

VarSet set_of_mask(const VarSet& order, Mask m) {
  VarSet out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((m >> i) & 1) out.push_back(order[i]);
  }
  return out;
}

// Size-k subsets of {0..n-1} in lexicographic order of their sorted indices.
std::vector<Mask> combinations(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (std::size_t i : idx) m |= Mask{1} << i;
    out.push_back(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

bool is_determining(const Formula& f, std::span<const Variable> set, const Limits& limits) {
  const VarSet vars = variables(f);
  const VarSet chosen = canonical_subset(vars, set);
  require_within_cap(chosen.size(), limits.max_two_valued_vars, "determining-set check");
  const kernels::Program program(f, vars);
  std::vector<kernels::ColumnDomain> domains;
  for (const Variable& v : vars) {
    const bool ranges = std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    domains.push_back(ranges ? kernels::ColumnDomain::definite()
                             : kernels::ColumnDomain::pinned(TruthValue::X));
  }
  const kernels::RowSpace space(std::move(domains));
  return !kernels::find_first_outside(program, space, kDefiniteMask).has_value();
}

bool is_redundant(const Formula& f, const Variable& v, const Limits& limits) {
  VarSet rest = variables(f);
  auto it = std::find(rest.begin(), rest.end(), v);
  if (it == rest.end()) {
    throw ArgumentError("variable '" + v.name() + "' does not occur in the formula");
  }
  rest.erase(it);
  return is_determining(f, rest, limits);
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NotTautology: return "NOT_TAUTOLOGY";
    case Classification::TautologyNotTRelevant: return "TAUTOLOGY_NOT_T_RELEVANT";
    case Classification::TRelevantTautology: return "T_RELEVANT_TAUTOLOGY";
  }
  return "";
}

RelevanceReport analyze(const Formula& f, const Limits& limits, kernels::Execution execution) {
  RelevanceReport report{f, variables(f), {}, {}, {}, false, Classification::NotTautology};
  const VarSet& vars = report.variables;
  const std::size_t n = vars.size();
  require_within_cap(n, std::min(limits.max_three_valued_vars, kMaxMaskVars), "relevance analysis");

  const kernels::Program program(f, vars);
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < n; ++i) work *= 3;
  const bool parallel =
      execution == kernels::Execution::Parallel ||
      (execution == kernels::Execution::Automatic && work >= kernels::kParallelThreshold &&
       kernels::worker_count() > 1);

  // Ascending size; supersets of an already found set are skipped. Sets of
  // equal size are never nested, so each level is tested independently.
  std::vector<Mask> minimal;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Mask> candidates;
    for (Mask m : combinations(n, k)) {
      const bool pruned =
          std::any_of(minimal.begin(), minimal.end(), [&](Mask s) { return (s & m) == s; });
      if (!pruned) candidates.push_back(m);
    }
    if (candidates.empty()) break;

    std::vector<char> hit(candidates.size(), 0);
    const auto count = static_cast<std::int64_t>(candidates.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < count; ++i) {
        hit[i] = determining_mask(program, n, candidates[i]) ? 1 : 0;
      }
    } else {
      for (std::int64_t i = 0; i < count; ++i) {
        hit[i] = determining_mask(program, n, candidates[i]) ? 1 : 0;
      }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (hit[i]) minimal.push_back(candidates[i]);
    }
  }

  for (Mask m : minimal) report.minimal_determining_sets.push_back(set_of_mask(vars, m));

  for (const Variable& v : vars) {
    if (is_redundant(f, v, limits)) {
      report.redundant.push_back(v);
    } else {
      report.relevant.push_back(v);
    }
  }
  report.t_relevant = report.redundant.empty();

  if (!is_tautology(f, limits)) {
    report.classification = Classification::NotTautology;
  } else {
    report.classification = report.t_relevant ? Classification::TRelevantTautology
                                              : Classification::TautologyNotTRelevant;
  }
  return report;
}

}  // namespace trel
