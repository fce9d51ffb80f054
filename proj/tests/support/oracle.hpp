#pragma once

// Test-only reference implementations. Nothing here calls into the library
// beyond the Formula data type: evaluation is a literal table lookup and
// every search is plain brute force.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trel/formula.hpp"
#include "trel/truth_value.hpp"

namespace oracle {

using trel::Formula;
using trel::TruthValue;
using Names = std::vector<std::string>;
using Row = std::vector<TruthValue>;  // indexed like the Names it came with

// Table entries exactly as printed, rows and columns ordered T, X, F.
TruthValue table_not(TruthValue a);
TruthValue table_and(TruthValue a, TruthValue b);
TruthValue table_or(TruthValue a, TruthValue b);
TruthValue table_implies(TruthValue a, TruthValue b);

// Variable names in first-occurrence order.
Names names_of(const Formula& f);

TruthValue eval(const Formula& f, const Names& names, const Row& row);

// All rows over `domain` per column, first column most significant, domain
// order as given.
std::vector<Row> rows(std::size_t columns, const std::vector<TruthValue>& domain);

bool tautology(const Formula& f);
// `set` holds bit i for names_of(f)[i].
bool determining(const Formula& f, std::uint64_t set);
// Minimal determining sets as bitmasks, by size then lexicographic.
std::vector<std::uint64_t> minimal_determining(const Formula& f);

// First row (T < F < X order over names_of(f)) where f differs from the
// conjunction of (v | ~v) over `set`; empty if none.
std::optional<Row> equivalence_witness(const Formula& f, std::uint64_t set);

// Saturated tableau branches for ~f computed by naive DNF expansion. Each
// entry is the bitmask of variables occurring both positively and negatively
// on that branch.
std::vector<std::uint64_t> branch_conflicts(const Formula& f);
// Minimal hitting sets of branch_conflicts(f); empty if some branch has no
// conflict (the tree stays open). Lexicographic order, sizes mixed.
std::vector<std::uint64_t> minimal_closing_sets(const Formula& f);

std::vector<std::string> set_names(const Names& names, std::uint64_t set);

// Random formula over variables p0..p{vars-1} with height at most max_height.
Formula random_formula(std::mt19937_64& rng, int vars, int max_height);

// Every formula over `vars` whose depth is at most `depth`, a lone variable
// having depth 1, addressable by index so a sweep can be split up.
class FormulaSpace {
 public:
  FormulaSpace(const std::vector<std::string>& vars, int depth);

  std::uint64_t size() const { return size_; }
  Formula at(std::uint64_t index) const;

 private:
  std::vector<Formula> atoms_;
  std::vector<Formula> below_;  // depth < `depth`; empty when depth is 1
  std::uint64_t size_ = 0;
};

void for_each_formula(const std::vector<std::string>& vars, int depth,
                      const std::function<void(const Formula&)>& fn);
std::uint64_t count_formulas(std::size_t vars, int depth);

}  // namespace oracle
