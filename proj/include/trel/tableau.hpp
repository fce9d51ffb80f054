#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trel/formula.hpp"
#include "trel/limits.hpp"

namespace trel {

// Expansion rules. Alpha rules stack their results on the branch, beta
// rules split it.
//
//   alpha:  A & B      => A, B          beta:  A | B      => A  | B
//           ~(A | B)   => ~A, ~B               ~(A & B)   => ~A | ~B
//           ~(A -> B)  => A, ~B                A -> B     => ~A | B
//           ~~A        => A
enum class Rule : std::uint8_t {
  Root,
  And,
  NotOr,
  NotImplies,
  DoubleNegation,
  Or,
  NotAnd,
  Implies,
};

std::string_view to_string(Rule rule);

struct Expansion {
  Rule rule;
  bool branching;
  // Alpha: everything in `left`, in order. Beta: one formula per side.
  std::vector<Formula> left;
  std::vector<Formula> right;
};

// nullopt for literals (Var or ~Var), which are never expanded.
std::optional<Expansion> expand(const Formula& f);

enum class Strategy {
  // Alpha before beta, oldest candidate first; on closure take the
  // complementary pair whose later literal is oldest.
  Default,
  // Alpha before beta, newest candidate first; on closure take the pair
  // whose later literal is newest.
  Reversed,
  // Branches are saturated without early closure so every complementary
  // pair is visible; all minimal closing sets are reported.
  Exhaustive,
};

std::string_view to_string(Strategy s);

using NodeId = std::uint32_t;

struct TableauNode {
  NodeId id;
  Formula formula;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  Rule rule;
  // Node whose expansion produced this one; empty for the root.
  std::optional<NodeId> source;
};

struct Closure {
  Variable variable;
  NodeId positive;  // node holding V
  NodeId negative;  // node holding ~V
};

struct Branch {
  std::vector<NodeId> path;  // root to leaf
  std::optional<Closure> closure;

  bool is_closed() const noexcept { return closure.has_value(); }
};

enum class Outcome {
  ProvedTrue,      // closed, every variable contradicted
  ProvedNotFalse,  // closed by a proper subset of the variables
  Open,
};

std::string_view to_string(Outcome o);

struct TableauResult {
  Formula formula;  // L; the tree starts at ~L
  Strategy strategy;
  std::vector<TableauNode> nodes;  // indexed by NodeId
  std::vector<Branch> branches;    // left to right
  // Closing variables over all branches in canonical order; empty when open.
  VarSet closing_set;
  // Exhaustive only: every minimal closing set, lexicographic.
  std::vector<VarSet> closing_sets;
  Outcome outcome;
};

// Builds the refutation tree for ~L. Throws LimitError once the tree would
// exceed limits.max_tableau_nodes.
TableauResult refute(const Formula& formula, Strategy strategy = Strategy::Default,
                     const Limits& limits = {});

// Minimal closing sets over all per-branch choices of complementary pair;
// empty if the tree does not close.
std::vector<VarSet> closing_sets_all(const Formula& formula, const Limits& limits = {});

}  // namespace trel
