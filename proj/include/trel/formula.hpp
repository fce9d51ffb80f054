#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace trel {

// A sentence letter. Names are case-sensitive identifiers
// ([A-Za-z][A-Za-z0-9_]*).
class Variable {
 public:
  explicit Variable(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable&, const Variable&) = default;

 private:
  std::string name_;
};

bool is_identifier(std::string_view text) noexcept;

// Ordered set of variables. Functions that return one keep the canonical
// (first-occurrence) order of the formula they describe.
using VarSet = std::vector<Variable>;

enum class Connective : std::uint8_t { Var, Not, And, Or, Implies };

// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  static Formula variable(Variable v);
  static Formula variable(std::string name) { return variable(Variable(std::move(name))); }
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  // connective must be And, Or or Implies.
  static Formula binary(Connective connective, Formula lhs, Formula rhs);

  Connective connective() const noexcept;
  bool is_variable() const noexcept { return connective() == Connective::Var; }
  // Var or Not(Var).
  bool is_literal() const noexcept;

  // Preconditions: is_variable() / Not / binary respectively.
  const Variable& variable() const;
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  // Number of nodes in the tree.
  std::size_t size() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;  // only for the unused child slots of a Node
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Distinct variables in first-occurrence (left-to-right) order. This order
// is the canonical column order for tables, sets and witnesses.
VarSet variables(const Formula& f);

// Returns the elements of `subset` in the order they appear in `order`,
// without duplicates. Throws ArgumentError if some element is missing from
// `order`.
VarSet canonical_subset(std::span<const Variable> order, std::span<const Variable> subset);

enum class Notation {
  Ascii,    // ~ & | ->
  Unicode,  // ~ & ∨ →
};

// Renders with parentheses around every binary operand of a binary
// connective, except left-nested chains of & or of |. parse(to_string(f))
// reproduces f.
std::string to_string(const Formula& f, Notation notation = Notation::Ascii);

std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Variable& v);

// "{A, B}"
std::string to_string(std::span<const Variable> set);

}  // namespace trel
