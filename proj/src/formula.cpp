#include "trel/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "trel/error.hpp"

namespace trel {

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) throw ArgumentError("invalid variable name '" + name_ + "'");
}

struct Formula::Node {
  Connective connective;
  std::optional<Variable> var;
  Formula first;
  Formula second;
  std::size_t size;
};

Formula Formula::variable(Variable v) {
  return Formula(std::make_shared<const Node>(Node{Connective::Var, std::move(v), {}, {}, 1}));
}

Formula Formula::negation(Formula operand) {
  const std::size_t size = operand.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::Not, std::nullopt, std::move(operand), {}, size}));
}

Formula Formula::binary(Connective connective, Formula lhs, Formula rhs) {
  if (connective == Connective::Var || connective == Connective::Not) {
    throw ArgumentError("not a binary connective");
  }
  const std::size_t size = lhs.size() + rhs.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{connective, std::nullopt, std::move(lhs), std::move(rhs), size}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Connective::And, std::move(lhs), std::move(rhs));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Connective::Or, std::move(lhs), std::move(rhs));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Connective::Implies, std::move(lhs), std::move(rhs));
}

Connective Formula::connective() const noexcept { return node_->connective; }

bool Formula::is_literal() const noexcept {
  return is_variable() || (connective() == Connective::Not && operand().is_variable());
}

const Variable& Formula::variable() const { return *node_->var; }
const Formula& Formula::operand() const { return node_->first; }
const Formula& Formula::lhs() const { return node_->first; }
const Formula& Formula::rhs() const { return node_->second; }
std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective() || a.size() != b.size()) return false;
  switch (a.connective()) {
    case Connective::Var:
      return a.variable() == b.variable();
    case Connective::Not:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

void collect_variables(const Formula& f, VarSet& out) {
  switch (f.connective()) {
    case Connective::Var:
      if (std::find(out.begin(), out.end(), f.variable()) == out.end()) out.push_back(f.variable());
      return;
    case Connective::Not:
      collect_variables(f.operand(), out);
      return;
    default:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
  }
}

bool is_binary(const Formula& f) {
  return f.connective() != Connective::Var && f.connective() != Connective::Not;
}

std::string_view symbol(Connective c, Notation notation) {
  const bool unicode = notation == Notation::Unicode;
  switch (c) {
    case Connective::Not: return "~";
    case Connective::And: return "&";
    case Connective::Or: return unicode ? "∨" : "|";
    case Connective::Implies: return unicode ? "→" : "->";
    default: return "";
  }
}

void print(const Formula& f, Notation notation, std::string& out) {
  auto wrapped = [&](const Formula& child, bool parens) {
    if (parens) out += '(';
    print(child, notation, out);
    if (parens) out += ')';
  };
  switch (f.connective()) {
    case Connective::Var:
      out += f.variable().name();
      return;
    case Connective::Not:
      out += symbol(Connective::Not, notation);
      wrapped(f.operand(), is_binary(f.operand()));
      return;
    default: {
      const Connective c = f.connective();
      // & and | associate to the left, so a left-nested chain reads unbracketed.
      const bool chain = c != Connective::Implies && f.lhs().connective() == c;
      wrapped(f.lhs(), is_binary(f.lhs()) && !chain);
      out += ' ';
      out += symbol(c, notation);
      out += ' ';
      wrapped(f.rhs(), is_binary(f.rhs()));
    }
  }
}

}  // namespace

VarSet variables(const Formula& f) {
  VarSet out;
  collect_variables(f, out);
  return out;
}

VarSet canonical_subset(std::span<const Variable> order, std::span<const Variable> subset) {
  for (const Variable& v : subset) {
    if (std::find(order.begin(), order.end(), v) == order.end()) {
      throw ArgumentError("variable '" + v.name() + "' does not occur in the formula");
    }
  }
  VarSet out;
  for (const Variable& v : order) {
    if (std::find(subset.begin(), subset.end(), v) != subset.end()) out.push_back(v);
  }
  return out;
}

std::string to_string(const Formula& f, Notation notation) {
  std::string out;
  print(f, notation, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const Variable& v) { return os << v.name(); }

std::string to_string(std::span<const Variable> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i != 0) out += ", ";
    out += set[i].name();
  }
  out += '}';
  return out;
}

}  // namespace trel
