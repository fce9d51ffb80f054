#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trel/formula.hpp"
#include "trel/truth_value.hpp"

namespace trel {

// Map from variables to truth values; keeps insertion order.
class Assignment {
 public:
  using Entry = std::pair<Variable, TruthValue>;

  Assignment() = default;
  Assignment(std::span<const Variable> variables, std::span<const TruthValue> values);

  // Inserts or overwrites.
  void set(const Variable& v, TruthValue value);
  std::optional<TruthValue> get(const Variable& v) const noexcept;
  // Throws EvaluationError when v is unassigned.
  TruthValue at(const Variable& v) const;
  bool contains(const Variable& v) const noexcept { return get(v).has_value(); }

  // No variable maps to X.
  bool is_definite() const noexcept;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Entry> entries_;
};

// Pointwise information order over a shared domain.
bool information_leq(const Assignment& lower, const Assignment& upper);

// "P=T,Q=X". Values T, F, X or x; whitespace around items is ignored.
// Throws ParseError on malformed text or a repeated variable.
Assignment parse_assignment(std::string_view text);

// "P=T,Q=x" in insertion order.
std::string to_string(const Assignment& a);

}  // namespace trel
