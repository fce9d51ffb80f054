#include "trel/assignment.hpp"

#include <algorithm>
#include <cctype>

#include "trel/error.hpp"
#include "trel/parser.hpp"

namespace trel {

Assignment::Assignment(std::span<const Variable> variables, std::span<const TruthValue> values) {
  if (variables.size() != values.size()) throw ArgumentError("assignment size mismatch");
  entries_.reserve(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) set(variables[i], values[i]);
}

void Assignment::set(const Variable& v, TruthValue value) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Entry& e) { return e.first == v; });
  if (it == entries_.end()) {
    entries_.emplace_back(v, value);
  } else {
    it->second = value;
  }
}

std::optional<TruthValue> Assignment::get(const Variable& v) const noexcept {
  for (const Entry& e : entries_) {
    if (e.first == v) return e.second;
  }
  return std::nullopt;
}

TruthValue Assignment::at(const Variable& v) const {
  if (auto value = get(v)) return *value;
  throw EvaluationError("no value assigned to variable '" + v.name() + "'");
}

bool Assignment::is_definite() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Entry& e) { return e.second == TruthValue::X; });
}

bool information_leq(const Assignment& lower, const Assignment& upper) {
  if (lower.size() != upper.size()) return false;
  for (const auto& [var, value] : lower.entries()) {
    auto other = upper.get(var);
    if (!other || !information_leq(value, *other)) return false;
  }
  return true;
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::size_t pos = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t first = pos;
    std::size_t last = end;
    while (first < last && is_space(text[first])) ++first;
    while (last > first && is_space(text[last - 1])) --last;
    const std::string_view item = text.substr(first, last - first);

    if (item.empty()) {
      // An entirely blank string is the empty assignment.
      if (first == 0 && end == text.size()) break;
      throw ParseError({first, last}, "expected 'name=value' at offset " + std::to_string(first));
    }
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError({first, last}, "expected '=' in '" + std::string(item) + "'");
    }
    std::string_view name = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    while (!name.empty() && is_space(name.back())) name.remove_suffix(1);
    while (!value.empty() && is_space(value.front())) value.remove_prefix(1);
    if (!is_identifier(name)) {
      throw ParseError({first, first + eq}, "invalid variable name '" + std::string(name) + "'");
    }
    const auto tv = value.size() == 1 ? truth_value_from_char(value.front()) : std::nullopt;
    if (!tv) {
      throw ParseError({first + eq + 1, last},
                       "expected value T, F or X, found '" + std::string(value) + "'");
    }
    Variable var{std::string(name)};
    if (out.contains(var)) {
      throw ParseError({first, last}, "variable '" + var.name() + "' assigned twice");
    }
    out.set(var, *tv);
    pos = end + 1;
  }
  return out;
}

std::string to_string(const Assignment& a) {
  std::string out;
  for (const auto& [var, value] : a.entries()) {
    if (!out.empty()) out += ',';
    out += var.name();
    out += '=';
    out += to_char(value);
  }
  return out;
}

}  // namespace trel
