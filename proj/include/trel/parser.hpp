#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "trel/error.hpp"
#include "trel/formula.hpp"

namespace trel {

// Byte offsets [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(message), span_(span) {}

  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

// Parses the concrete syntax
//
//   formula := iff
//   iff     := implies ( ("<->" | "↔") implies )*      (sugar, left-assoc)
//   implies := or ( ("->" | "→") implies )?             (right-assoc)
//   or      := and ( ("|" | "∨" | "v") and )*           (left-assoc)
//   and     := unary ( ("&" | "∧") unary )*             (left-assoc)
//   unary   := ("~" | "¬") unary | atom
//   atom    := IDENT | "(" formula ")"
//
// A standalone "v" is always the disjunction symbol. A <-> B is returned as
// (A -> B) & (B -> A).
Formula parse(std::string_view text);

// Message plus the input line with a caret marker under the offending span.
std::string describe(const ParseError& error, std::string_view text);

}  // namespace trel
