#pragma once

#include <cstdint>
#include <optional>

namespace trel {

// X is the unknown value. The declaration order T < F < X is the
// enumeration order of table rows and witness search.
enum class TruthValue : std::uint8_t { T = 0, F = 1, X = 2 };

inline constexpr TruthValue kAllTruthValues[] = {TruthValue::T, TruthValue::F, TruthValue::X};
inline constexpr TruthValue kDefiniteTruthValues[] = {TruthValue::T, TruthValue::F};

// Strong (Kleene) tables.

constexpr TruthValue kleene_not(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::T: return TruthValue::F;
    case TruthValue::F: return TruthValue::T;
    default: return TruthValue::X;
  }
}

constexpr TruthValue kleene_and(TruthValue a, TruthValue b) noexcept {
  if (a == TruthValue::F || b == TruthValue::F) return TruthValue::F;
  if (a == TruthValue::T && b == TruthValue::T) return TruthValue::T;
  return TruthValue::X;
}

constexpr TruthValue kleene_or(TruthValue a, TruthValue b) noexcept {
  if (a == TruthValue::T || b == TruthValue::T) return TruthValue::T;
  if (a == TruthValue::F && b == TruthValue::F) return TruthValue::F;
  return TruthValue::X;
}

constexpr TruthValue kleene_implies(TruthValue a, TruthValue b) noexcept {
  if (a == TruthValue::F || b == TruthValue::T) return TruthValue::T;
  if (a == TruthValue::T && b == TruthValue::F) return TruthValue::F;
  return TruthValue::X;
}

constexpr bool is_definite(TruthValue v) noexcept { return v != TruthValue::X; }

// Information order: X below both T and F, otherwise only reflexive.
constexpr bool information_leq(TruthValue a, TruthValue b) noexcept {
  return a == TruthValue::X || a == b;
}

// 'T', 'F', or lowercase 'x' (table rendering).
constexpr char to_char(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::T: return 'T';
    case TruthValue::F: return 'F';
    default: return 'x';
  }
}

// Accepts T, F, X and x.
constexpr std::optional<TruthValue> truth_value_from_char(char c) noexcept {
  switch (c) {
    case 'T': return TruthValue::T;
    case 'F': return TruthValue::F;
    case 'X':
    case 'x': return TruthValue::X;
    default: return std::nullopt;
  }
}

// Bit set of truth values, used by scanning kernels.
using ValueMask = std::uint8_t;

constexpr ValueMask mask_of(TruthValue v) noexcept {
  return static_cast<ValueMask>(1u << static_cast<unsigned>(v));
}
inline constexpr ValueMask kDefiniteMask = mask_of(TruthValue::T) | mask_of(TruthValue::F);

}  // namespace trel
