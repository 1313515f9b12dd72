#pragma once

#include <cassert>
#include <optional>

#include "signature.hpp"
#include "tableau.hpp"

namespace c2crystal {

/// Which block of +'s the acting entry belongs to when e_i is defined.
enum class ActionSide : std::uint8_t { Left, Right };

constexpr const char* action_side_name(ActionSide s) {
  return s == ActionSide::Left ? "left" : "right";
}

/// Determined by the statistics alone: color 1 acts Left iff A < B, color 2
/// acts Left iff C < D.  Meaningful only when epsilon(t, c) > 0; the agreement
/// with the block membership of the acting entry is a tested theorem, not a
/// runtime branch.
inline ActionSide action_side(const Tableau& t, Color c) {
  const AbcdStats s = abcd(t);
  if (c == Color::One) return s.a < s.b ? ActionSide::Left : ActionSide::Right;
  return s.c < s.d ? ActionSide::Left : ActionSide::Right;
}

/// Letter maps of the raising operators: e1: 2->1, -1->-2; e2: -2->2.
constexpr std::optional<Letter> raised(Letter a, Color c) {
  if (c == Color::One) {
    if (a == Letter::Two) return Letter::One;
    if (a == Letter::OneBar) return Letter::TwoBar;
  } else {
    if (a == Letter::TwoBar) return Letter::Two;
  }
  return std::nullopt;
}

/// Letter maps of the lowering operators: f1: 1->2, -2->-1; f2: 2->-2.
constexpr std::optional<Letter> lowered(Letter a, Color c) {
  if (c == Color::One) {
    if (a == Letter::One) return Letter::Two;
    if (a == Letter::TwoBar) return Letter::OneBar;
  } else {
    if (a == Letter::Two) return Letter::TwoBar;
  }
  return std::nullopt;
}

/// Cell of the leftmost + in the reduced signature, i.e. where e_c acts.
inline std::optional<CellRef> raising_cell(const Tableau& t, Color c) {
  const ReducedSignature red = reduce(signature(t, c));
  const auto pos = red.leftmost_plus();
  if (!pos) return std::nullopt;
  return red.cells[*pos];
}

/// Cell of the rightmost - in the reduced signature, i.e. where f_c acts.
inline std::optional<CellRef> lowering_cell(const Tableau& t, Color c) {
  const ReducedSignature red = reduce(signature(t, c));
  const auto pos = red.rightmost_minus();
  if (!pos) return std::nullopt;
  return red.cells[*pos];
}

/// Raising operator.  Empty optional is the formal zero.
inline std::optional<Tableau> apply_e(const Tableau& t, Color c) {
  const auto cell = raising_cell(t, c);
  if (!cell) return std::nullopt;
  const auto up = raised(t.at(*cell), c);
  assert(up && "reduced + must sit on a raisable letter");
  Tableau u = t.with(*cell, *up);
  assert(is_valid(u) && "raising must stay inside the tableau family");
  return u;
}

/// Lowering operator.  Empty optional is the formal zero.
inline std::optional<Tableau> apply_f(const Tableau& t, Color c) {
  const auto cell = lowering_cell(t, c);
  if (!cell) return std::nullopt;
  const auto down = lowered(t.at(*cell), c);
  assert(down && "reduced - must sit on a lowerable letter");
  Tableau u = t.with(*cell, *down);
  assert(is_valid(u) && "lowering must stay inside the tableau family");
  return u;
}

}  // namespace c2crystal
