#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tableau.hpp"

namespace c2crystal {

/// Edge colors of the crystal.  Color::One is the short root, Color::Two the long one.
enum class Color : std::uint8_t { One = 1, Two = 2 };

inline constexpr std::array<Color, 2> kColors{Color::One, Color::Two};

constexpr int color_value(Color c) { return static_cast<int>(c); }
constexpr int color_index(Color c) { return static_cast<int>(c) - 1; }
constexpr Color other_color(Color c) { return c == Color::One ? Color::Two : Color::One; }

enum class SigSym : std::uint8_t { Plus, Minus, Star };

constexpr char sig_char(SigSym s) {
  switch (s) {
    case SigSym::Plus: return '+';
    case SigSym::Minus: return '-';
    case SigSym::Star: return '*';
  }
  return '?';
}

inline std::string sig_string(const std::vector<SigSym>& syms) {
  std::string s;
  s.reserve(syms.size());
  for (SigSym x : syms) s.push_back(sig_char(x));
  return s;
}

/// Per-letter signature.  Color 1: - for 1 and -2, + for 2 and -1.
/// Color 2: - for 2, + for -2, * for 1 and -1.
constexpr SigSym letter_signature(Letter a, Color c) {
  if (c == Color::One)
    return (a == Letter::Two || a == Letter::OneBar) ? SigSym::Plus : SigSym::Minus;
  switch (a) {
    case Letter::Two: return SigSym::Minus;
    case Letter::TwoBar: return SigSym::Plus;
    default: return SigSym::Star;
  }
}

/// A signature word with, for each position, the cell it came from.
struct SignatureWord {
  std::vector<SigSym> syms;
  std::vector<CellRef> cells;

  std::size_t size() const { return syms.size(); }
};

inline SignatureWord signature(const Tableau& t, Color c) {
  SignatureWord w;
  w.cells = column_cell_order(t.shape());
  w.syms.reserve(w.cells.size());
  for (CellRef cell : w.cells) w.syms.push_back(letter_signature(t.at(cell), c));
  return w;
}

/// Fixed point of replacing +*^k- by *^(k+2).  Positions are preserved: a
/// cancelled pair is overwritten with stars, so provenance survives reduction.
struct ReducedSignature {
  std::vector<SigSym> syms;
  std::vector<CellRef> cells;

  int plus_count() const {
    int n = 0;
    for (SigSym s : syms) n += s == SigSym::Plus;
    return n;
  }
  int minus_count() const {
    int n = 0;
    for (SigSym s : syms) n += s == SigSym::Minus;
    return n;
  }
  std::optional<std::size_t> leftmost_plus() const {
    for (std::size_t i = 0; i < syms.size(); ++i)
      if (syms[i] == SigSym::Plus) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> rightmost_minus() const {
    for (std::size_t i = syms.size(); i-- > 0;)
      if (syms[i] == SigSym::Minus) return i;
    return std::nullopt;
  }
};

/// Single left-to-right pass with a stack of unmatched +'s.  Each - cancels the
/// nearest unmatched + to its left, which is exactly the rewriting fixed point;
/// the rewriting semantics stays around as the confluence oracle in the tests.
inline ReducedSignature reduce(const SignatureWord& w) {
  ReducedSignature r{w.syms, w.cells};
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < r.syms.size(); ++i) {
    if (r.syms[i] == SigSym::Plus) {
      open.push_back(i);
    } else if (r.syms[i] == SigSym::Minus && !open.empty()) {
      r.syms[open.back()] = SigSym::Star;
      r.syms[i] = SigSym::Star;
      open.pop_back();
    }
  }
  return r;
}

inline int epsilon(const Tableau& t, Color c) { return reduce(signature(t, c)).plus_count(); }
inline int phi(const Tableau& t, Color c) { return reduce(signature(t, c)).minus_count(); }

/// A block of +'s in a signature.  The left edge is a boundary index into the
/// signature word: boundary b sits immediately before symbol b, and boundary
/// word-length is the right end.  A block of positive size has its left edge
/// immediately left of its leftmost + in the unreduced word; the size-0
/// placements follow the fallback anchors below.
struct Block {
  int size = 0;
  int left_edge = 0;
};

struct BlockLayout {
  Block left, right;
  int word_length = 0;
};

/// Block membership by originating entry:
///   color 1: left = +'s from top-row 2's and bottom-row -1's; right = +'s from
///            top-row -1's.  Empty left block anchors at the leftmost -2 or -1
///            in the top row, else the right end; empty right block at the right end.
///   color 2: left = +'s from bottom-row -2's; right = +'s from top-row -2's.
///            Empty left anchors at the leftmost bottom-row -1, empty right at the
///            leftmost top-row -1, else the right end.
inline BlockLayout block_layout(const Tableau& t, Color c) {
  const auto order = column_cell_order(t.shape());
  const int len = static_cast<int>(order.size());

  int left_size = 0, right_size = 0;
  int left_first = len, right_first = len;
  int left_anchor = len, right_anchor = len;

  for (int i = 0; i < len; ++i) {
    const CellRef cell = order[static_cast<std::size_t>(i)];
    const Letter a = t.at(cell);
    const bool top = cell.row == 0;
    bool left_member = false, right_member = false;
    if (c == Color::One) {
      left_member = (top && a == Letter::Two) || (!top && a == Letter::OneBar);
      right_member = top && a == Letter::OneBar;
      if (top && (a == Letter::TwoBar || a == Letter::OneBar))
        left_anchor = std::min(left_anchor, i);
    } else {
      left_member = !top && a == Letter::TwoBar;
      right_member = top && a == Letter::TwoBar;
      if (!top && a == Letter::OneBar) left_anchor = std::min(left_anchor, i);
      if (top && a == Letter::OneBar) right_anchor = std::min(right_anchor, i);
    }
    if (left_member) {
      ++left_size;
      left_first = std::min(left_first, i);
    }
    if (right_member) {
      ++right_size;
      right_first = std::min(right_first, i);
    }
  }

  BlockLayout layout;
  layout.word_length = len;
  layout.left = {left_size, left_size > 0 ? left_first : left_anchor};
  layout.right = {right_size, right_size > 0 ? right_first : right_anchor};
  return layout;
}

}  // namespace c2crystal
