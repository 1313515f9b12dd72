#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace c2crystal {

/// Letters of the rank-2 symplectic alphabet, totally ordered 1 < 2 < -2 < -1.
/// The enum order is the letter order, so built-in comparisons are the order.
enum class Letter : std::uint8_t { One = 0, Two = 1, TwoBar = 2, OneBar = 3 };

inline constexpr std::array<Letter, 4> kLetters{Letter::One, Letter::Two,
                                                Letter::TwoBar, Letter::OneBar};

constexpr std::string_view letter_token(Letter a) {
  switch (a) {
    case Letter::One: return "1";
    case Letter::Two: return "2";
    case Letter::TwoBar: return "-2";
    case Letter::OneBar: return "-1";
  }
  return "?";
}

inline std::optional<Letter> letter_from_token(std::string_view s) {
  if (s == "1") return Letter::One;
  if (s == "2") return Letter::Two;
  if (s == "-2") return Letter::TwoBar;
  if (s == "-1") return Letter::OneBar;
  return std::nullopt;
}

/// Cell coordinates: row 0 is the top row, row 1 the bottom row; columns are 0-based.
struct CellRef {
  int row = 0;
  int col = 0;
  auto operator<=>(const CellRef&) const = default;
};

/// A two-row Young diagram shape (lambda1, lambda2) with lambda1 >= lambda2 >= 0.
struct Shape {
  int lambda1 = 0;
  int lambda2 = 0;

  bool valid() const { return lambda2 >= 0 && lambda1 >= lambda2; }
  int cells() const { return lambda1 + lambda2; }
  auto operator<=>(const Shape&) const = default;
};

/// A filling of a two-row shape by Letters.  A Tableau value is just the filling;
/// whether it satisfies the tableau conditions is checked separately by validate().
/// Equality of (shape, top, bottom) is the canonical vertex identity.
class Tableau {
 public:
  Tableau() = default;

  Tableau(Shape shape, std::vector<Letter> top, std::vector<Letter> bottom)
      : shape_(shape), top_(std::move(top)), bottom_(std::move(bottom)) {
    if (!shape_.valid())
      throw std::invalid_argument("Tableau: invalid shape");
    if (static_cast<int>(top_.size()) != shape_.lambda1 ||
        static_cast<int>(bottom_.size()) != shape_.lambda2)
      throw std::invalid_argument("Tableau: row lengths do not match shape");
  }

  Tableau(std::vector<Letter> top, std::vector<Letter> bottom)
      : Tableau(Shape{static_cast<int>(top.size()), static_cast<int>(bottom.size())},
                top, bottom) {}

  const Shape& shape() const { return shape_; }
  const std::vector<Letter>& top() const { return top_; }
  const std::vector<Letter>& bottom() const { return bottom_; }

  Letter at(CellRef cell) const {
    return cell.row == 0 ? top_.at(static_cast<std::size_t>(cell.col))
                         : bottom_.at(static_cast<std::size_t>(cell.col));
  }

  /// Copy of this tableau with one cell replaced.
  Tableau with(CellRef cell, Letter a) const {
    Tableau u = *this;
    if (cell.row == 0)
      u.top_.at(static_cast<std::size_t>(cell.col)) = a;
    else
      u.bottom_.at(static_cast<std::size_t>(cell.col)) = a;
    return u;
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  Shape shape_;
  std::vector<Letter> top_, bottom_;
};

enum class ViolationKind {
  RowDecreasing,        // a row is not weakly increasing
  ColumnNotStrict,      // a two-cell column is not strictly increasing
  OneWithOneBar,        // a column contains both 1 and -1
  TwoOverTwoBar,        // 2 in the top row of column k, -2 in the bottom row of column k+1
};

struct Violation {
  ViolationKind kind;
  CellRef cell;  // representative cell (rightmost/lowest involved)

  std::string message() const {
    std::ostringstream os;
    switch (kind) {
      case ViolationKind::RowDecreasing:
        os << "row " << cell.row + 1 << " decreases at column " << cell.col + 1;
        break;
      case ViolationKind::ColumnNotStrict:
        os << "column " << cell.col + 1 << " is not strictly increasing";
        break;
      case ViolationKind::OneWithOneBar:
        os << "column " << cell.col + 1 << " contains both 1 and -1";
        break;
      case ViolationKind::TwoOverTwoBar:
        os << "2 in top row of column " << cell.col << " over -2 in bottom row of column "
           << cell.col + 1;
        break;
    }
    return os.str();
  }
};

/// Checks the four tableau conditions and reports every violation found.
inline std::vector<Violation> validate(const Tableau& t) {
  std::vector<Violation> out;
  const auto& top = t.top();
  const auto& bottom = t.bottom();
  for (std::size_t j = 1; j < top.size(); ++j)
    if (top[j] < top[j - 1])
      out.push_back({ViolationKind::RowDecreasing, {0, static_cast<int>(j)}});
  for (std::size_t j = 1; j < bottom.size(); ++j)
    if (bottom[j] < bottom[j - 1])
      out.push_back({ViolationKind::RowDecreasing, {1, static_cast<int>(j)}});
  for (std::size_t j = 0; j < bottom.size(); ++j) {
    if (!(top[j] < bottom[j]))
      out.push_back({ViolationKind::ColumnNotStrict, {1, static_cast<int>(j)}});
    if (top[j] == Letter::One && bottom[j] == Letter::OneBar)
      out.push_back({ViolationKind::OneWithOneBar, {1, static_cast<int>(j)}});
  }
  for (std::size_t j = 0; j + 1 < bottom.size(); ++j)
    if (top[j] == Letter::Two && bottom[j + 1] == Letter::TwoBar)
      out.push_back({ViolationKind::TwoOverTwoBar, {1, static_cast<int>(j) + 1}});
  return out;
}

inline bool is_valid(const Tableau& t) { return validate(t).empty(); }

/// Reading order of the cells: bottom-then-top for each full column left to right,
/// then the remaining one-cell top entries left to right.  Depends only on the shape.
inline std::vector<CellRef> column_cell_order(Shape s) {
  std::vector<CellRef> order;
  order.reserve(static_cast<std::size_t>(s.cells()));
  for (int j = 0; j < s.lambda2; ++j) {
    order.push_back({1, j});
    order.push_back({0, j});
  }
  for (int j = s.lambda2; j < s.lambda1; ++j) order.push_back({0, j});
  return order;
}

inline std::vector<Letter> column_word(const Tableau& t) {
  std::vector<Letter> w;
  const auto order = column_cell_order(t.shape());
  w.reserve(order.size());
  for (CellRef cell : order) w.push_back(t.at(cell));
  return w;
}

/// The four counting statistics that control where the operators act.
struct AbcdStats {
  int a = 0;  // -2 entries in the top row
  int b = 0;  // 2 entries in the top row plus -1 entries in the bottom row
  int c = 0;  // 2 entries in the top row
  int d = 0;  // -2 entries in the bottom row
  auto operator<=>(const AbcdStats&) const = default;
};

inline AbcdStats abcd(const Tableau& t) {
  AbcdStats s;
  for (Letter a : t.top()) {
    if (a == Letter::TwoBar) ++s.a;
    if (a == Letter::Two) {
      ++s.b;
      ++s.c;
    }
  }
  for (Letter a : t.bottom()) {
    if (a == Letter::OneBar) ++s.b;
    if (a == Letter::TwoBar) ++s.d;
  }
  return s;
}

/// Top row all 1, bottom row all 2: the unique vertex killed by both raising operators.
inline Tableau highest_weight_tableau(Shape s) {
  if (!s.valid()) throw std::invalid_argument("highest_weight_tableau: invalid shape");
  return Tableau(s, std::vector<Letter>(static_cast<std::size_t>(s.lambda1), Letter::One),
                 std::vector<Letter>(static_cast<std::size_t>(s.lambda2), Letter::Two));
}

/// All valid tableaux of the shape, by brute force over all 4^cells fillings.
/// Serves as the independent vertex-set oracle for generated crystals.
inline std::vector<Tableau> enumerate_tableaux(Shape s) {
  if (!s.valid()) throw std::invalid_argument("enumerate_tableaux: invalid shape");
  const int n = s.cells();
  std::vector<Tableau> out;
  std::vector<Letter> fill(static_cast<std::size_t>(n), Letter::One);
  for (;;) {
    Tableau t(s,
              std::vector<Letter>(fill.begin(), fill.begin() + s.lambda1),
              std::vector<Letter>(fill.begin() + s.lambda1, fill.end()));
    if (is_valid(t)) out.push_back(std::move(t));
    int i = 0;
    while (i < n && fill[static_cast<std::size_t>(i)] == Letter::OneBar) {
      fill[static_cast<std::size_t>(i)] = Letter::One;
      ++i;
    }
    if (i == n) break;
    fill[static_cast<std::size_t>(i)] =
        static_cast<Letter>(static_cast<std::uint8_t>(fill[static_cast<std::size_t>(i)]) + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Text encoding: top-row tokens, then " / " and bottom-row tokens when the
/// bottom row is nonempty.  The empty tableau renders as the empty string.
inline std::string render_tableau(const Tableau& t) {
  std::ostringstream os;
  for (std::size_t j = 0; j < t.top().size(); ++j) {
    if (j) os << ' ';
    os << letter_token(t.top()[j]);
  }
  if (!t.bottom().empty()) {
    os << " /";
    for (Letter a : t.bottom()) os << ' ' << letter_token(a);
  }
  return os.str();
}

/// Parses the text encoding.  No validity filtering: validation is a separate step.
/// Throws std::invalid_argument on malformed tokens or a bottom row longer than the top.
inline Tableau parse_tableau(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("parse_tableau: more than one '/'");
  const std::string top_part = text.substr(0, slash);
  const std::string bottom_part =
      slash == std::string::npos ? std::string() : text.substr(slash + 1);

  auto tokenize = [](const std::string& part) {
    std::vector<Letter> row;
    std::istringstream is(part);
    std::string tok;
    while (is >> tok) {
      const auto a = letter_from_token(tok);
      if (!a) throw std::invalid_argument("parse_tableau: bad token '" + tok + "'");
      row.push_back(*a);
    }
    return row;
  };

  std::vector<Letter> top = tokenize(top_part);
  std::vector<Letter> bottom = tokenize(bottom_part);
  if (slash != std::string::npos && bottom.empty())
    throw std::invalid_argument("parse_tableau: empty bottom row after '/'");
  if (bottom.size() > top.size())
    throw std::invalid_argument("parse_tableau: bottom row longer than top row");
  return Tableau(std::move(top), std::move(bottom));
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) {
  return os << render_tableau(t);
}

}  // namespace c2crystal
