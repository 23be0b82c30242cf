#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agw/symbol.hpp"

namespace agw {

using Position = std::int64_t;

/// A finite one-dimensional array: a map from integer positions to
/// non-blank symbols. Unoccupied positions are the blank.
///
/// Storage is dense between the leftmost and rightmost occupied cells;
/// both end cells are always occupied. An array is canonical when it is
/// empty or its leftmost occupied position is 0.
class Array1D {
public:
  Array1D() = default;

  /// Builds an array from (position, symbol) pairs. Blank symbols are
  /// skipped; a repeated position keeps the last symbol.
  static Array1D from_cells(std::span<const std::pair<Position, Symbol>> cells);

  /// Builds an array whose first element sits at `origin`; blanks in
  /// `row` are gaps. Leading and trailing blanks are trimmed.
  static Array1D from_row(Position origin, std::vector<Symbol> row);

  bool empty() const noexcept { return cells_.empty(); }
  /// Number of occupied cells.
  std::size_t size() const noexcept { return count_; }

  /// Leftmost / rightmost occupied positions. Precondition: !empty().
  Position min_pos() const noexcept { return origin_; }
  Position max_pos() const noexcept { return origin_ + static_cast<Position>(cells_.size()) - 1; }

  /// Symbol at `pos`; blank when unoccupied.
  Symbol at(Position pos) const noexcept {
    if (pos < origin_) return Symbol::blank();
    auto i = static_cast<std::uint64_t>(pos - origin_);
    return i < cells_.size() ? cells_[i] : Symbol::blank();
  }

  bool occupied(Position pos) const noexcept { return !at(pos).is_blank(); }

  /// Dense view from min_pos() to max_pos(), blanks included.
  std::span<const Symbol> row() const noexcept { return cells_; }

  /// Occupied cells in ascending position order.
  std::vector<std::pair<Position, Symbol>> cells() const;

  bool is_canonical() const noexcept { return cells_.empty() || origin_ == 0; }

  /// Translated copy with leftmost occupied cell at 0.
  Array1D normalized() const;
  /// Every position shifted by `v`; the result is not re-canonicalized.
  Array1D translated(Position v) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Array1D& a, const Array1D& b) noexcept {
    return a.count_ == b.count_ && (a.cells_.empty() || a.origin_ == b.origin_) && a.cells_ == b.cells_;
  }

private:
  Position origin_ = 0;
  std::size_t count_ = 0;
  std::vector<Symbol> cells_;
};

struct ArrayHash {
  std::size_t operator()(const Array1D& a) const noexcept { return a.hash(); }
};

/// Size/extent of an array's shape. Bounds are absent for the empty array.
struct ShapeMetrics {
  std::size_t size = 0;
  std::int64_t extent = 0;
  std::optional<Position> min_pos;
  std::optional<Position> max_pos;
};

/// Parses an array literal. Two forms are accepted:
///   compact    "a a # # # a # a"   first token at position 0, `#` a gap
///   positioned "@-2 a @-1 a @3 a"  explicit positions
/// The result is canonical. Throws ParseError.
Array1D parse_array(std::string_view text);

/// Compact rendering of a canonical array: tokens separated by single
/// spaces, one `#` per internal blank, nothing for the empty array.
std::string render_array(const Array1D& a);

Array1D normalize(const Array1D& a);
Array1D translate(const Array1D& a, Position v);
/// True iff the arrays coincide up to translation.
bool equivalent(const Array1D& a, const Array1D& b);
ShapeMetrics shape_of(const Array1D& a);
/// True iff the normalized occupied-position sets coincide.
bool shape_equal(const Array1D& a, const Array1D& b);

}  // namespace agw
