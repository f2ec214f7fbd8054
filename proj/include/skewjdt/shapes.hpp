#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewjdt {

/// A cell of a Ferrers diagram. Both coordinates are 1-based; row grows
/// downwards, col grows to the right.
struct Cell {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell cell);

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError naming the first offending index.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;

  /// 1-based part; rows beyond the length read as 0.
  int part(int row) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition make_partition(std::vector<int> parts);

/// The skew diagram outer/inner. Cells are stored in row-major order, which
/// is also the canonical index order used by every filling of the shape.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws PreconditionError if inner is not contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }

  /// Number of rows of the outer partition.
  int rows() const noexcept { return static_cast<int>(outer_.length()); }
  /// First and one-past-last column of row `row` (empty range if row is
  /// entirely inside the inner partition or out of range).
  int first_col(int row) const noexcept { return inner_.part(row) + 1; }
  int end_col(int row) const noexcept { return outer_.part(row) + 1; }

  std::span<const Cell> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  bool contains(Cell cell) const noexcept;
  /// Row-major index of a shape cell; nullopt for cells outside the shape.
  std::optional<std::size_t> index_of(Cell cell) const noexcept;
  /// Like index_of but throws PreconditionError for foreign cells.
  std::size_t checked_index(Cell cell) const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> row_offset_;
};

SkewShape make_skew_shape(const Partition& outer, const Partition& inner);

/// c(cell) = col - row. Throws if the cell is not in the shape.
int content(const SkewShape& shape, Cell cell);

/// Largest legal entry in `row` of a bounded reverse tableau: a + inner_row - row.
std::int64_t row_bound(const SkewShape& shape, std::int64_t a, int row);

/// True iff a + c(cell) > 0 for every cell of the shape.
bool validate_a(const SkewShape& shape, std::int64_t a);

/// Throws PreconditionError when validate_a fails.
void require_valid_a(const SkewShape& shape, std::int64_t a);

/// "4,4,4,3/2,2,1" form; the "/inner" suffix is omitted for straight shapes.
std::string format_shape(const SkewShape& shape);
std::string format_partition(const Partition& partition);

/// Inverse of format_shape. Whitespace around tokens is ignored.
/// Throws ParseError (line 1) on malformed text.
SkewShape parse_shape(std::string_view text);

}  // namespace skewjdt
