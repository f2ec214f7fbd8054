#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "skewjdt/shapes.hpp"

namespace skewjdt {

using Entry = std::int64_t;

/// Total filling of a skew shape with non-negative integers. Entries are
/// stored in the shape's row-major cell order. The shape is shared between
/// copies; it is immutable, so this is still value semantics.
class Tabloid {
 public:
  Tabloid() : Tabloid(SkewShape()) {}
  /// All-zero filling.
  explicit Tabloid(SkewShape shape);
  Tabloid(std::shared_ptr<const SkewShape> shape, std::vector<Entry> entries);
  /// Rows list only the cells of the skew shape, top to bottom.
  static Tabloid from_rows(const SkewShape& shape, const std::vector<std::vector<Entry>>& rows);

  const SkewShape& shape() const noexcept { return *shape_; }
  const std::shared_ptr<const SkewShape>& shared_shape() const noexcept { return shape_; }
  std::span<const Entry> entries() const noexcept { return entries_; }

  Entry at(Cell cell) const { return entries_[shape_->checked_index(cell)]; }
  Entry operator[](std::size_t index) const noexcept { return entries_[index]; }
  /// Throws PreconditionError for negative values or foreign cells.
  void set(Cell cell, Entry value);
  void set_index(std::size_t index, Entry value);

  friend bool operator==(const Tabloid& a, const Tabloid& b) {
    return (a.shape_ == b.shape_ || *a.shape_ == *b.shape_) && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const SkewShape> shape_;
  std::vector<Entry> entries_;
};

/// Filling where cells may be empty: the working state of evacuation.
class PartialFilling {
 public:
  PartialFilling() : PartialFilling(SkewShape()) {}
  /// Every cell empty.
  explicit PartialFilling(SkewShape shape);
  explicit PartialFilling(std::shared_ptr<const SkewShape> shape);
  explicit PartialFilling(const Tabloid& full);
  PartialFilling(std::shared_ptr<const SkewShape> shape, std::vector<std::optional<Entry>> entries);

  const SkewShape& shape() const noexcept { return *shape_; }
  const std::shared_ptr<const SkewShape>& shared_shape() const noexcept { return shape_; }
  std::span<const std::optional<Entry>> entries() const noexcept { return entries_; }

  /// False for empty cells and for cells outside the shape.
  bool filled(Cell cell) const noexcept;
  std::optional<Entry> get(Cell cell) const noexcept;
  Entry at(Cell cell) const;
  void set(Cell cell, Entry value);
  void erase(Cell cell);

  std::size_t filled_count() const noexcept;
  bool complete() const noexcept { return filled_count() == entries_.size(); }
  /// Throws PreconditionError unless complete().
  Tabloid to_tabloid() const;

  friend bool operator==(const PartialFilling& a, const PartialFilling& b) {
    return (a.shape_ == b.shape_ || *a.shape_ == *b.shape_) && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const SkewShape> shape_;
  std::vector<std::optional<Entry>> entries_;
};

/// The bounded reverse tableau R together with the multiplicity tabloid T.
struct TabloidPair {
  Tabloid r;
  Tabloid t;

  friend bool operator==(const TabloidPair&, const TabloidPair&) = default;
};

/// Sum of all entries. Throws InvariantError on int64 overflow.
Entry norm(const Tabloid& t);
Entry norm(const PartialFilling& p);

/// Sum of t(cell) * (a + c(cell)). Requires validate_a(t.shape(), a).
Entry content_weight(const Tabloid& t, std::int64_t a);

/// Rows weakly increase, columns strictly increase. Only filled cells that
/// are both in the shape are compared.
bool is_ssyt(const Tabloid& t);
bool is_ssyt(const PartialFilling& p);
/// Rows weakly decrease, columns strictly decrease.
bool is_reverse_ssyt(const Tabloid& t);
bool is_reverse_ssyt(const PartialFilling& p);

/// Every entry in row i is at most a + inner_i - i. Requires a valid a.
bool respects_row_bounds(const Tabloid& t, std::int64_t a);

/// Cellwise sum; both operands must share a shape.
Tabloid operator+(const Tabloid& x, const Tabloid& y);

namespace checked {
Entry add(Entry x, Entry y);
Entry mul(Entry x, Entry y);
}  // namespace checked

}  // namespace skewjdt
