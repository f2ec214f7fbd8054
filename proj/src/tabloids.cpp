#include "skewjdt/tabloids.hpp"

#include <algorithm>

#include "skewjdt/errors.hpp"

namespace skewjdt {

namespace checked {

Entry add(Entry x, Entry y) {
  Entry out;
  if (__builtin_add_overflow(x, y, &out)) throw InvariantError("integer overflow in addition");
  return out;
}

Entry mul(Entry x, Entry y) {
  Entry out;
  if (__builtin_mul_overflow(x, y, &out)) throw InvariantError("integer overflow in product");
  return out;
}

}  // namespace checked

Tabloid::Tabloid(SkewShape shape)
    : shape_(std::make_shared<const SkewShape>(std::move(shape))), entries_(shape_->size(), 0) {}

Tabloid::Tabloid(std::shared_ptr<const SkewShape> shape, std::vector<Entry> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_->size()) {
    throw PreconditionError("tabloid has " + std::to_string(entries_.size()) +
                            " entries but the shape has " + std::to_string(shape_->size()) +
                            " cells");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] < 0) {
      throw PreconditionError("negative entry at " + to_string(shape_->cells()[k]));
    }
  }
}

Tabloid Tabloid::from_rows(const SkewShape& shape, const std::vector<std::vector<Entry>>& rows) {
  if (rows.size() != static_cast<std::size_t>(shape.rows())) {
    throw PreconditionError("expected " + std::to_string(shape.rows()) + " rows, got " +
                            std::to_string(rows.size()));
  }
  std::vector<Entry> entries;
  entries.reserve(shape.size());
  for (int i = 1; i <= shape.rows(); ++i) {
    const auto& row = rows[i - 1];
    auto width = static_cast<std::size_t>(shape.end_col(i) - shape.first_col(i));
    if (row.size() != width) {
      throw PreconditionError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                              " entries, the shape needs " + std::to_string(width));
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Tabloid(std::make_shared<const SkewShape>(shape), std::move(entries));
}

void Tabloid::set(Cell cell, Entry value) { set_index(shape_->checked_index(cell), value); }

void Tabloid::set_index(std::size_t index, Entry value) {
  if (value < 0) {
    throw PreconditionError("negative entry " + std::to_string(value) + " at " +
                            to_string(shape_->cells()[index]));
  }
  entries_[index] = value;
}

PartialFilling::PartialFilling(SkewShape shape)
    : PartialFilling(std::make_shared<const SkewShape>(std::move(shape))) {}

PartialFilling::PartialFilling(std::shared_ptr<const SkewShape> shape)
    : shape_(std::move(shape)), entries_(shape_->size()) {}

PartialFilling::PartialFilling(const Tabloid& full)
    : shape_(full.shared_shape()), entries_(full.entries().begin(), full.entries().end()) {}

PartialFilling::PartialFilling(std::shared_ptr<const SkewShape> shape,
                               std::vector<std::optional<Entry>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_->size()) {
    throw PreconditionError("filling has " + std::to_string(entries_.size()) +
                            " cells but the shape has " + std::to_string(shape_->size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] && *entries_[k] < 0) {
      throw PreconditionError("negative entry at " + to_string(shape_->cells()[k]));
    }
  }
}

bool PartialFilling::filled(Cell cell) const noexcept {
  auto idx = shape_->index_of(cell);
  return idx && entries_[*idx].has_value();
}

std::optional<Entry> PartialFilling::get(Cell cell) const noexcept {
  auto idx = shape_->index_of(cell);
  if (!idx) return std::nullopt;
  return entries_[*idx];
}

Entry PartialFilling::at(Cell cell) const {
  const auto& slot = entries_[shape_->checked_index(cell)];
  if (!slot) throw PreconditionError("cell " + to_string(cell) + " is empty");
  return *slot;
}

void PartialFilling::set(Cell cell, Entry value) {
  if (value < 0) throw PreconditionError("negative entry at " + to_string(cell));
  entries_[shape_->checked_index(cell)] = value;
}

void PartialFilling::erase(Cell cell) { entries_[shape_->checked_index(cell)].reset(); }

std::size_t PartialFilling::filled_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.has_value(); }));
}

Tabloid PartialFilling::to_tabloid() const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!entries_[k]) {
      throw PreconditionError("cell " + to_string(shape_->cells()[k]) + " is empty");
    }
    entries.push_back(*entries_[k]);
  }
  return Tabloid(shape_, std::move(entries));
}

Entry norm(const Tabloid& t) {
  Entry total = 0;
  for (Entry e : t.entries()) total = checked::add(total, e);
  return total;
}

Entry norm(const PartialFilling& p) {
  Entry total = 0;
  for (const auto& e : p.entries())
    if (e) total = checked::add(total, *e);
  return total;
}

Entry content_weight(const Tabloid& t, std::int64_t a) {
  const SkewShape& shape = t.shape();
  require_valid_a(shape, a);
  Entry total = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    Cell c = shape.cells()[k];
    total = checked::add(total, checked::mul(t[k], a + c.col - c.row));
  }
  return total;
}

namespace {

// `get` maps a cell to an optional entry; absent for empty or foreign cells.
template <typename Get, typename RowOk, typename ColOk>
bool ordered(const SkewShape& shape, Get get, RowOk ok_row, ColOk ok_col) {
  for (Cell c : shape.cells()) {
    auto v = get(c);
    if (!v) continue;
    if (auto right = get(Cell{c.row, c.col + 1}); right && !ok_row(*v, *right)) return false;
    if (auto below = get(Cell{c.row + 1, c.col}); below && !ok_col(*v, *below)) return false;
  }
  return true;
}

auto getter(const PartialFilling& p) {
  return [&p](Cell c) { return p.get(c); };
}

auto getter(const Tabloid& t) {
  return [&t](Cell c) -> std::optional<Entry> {
    auto idx = t.shape().index_of(c);
    if (!idx) return std::nullopt;
    return t[*idx];
  };
}

constexpr auto weakly_up = [](Entry l, Entry r) { return l <= r; };
constexpr auto strictly_up = [](Entry u, Entry d) { return u < d; };
constexpr auto weakly_down = [](Entry l, Entry r) { return l >= r; };
constexpr auto strictly_down = [](Entry u, Entry d) { return u > d; };

}  // namespace

bool is_ssyt(const PartialFilling& p) {
  return ordered(p.shape(), getter(p), weakly_up, strictly_up);
}
bool is_reverse_ssyt(const PartialFilling& p) {
  return ordered(p.shape(), getter(p), weakly_down, strictly_down);
}
bool is_ssyt(const Tabloid& t) { return ordered(t.shape(), getter(t), weakly_up, strictly_up); }
bool is_reverse_ssyt(const Tabloid& t) {
  return ordered(t.shape(), getter(t), weakly_down, strictly_down);
}

bool respects_row_bounds(const Tabloid& t, std::int64_t a) {
  const SkewShape& shape = t.shape();
  require_valid_a(shape, a);
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (t[k] > row_bound(shape, a, shape.cells()[k].row)) return false;
  }
  return true;
}

Tabloid operator+(const Tabloid& x, const Tabloid& y) {
  if (!(x.shape() == y.shape())) throw PreconditionError("tabloids have different shapes");
  std::vector<Entry> sum(x.entries().size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = checked::add(x[k], y[k]);
  return Tabloid(x.shared_shape(), std::move(sum));
}

}  // namespace skewjdt
