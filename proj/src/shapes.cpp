#include "skewjdt/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "skewjdt/errors.hpp"

namespace skewjdt {

std::string to_string(Cell cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) {
      throw PreconditionError("partition part at index " + std::to_string(k) + " is " +
                              std::to_string(parts_[k]) + ", parts must be positive");
    }
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw PreconditionError("partition part at index " + std::to_string(k) + " (" +
                              std::to_string(parts_[k]) + ") exceeds the previous part (" +
                              std::to_string(parts_[k - 1]) + ")");
    }
  }
}

int Partition::size() const noexcept {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

int Partition::part(int row) const noexcept {
  if (row < 1 || static_cast<std::size_t>(row) > parts_.size()) return 0;
  return parts_[row - 1];
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length()) {
    throw PreconditionError("inner partition has " + std::to_string(inner_.length()) +
                            " rows but outer has only " + std::to_string(outer_.length()));
  }
  for (int i = 1; i <= static_cast<int>(inner_.length()); ++i) {
    if (inner_.part(i) > outer_.part(i)) {
      throw PreconditionError("inner partition not contained in outer at row " +
                              std::to_string(i) + ": " + std::to_string(inner_.part(i)) + " > " +
                              std::to_string(outer_.part(i)));
    }
  }
  row_offset_.reserve(outer_.length() + 1);
  for (int i = 1; i <= rows(); ++i) {
    row_offset_.push_back(cells_.size());
    for (int j = first_col(i); j < end_col(i); ++j) cells_.push_back({i, j});
  }
  row_offset_.push_back(cells_.size());
}

bool SkewShape::contains(Cell cell) const noexcept {
  return cell.row >= 1 && cell.row <= rows() && cell.col >= first_col(cell.row) &&
         cell.col < end_col(cell.row);
}

std::optional<std::size_t> SkewShape::index_of(Cell cell) const noexcept {
  if (!contains(cell)) return std::nullopt;
  return row_offset_[cell.row - 1] + static_cast<std::size_t>(cell.col - first_col(cell.row));
}

std::size_t SkewShape::checked_index(Cell cell) const {
  auto idx = index_of(cell);
  if (!idx) throw PreconditionError("cell " + to_string(cell) + " is not in the shape");
  return *idx;
}

SkewShape make_skew_shape(const Partition& outer, const Partition& inner) {
  return SkewShape(outer, inner);
}

int content(const SkewShape& shape, Cell cell) {
  if (!shape.contains(cell)) {
    throw PreconditionError("cell " + to_string(cell) + " is not in the shape");
  }
  return cell.col - cell.row;
}

std::int64_t row_bound(const SkewShape& shape, std::int64_t a, int row) {
  if (row < 1 || row > shape.rows()) {
    throw PreconditionError("row " + std::to_string(row) + " out of range 1.." +
                            std::to_string(shape.rows()));
  }
  return a + shape.inner().part(row) - row;
}

bool validate_a(const SkewShape& shape, std::int64_t a) {
  // The most negative content sits at the first cell of some row.
  for (int i = 1; i <= shape.rows(); ++i) {
    if (shape.first_col(i) >= shape.end_col(i)) continue;
    if (a + shape.first_col(i) - i <= 0) return false;
  }
  return true;
}

void require_valid_a(const SkewShape& shape, std::int64_t a) {
  if (!validate_a(shape, a)) {
    throw PreconditionError("a = " + std::to_string(a) +
                            " does not satisfy a + c(cell) > 0 for all cells of " +
                            format_shape(shape));
  }
}

std::string format_partition(const Partition& partition) {
  std::string out;
  for (std::size_t k = 0; k < partition.length(); ++k) {
    if (k) out += ',';
    out += std::to_string(partition.parts()[k]);
  }
  return out;
}

std::string format_shape(const SkewShape& shape) {
  std::string out = format_partition(shape.outer());
  if (!shape.inner().empty()) out += "/" + format_partition(shape.inner());
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

Partition parse_partition(std::string_view text, std::size_t base_column) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip();
  if (pos == text.size()) return Partition();
  while (true) {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) {
      throw ParseError(1, base_column + pos + 1, "expected a positive integer part");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc()) throw ParseError(1, base_column + start + 1, "part out of range");
    parts.push_back(value);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(1, base_column + pos + 1, "expected ','");
    ++pos;
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(1, base_column + 1, e.what());
  }
}

}  // namespace

SkewShape parse_shape(std::string_view text) {
  auto slash = text.find('/');
  Partition outer = parse_partition(text.substr(0, slash), 0);
  Partition inner;
  if (slash != std::string_view::npos) inner = parse_partition(text.substr(slash + 1), slash + 1);
  try {
    return SkewShape(std::move(outer), std::move(inner));
  } catch (const PreconditionError& e) {
    throw ParseError(1, 0, e.what());
  }
}

}  // namespace skewjdt
