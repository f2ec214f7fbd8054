#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "skewjdt/io.hpp"
#include "skewjdt/shapes.hpp"
#include "skewjdt/tabloids.hpp"

namespace skewjdt::testing {

using Rows = std::vector<std::vector<Entry>>;

inline SkewShape shape(const std::string& text) { return parse_shape(text); }

inline Tabloid tab(const std::string& shape_text, const Rows& rows) {
  return Tabloid::from_rows(shape(shape_text), rows);
}

// The running example: shape (4,4,4,3)/(2,2,1), a = 6.
inline const char* kExampleShape = "4,4,4,3/2,2,1";
inline Tabloid example_p() { return tab(kExampleShape, {{0, 1}, {1, 7}, {1, 4, 9}, {2, 9, 9}}); }
inline Tabloid example_q() { return tab(kExampleShape, {{9, 9}, {7, 4}, {9, 1, 1}, {2, 1, 0}}); }
inline Tabloid example_r() { return tab(kExampleShape, {{4, 3}, {2, 2}, {4, 1, 0}, {2, 1, 0}}); }
inline Tabloid example_t() { return tab(kExampleShape, {{0, 0}, {0, 0}, {1, 0, 2}, {0, 0, 1}}); }

/// Partial filling from rows of optional entries; -1 marks an empty cell.
inline PartialFilling partial(const std::string& shape_text, const Rows& rows) {
  auto s = std::make_shared<const SkewShape>(shape(shape_text));
  std::vector<std::optional<Entry>> entries;
  for (const auto& row : rows)
    for (Entry v : row) entries.push_back(v < 0 ? std::nullopt : std::optional<Entry>(v));
  return PartialFilling(s, std::move(entries));
}

/// Every filling of the shape with entries summing to at most `budget`, no
/// pruning beyond the budget. Oracle for the pruned enumerators.
inline void brute_force_fillings(const SkewShape& s, Entry budget,
                                 const std::function<void(const Tabloid&)>& visit) {
  auto shared = std::make_shared<const SkewShape>(s);
  std::vector<Entry> cur(s.size(), 0);
  std::function<void(std::size_t, Entry)> rec = [&](std::size_t k, Entry left) {
    if (k == cur.size()) {
      visit(Tabloid(shared, cur));
      return;
    }
    for (Entry v = 0; v <= left; ++v) {
      cur[k] = v;
      rec(k + 1, left - v);
    }
    cur[k] = 0;
  };
  rec(0, budget);
}

/// Random skew shape with at most `max_rows` rows and parts <= `max_part`.
inline SkewShape random_shape(std::mt19937& rng, int max_rows, int max_part) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows);
  const int rows = rows_dist(rng);
  std::vector<int> outer;
  int cap = max_part;
  for (int i = 0; i < rows; ++i) {
    std::uniform_int_distribution<int> part(1, cap);
    outer.push_back(part(rng));
    cap = outer.back();
  }
  std::vector<int> inner;
  int inner_cap = outer[0];
  for (int i = 0; i < rows; ++i) {
    std::uniform_int_distribution<int> part(0, std::min(inner_cap, outer[i]));
    int v = part(rng);
    if (v == 0) break;
    inner.push_back(v);
    inner_cap = v;
  }
  return SkewShape(Partition(outer), Partition(inner));
}

/// Smallest a with a + c > 0 on every cell.
inline std::int64_t min_valid_a(const SkewShape& s) {
  std::int64_t a = 1;
  for (Cell c : s.cells()) a = std::max<std::int64_t>(a, c.row - c.col + 1);
  return a;
}

/// Random SSYT: each cell gets its lower bound plus a small random increment.
inline Tabloid random_ssyt(std::mt19937& rng, const SkewShape& s, int spread) {
  auto shared = std::make_shared<const SkewShape>(s);
  std::vector<Entry> cur(s.size(), 0);
  std::uniform_int_distribution<int> inc(0, spread);
  for (std::size_t k = 0; k < s.size(); ++k) {
    Cell c = s.cells()[k];
    Entry lo = 0;
    if (auto l = s.index_of({c.row, c.col - 1})) lo = std::max(lo, cur[*l]);
    if (auto u = s.index_of({c.row - 1, c.col})) lo = std::max(lo, cur[*u] + 1);
    cur[k] = lo + inc(rng);
  }
  return Tabloid(shared, std::move(cur));
}

/// Random reverse SSYT, filled from the bottom-right corner.
inline Tabloid random_reverse_ssyt(std::mt19937& rng, const SkewShape& s, int spread) {
  auto shared = std::make_shared<const SkewShape>(s);
  std::vector<Entry> cur(s.size(), 0);
  std::uniform_int_distribution<int> inc(0, spread);
  for (std::size_t k = s.size(); k-- > 0;) {
    Cell c = s.cells()[k];
    Entry lo = 0;
    if (auto r = s.index_of({c.row, c.col + 1})) lo = std::max(lo, cur[*r]);
    if (auto b = s.index_of({c.row + 1, c.col})) lo = std::max(lo, cur[*b] + 1);
    cur[k] = lo + inc(rng);
  }
  return Tabloid(shared, std::move(cur));
}

}  // namespace skewjdt::testing
