#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skewjdt/tabloids.hpp"

namespace skewjdt {

using TabloidVisitor = std::function<void(const Tabloid&)>;

// Backtracking enumerators over the cells in row-major order. The visitor
// forms emit in lexicographic row-major order; the collecting forms sort
// stably by norm (or weight), giving norm-major, then lexicographic order.

void for_each_ssyt(const SkewShape& shape, Entry max_norm, const TabloidVisitor& visit);
std::vector<Tabloid> enumerate_ssyt(const SkewShape& shape, Entry max_norm);

void for_each_reverse_ssyt(const SkewShape& shape, Entry max_norm, const TabloidVisitor& visit);
std::vector<Tabloid> enumerate_reverse_ssyt(const SkewShape& shape, Entry max_norm);

/// All reverse SSYT with entries in row i at most a + inner_i - i. Finite.
void for_each_bounded_reverse(const SkewShape& shape, std::int64_t a, const TabloidVisitor& visit);
std::vector<Tabloid> enumerate_bounded_reverse(const SkewShape& shape, std::int64_t a);

/// All tabloids with content_weight(t, a) <= max_weight.
void for_each_tabloid_by_weight(const SkewShape& shape, std::int64_t a, Entry max_weight,
                                const TabloidVisitor& visit);
std::vector<Tabloid> enumerate_tabloids_by_weight(const SkewShape& shape, std::int64_t a,
                                                  Entry max_weight);

}  // namespace skewjdt
