#pragma once

#include <cstdint>
#include <vector>

#include "skewjdt/tabloids.hpp"

namespace skewjdt {

/// Cells visited by the moving entry of one slide, start cell first.
/// Consecutive cells differ by one step right/down (forward slides) or
/// left/up (backward slides).
struct SlidePath {
  std::vector<Cell> cells;

  Cell start() const { return cells.front(); }
  Cell stop() const { return cells.back(); }

  friend bool operator==(const SlidePath&, const SlidePath&) = default;
};

std::string to_string(const SlidePath& path);

template <typename Filling>
struct SlideResult {
  Filling filling;
  SlidePath path;
};

// Evacuation slides. The moving entry e swaps with filled neighbours until
// none of the relevant neighbours hold an entry.

/// Moves e right while the right entry is smaller than the one below (or
/// nothing is below), else down.
SlideResult<PartialFilling> jdt_forward_slide(PartialFilling p, Cell start);

/// Moves e left while the left entry is larger than the one above (or nothing
/// is above), else up. A swap with an entry equal to e would not change the
/// filling, so the slide ends there instead; this keeps the backward path
/// equal to the forward path it undoes.
SlideResult<PartialFilling> jdt_backward_slide(PartialFilling p, Cell start);

// Modified slides. Neighbours are shape cells; a missing neighbour fails its
// comparison in the loop test.

/// Replaces r[start] by e = r[start] - (a + c(start)) and moves it while
/// e < right or e <= below: right via (e, x) -> (x - 1, e) when x - 1 > y or
/// there is no cell below, otherwise down via (e / y) -> (y + 1 / e).
/// The norm drops by exactly a + c(stop).
SlideResult<Tabloid> mjdt_forward_slide(Tabloid r, Cell start, std::int64_t a);

/// Inverse of mjdt_forward_slide. Moves e = q[start] while
/// e + a + c(cur) > left or e + a + c(cur) >= above: left via (x, e) -> (e, x + 1)
/// when y > x + 1 or there is no cell above, otherwise up via (y / e) -> (e / y - 1).
/// Finally adds a + c(stop) at the stop cell. Throws PreconditionError if a
/// step would create a negative entry (no valid preimage).
SlideResult<Tabloid> mjdt_backward_slide(Tabloid q, Cell start, std::int64_t a);

}  // namespace skewjdt
