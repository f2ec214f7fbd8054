#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewjdt/slides.hpp"
#include "skewjdt/tabloids.hpp"

namespace skewjdt {

struct TraceSnapshot {
  std::string label;
  PartialFilling filling;

  friend bool operator==(const TraceSnapshot&, const TraceSnapshot&) = default;
};

/// One outer-loop iteration: the cell chosen, the value that moved, its path
/// and (optionally) the working fillings after the iteration.
struct TraceStep {
  Cell selected;
  Entry e = 0;
  SlidePath path;
  std::vector<TraceSnapshot> snapshots;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct BijectionTrace {
  std::string algorithm;
  std::vector<TraceSnapshot> initial;
  std::vector<TraceStep> steps;
};

struct TraceOptions {
  bool snapshots = true;
};

template <typename T>
struct Traced {
  T value;
  BijectionTrace trace;
};

/// SSYT -> reverse SSYT of the same shape and norm. Repeatedly takes the
/// right-most cell holding the minimal entry of P, slides it forward and
/// stores it in Q at the stop cell. Snapshots are labelled "P" and "Q".
Traced<Tabloid> evacuate(const Tabloid& p, TraceOptions options = {});

/// Inverse of evacuate: takes the left-most cell holding the maximal entry
/// of Q, moves it into P and slides it backward. Snapshots "Q" and "P".
Traced<Tabloid> unevacuate(const Tabloid& q, TraceOptions options = {});

/// Reverse SSYT Q -> (R, T) with R inside the row bounds and
/// n(Q) = n(R) + w_c(T). Each iteration picks the bottom-most cell maximising
/// R - (a + c) (right-most within a row) and performs a modified forward
/// slide, counting the stop cell in T. Snapshots "R" and "T".
Traced<TabloidPair> split(const Tabloid& q, std::int64_t a, TraceOptions options = {});

/// Inverse of split. With `strict`, the result is re-split and compared to
/// the input; a mismatch raises PreconditionError. Snapshots "Q" and "T".
Traced<Tabloid> unsplit(const TabloidPair& pair, std::int64_t a, TraceOptions options = {},
                        bool strict = false);

/// split(evacuate(p)): SSYT -> (R, T) with n(P) = n(R) + w_c(T).
TabloidPair map_full(const Tabloid& p, std::int64_t a);
/// unevacuate(unsplit(pair)).
Tabloid unmap_full(const TabloidPair& pair, std::int64_t a, bool strict = false);

}  // namespace skewjdt
