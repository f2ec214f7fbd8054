#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewjdt/bijections.hpp"
#include "skewjdt/qseries.hpp"

namespace skewjdt {

/// Both sides of the generating-function identity, truncated at max_degree:
///   S = sum q^n(P) over SSYT P,
///   B = sum q^n(R) over bounded reverse SSYT R,
///   H = prod over cells of 1 / (1 - q^(a + c)).
/// Checks S == B * H and B == S * prod (1 - q^(a + c)).
struct IdentityReport {
  SkewShape shape;
  std::int64_t a = 0;
  int max_degree = 0;
  QSeries ssyt{0};
  QSeries bounded{0};
  QSeries hook_product{0};
  QSeries bounded_times_hook{0};
  QSeries ssyt_times_inverse{0};
  std::optional<int> first_discrepancy;

  bool ok() const noexcept { return !first_discrepancy; }
};

IdentityReport verify_identity(const SkewShape& shape, std::int64_t a, int max_degree);

/// Exhaustive check of map_full on every SSYT of norm <= max_norm, of
/// evacuation/splitting round trips on every reverse SSYT of norm <= max_norm,
/// and of surjectivity: every pair (R, T) with n(R) + w_c(T) <= max_norm,
/// enumerated independently, is hit exactly once.
struct BijectionReport {
  SkewShape shape;
  std::int64_t a = 0;
  Entry max_norm = 0;
  std::vector<std::int64_t> ssyt_per_norm;
  std::vector<std::int64_t> image_per_norm;  ///< by n(R) + w_c(T) of map_full(P)
  std::vector<std::int64_t> pairs_per_norm;  ///< independently enumerated pairs
  std::vector<std::int64_t> reverse_per_norm;
  std::int64_t instances = 0;
  std::int64_t failure_count = 0;
  std::vector<std::string> failures;  ///< first few, in enumeration order

  bool ok() const noexcept { return failure_count == 0; }
};

struct BijectionCheckOptions {
  /// Also run the per-step trace invariants below on every instance.
  bool step_invariants = true;
  std::size_t max_reported_failures = 50;
};

BijectionReport verify_bijection_exhaustive(const SkewShape& shape, std::int64_t a,
                                            Entry max_norm, BijectionCheckOptions options = {});

// Per-step invariants, checked from traces recorded with snapshots. Each
// returns human-readable violations; empty means all hold.

/// Multiset of P and Q entries preserved; filled part of Q a reverse SSYT;
/// stop cells are bottom-right corners of P; selected e weakly increasing;
/// consecutive slides with equal e stop in strictly decreasing columns.
std::vector<std::string> evacuation_violations(const Tabloid& p, const BijectionTrace& trace);

/// Selected e weakly decreasing; paths are left/up staircases.
std::vector<std::string> unevacuation_violations(const Tabloid& q, const BijectionTrace& trace);

/// Norm drops by a + c(stop) per slide; T grows by one at the stop cell; R
/// stays a reverse SSYT; max(R - a - inner_i + i) never increases; selected
/// e weakly decreasing; consecutive equal-e slides stop left-to-right (or at
/// the same cell).
std::vector<std::string> split_violations(const Tabloid& q, std::int64_t a,
                                          const BijectionTrace& trace);

/// Norm grows by a + c(selected) per slide; T shrinks by one at the selected cell;
/// selected e weakly increasing.
std::vector<std::string> unsplit_violations(const TabloidPair& pair, std::int64_t a,
                                            const BijectionTrace& trace);

}  // namespace skewjdt

namespace skewjdt {

/// One line of the P <-> Q <-> (R, T) correspondence.
struct MatchupRow {
  Tabloid p, q, r, t;
};

/// Every SSYT of exactly the given norm with its images, in enumeration order.
std::vector<MatchupRow> matchup(const SkewShape& shape, std::int64_t a, Entry norm_value);

}  // namespace skewjdt
