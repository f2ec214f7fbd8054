#include "skewjdt/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "skewjdt/enumerate.hpp"
#include "skewjdt/errors.hpp"
#include "skewjdt/io.hpp"

namespace skewjdt {

IdentityReport verify_identity(const SkewShape& shape, std::int64_t a, int max_degree) {
  require_valid_a(shape, a);
  if (max_degree < 0) throw PreconditionError("max_degree must be non-negative");

  IdentityReport report{shape, a, max_degree, QSeries(max_degree), QSeries(max_degree),
                        QSeries::one(max_degree), QSeries(max_degree), QSeries(max_degree), {}};
  for_each_ssyt(shape, max_degree,
                [&](const Tabloid& p) { report.ssyt.add_term(static_cast<int>(norm(p)), 1); });
  for_each_bounded_reverse(shape, a, [&](const Tabloid& r) {
    const Entry n = norm(r);
    if (n <= max_degree) report.bounded.add_term(static_cast<int>(n), 1);
  });

  QSeries inverse = QSeries::one(max_degree);
  for (Cell c : shape.cells()) {
    const int weight = static_cast<int>(a + c.col - c.row);
    report.hook_product = report.hook_product * qs_geom(weight, max_degree);
    inverse = inverse * qs_one_minus(weight, max_degree);
  }
  report.bounded_times_hook = report.bounded * report.hook_product;
  report.ssyt_times_inverse = report.ssyt * inverse;

  for (int d = 0; d <= max_degree; ++d) {
    if (report.ssyt[d] != report.bounded_times_hook[d] ||
        report.bounded[d] != report.ssyt_times_inverse[d]) {
      report.first_discrepancy = d;
      break;
    }
  }
  return report;
}

namespace {

std::vector<Entry> sorted_entries(const PartialFilling& p) {
  std::vector<Entry> out;
  for (const auto& e : p.entries())
    if (e) out.push_back(*e);
  std::sort(out.begin(), out.end());
  return out;
}

const PartialFilling* find_snapshot(const std::vector<TraceSnapshot>& snaps, std::string_view label) {
  for (const auto& s : snaps)
    if (s.label == label) return &s.filling;
  return nullptr;
}

std::string step_prefix(const BijectionTrace& trace, std::size_t k) {
  return trace.algorithm + " step " + std::to_string(k + 1) + ": ";
}

void check_staircase(const BijectionTrace& trace, std::size_t k, int direction,
                     std::vector<std::string>& out) {
  const auto& cells = trace.steps[k].path.cells;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const int dr = cells[i].row - cells[i - 1].row;
    const int dc = cells[i].col - cells[i - 1].col;
    const bool ok = (dr == direction && dc == 0) || (dr == 0 && dc == direction);
    if (!ok) {
      out.push_back(step_prefix(trace, k) + "path is not a staircase: " +
                    to_string(trace.steps[k].path));
      return;
    }
  }
}

bool has_snapshots(const BijectionTrace& trace) {
  return std::all_of(trace.steps.begin(), trace.steps.end(),
                     [](const TraceStep& s) { return s.snapshots.size() == 2; });
}

Entry termination_measure(const Tabloid& r, std::int64_t a) {
  const SkewShape& shape = r.shape();
  Entry best = std::numeric_limits<Entry>::min();
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const Cell c = shape.cells()[k];
    best = std::max(best, r[k] - a - shape.inner().part(c.row) + c.row);
  }
  return best;
}

}  // namespace

std::vector<std::string> evacuation_violations(const Tabloid& p, const BijectionTrace& trace) {
  std::vector<std::string> out;
  if (!has_snapshots(trace)) return {"evacuate: trace has no snapshots"};
  const auto original = sorted_entries(PartialFilling(p));
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const PartialFilling& pk = *find_snapshot(step.snapshots, "P");
    const PartialFilling& qk = *find_snapshot(step.snapshots, "Q");
    auto merged = sorted_entries(pk);
    auto qs = sorted_entries(qk);
    merged.insert(merged.end(), qs.begin(), qs.end());
    std::sort(merged.begin(), merged.end());
    if (merged != original) out.push_back(step_prefix(trace, k) + "entries of P and Q changed");
    if (!is_reverse_ssyt(qk)) out.push_back(step_prefix(trace, k) + "filled part of Q not reverse");
    if (!is_ssyt(pk)) out.push_back(step_prefix(trace, k) + "remaining P is not a SSYT");
    const Cell stop = step.path.stop();
    if (pk.filled({stop.row, stop.col + 1}) || pk.filled({stop.row + 1, stop.col})) {
      out.push_back(step_prefix(trace, k) + "stop cell " + to_string(stop) +
                    " is not a bottom-right corner of P");
    }
    check_staircase(trace, k, +1, out);
    if (k > 0) {
      const TraceStep& prev = trace.steps[k - 1];
      if (step.e < prev.e) out.push_back(step_prefix(trace, k) + "selected e decreased");
      if (step.e == prev.e && !(step.path.stop().col < prev.path.stop().col)) {
        out.push_back(step_prefix(trace, k) + "equal-e slides stop at " +
                      to_string(prev.path.stop()) + " then " + to_string(step.path.stop()));
      }
    }
  }
  return out;
}

std::vector<std::string> unevacuation_violations(const Tabloid& q, const BijectionTrace& trace) {
  std::vector<std::string> out;
  if (!has_snapshots(trace)) return {"unevacuate: trace has no snapshots"};
  const auto original = sorted_entries(PartialFilling(q));
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const PartialFilling& qk = *find_snapshot(step.snapshots, "Q");
    const PartialFilling& pk = *find_snapshot(step.snapshots, "P");
    auto merged = sorted_entries(pk);
    auto qs = sorted_entries(qk);
    merged.insert(merged.end(), qs.begin(), qs.end());
    std::sort(merged.begin(), merged.end());
    if (merged != original) out.push_back(step_prefix(trace, k) + "entries of P and Q changed");
    if (!is_ssyt(pk)) out.push_back(step_prefix(trace, k) + "filled part of P is not a SSYT");
    check_staircase(trace, k, -1, out);
    if (k > 0 && step.e > trace.steps[k - 1].e) {
      out.push_back(step_prefix(trace, k) + "selected e increased");
    }
  }
  return out;
}

std::vector<std::string> split_violations(const Tabloid& q, std::int64_t a,
                                          const BijectionTrace& trace) {
  std::vector<std::string> out;
  if (!has_snapshots(trace)) return {"split: trace has no snapshots"};
  const SkewShape& shape = q.shape();
  Tabloid prev_r = q;
  Tabloid prev_t(q.shared_shape(), std::vector<Entry>(shape.size(), 0));
  Entry measure = termination_measure(q, a);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const Tabloid rk = find_snapshot(step.snapshots, "R")->to_tabloid();
    const Tabloid tk = find_snapshot(step.snapshots, "T")->to_tabloid();
    const Cell stop = step.path.stop();
    const Cell sel = step.selected;

    if (step.e < 0) out.push_back(step_prefix(trace, k) + "selected e is negative");
    if (prev_r.at(sel) - (a + sel.col - sel.row) != step.e) {
      out.push_back(step_prefix(trace, k) + "e does not match R - (a + c) at the selected cell");
    }
    if (norm(rk) != norm(prev_r) - (a + stop.col - stop.row)) {
      out.push_back(step_prefix(trace, k) + "norm did not drop by a + c(stop) = " +
                    std::to_string(a + stop.col - stop.row));
    }
    Tabloid expect_t = prev_t;
    expect_t.set(stop, prev_t.at(stop) + 1);
    if (!(tk == expect_t)) out.push_back(step_prefix(trace, k) + "T did not grow at the stop cell");
    if (norm(rk) + content_weight(tk, a) != norm(q)) {
      out.push_back(step_prefix(trace, k) + "n(Q) != n(R) + w_c(T)");
    }
    if (!is_reverse_ssyt(rk)) out.push_back(step_prefix(trace, k) + "R is not a reverse SSYT");
    const Entry m = termination_measure(rk, a);
    if (m > measure) {
      out.push_back(step_prefix(trace, k) + "termination measure rose from " +
                    std::to_string(measure) + " to " + std::to_string(m));
    }
    check_staircase(trace, k, +1, out);
    if (k > 0) {
      const TraceStep& prev = trace.steps[k - 1];
      if (step.e > prev.e) out.push_back(step_prefix(trace, k) + "selected e increased");
      if (step.e == prev.e) {
        const Cell before = prev.path.stop();
        if (!(before == stop || before.col < stop.col)) {
          out.push_back(step_prefix(trace, k) + "equal-e slides stop at " + to_string(before) +
                        " then " + to_string(stop));
        }
      }
    }
    measure = m;
    prev_r = rk;
    prev_t = tk;
  }
  if (!respects_row_bounds(prev_r, a)) out.push_back("split: final R exceeds the row bounds");
  return out;
}

std::vector<std::string> unsplit_violations(const TabloidPair& pair, std::int64_t a,
                                            const BijectionTrace& trace) {
  std::vector<std::string> out;
  if (!has_snapshots(trace)) return {"unsplit: trace has no snapshots"};
  Tabloid prev_q = pair.r;
  Tabloid prev_t = pair.t;
  const Entry total = norm(pair.r) + content_weight(pair.t, a);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const Tabloid qk = find_snapshot(step.snapshots, "Q")->to_tabloid();
    const Tabloid tk = find_snapshot(step.snapshots, "T")->to_tabloid();
    const Cell sel = step.selected;
    if (norm(qk) != norm(prev_q) + (a + sel.col - sel.row)) {
      out.push_back(step_prefix(trace, k) + "norm did not grow by a + c(selected)");
    }
    Tabloid expect_t = prev_t;
    expect_t.set(step.selected, prev_t.at(step.selected) - 1);
    if (!(tk == expect_t)) {
      out.push_back(step_prefix(trace, k) + "T did not shrink at the selected cell");
    }
    if (norm(qk) + content_weight(tk, a) != total) {
      out.push_back(step_prefix(trace, k) + "n(Q) + w_c(T) not conserved");
    }
    check_staircase(trace, k, -1, out);
    if (k > 0 && step.e < trace.steps[k - 1].e) {
      out.push_back(step_prefix(trace, k) + "selected e decreased");
    }
    prev_q = qk;
    prev_t = tk;
  }
  return out;
}

namespace {

class FailureLog {
 public:
  FailureLog(BijectionReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void add(const std::string& instance, const std::string& what) {
    ++report_.failure_count;
    if (report_.failures.size() < cap_) report_.failures.push_back(instance + ": " + what);
  }

  void add_all(const std::string& instance, const std::vector<std::string>& whats) {
    for (const auto& w : whats) add(instance, w);
  }

 private:
  BijectionReport& report_;
  std::size_t cap_;
};

std::vector<Entry> pair_key(const TabloidPair& pair) {
  std::vector<Entry> key(pair.r.entries().begin(), pair.r.entries().end());
  key.insert(key.end(), pair.t.entries().begin(), pair.t.entries().end());
  return key;
}

void bump(std::vector<std::int64_t>& counts, Entry n) {
  if (n >= 0 && static_cast<std::size_t>(n) < counts.size()) ++counts[n];
}

}  // namespace

BijectionReport verify_bijection_exhaustive(const SkewShape& shape, std::int64_t a,
                                            Entry max_norm, BijectionCheckOptions options) {
  require_valid_a(shape, a);
  if (max_norm < 0) throw PreconditionError("max_norm must be non-negative");
  const auto buckets = static_cast<std::size_t>(max_norm) + 1;
  BijectionReport report{shape,
                         a,
                         max_norm,
                         std::vector<std::int64_t>(buckets),
                         std::vector<std::int64_t>(buckets),
                         std::vector<std::int64_t>(buckets),
                         std::vector<std::int64_t>(buckets),
                         0,
                         0,
                         {}};
  FailureLog log(report, options.max_reported_failures);
  const TraceOptions trace_opts{options.step_invariants};

  // Forward direction over every SSYT.
  std::map<std::vector<Entry>, Tabloid> image;
  for (const Tabloid& p : enumerate_ssyt(shape, max_norm)) {
    ++report.instances;
    const std::string id = "P = " + compact(p);
    bump(report.ssyt_per_norm, norm(p));
    try {
      auto q = evacuate(p, trace_opts);
      auto rt = split(q.value, a, trace_opts);
      const TabloidPair& pair = rt.value;
      if (options.step_invariants) {
        log.add_all(id, evacuation_violations(p, q.trace));
        log.add_all(id, split_violations(q.value, a, rt.trace));
      }
      if (!is_reverse_ssyt(q.value) || norm(q.value) != norm(p)) {
        log.add(id, "evacuate produced " + compact(q.value));
      }
      if (!is_reverse_ssyt(pair.r) || !respects_row_bounds(pair.r, a)) {
        log.add(id, "R = " + compact(pair.r) + " is not a bounded reverse SSYT");
      }
      const Entry total = norm(pair.r) + content_weight(pair.t, a);
      if (total != norm(p)) log.add(id, "n(P) != n(R) + w_c(T)");
      bump(report.image_per_norm, total);
      if (!image.emplace(pair_key(pair), p).second) {
        log.add(id, "not injective, (R, T) already hit by P = " + compact(image.at(pair_key(pair))));
      }
      if (!(unevacuate(q.value, TraceOptions{false}).value == p)) {
        log.add(id, "unevacuate(evacuate(P)) != P");
      }
      if (!(unsplit(pair, a, TraceOptions{false}).value == q.value)) {
        log.add(id, "unsplit(split(Q)) != Q");
      }
    } catch (const Error& e) {
      log.add(id, std::string("raised: ") + e.what());
    }
  }

  // Every reverse SSYT, enumerated independently of evacuation.
  for (const Tabloid& q : enumerate_reverse_ssyt(shape, max_norm)) {
    ++report.instances;
    const std::string id = "Q = " + compact(q);
    bump(report.reverse_per_norm, norm(q));
    try {
      auto p = unevacuate(q, trace_opts);
      if (options.step_invariants) log.add_all(id, unevacuation_violations(q, p.trace));
      if (!(evacuate(p.value, TraceOptions{false}).value == q)) {
        log.add(id, "evacuate(unevacuate(Q)) != Q");
      }
      const auto rt = split(q, a, TraceOptions{false});
      if (!(unsplit(rt.value, a, TraceOptions{false}).value == q)) {
        log.add(id, "unsplit(split(Q)) != Q");
      }
    } catch (const Error& e) {
      log.add(id, std::string("raised: ") + e.what());
    }
  }

  // Every pair (R, T) within the budget must be hit exactly once and invert.
  std::int64_t matched = 0;
  for (const Tabloid& r : enumerate_bounded_reverse(shape, a)) {
    const Entry nr = norm(r);
    if (nr > max_norm) continue;
    for_each_tabloid_by_weight(shape, a, max_norm - nr, [&](const Tabloid& t) {
      ++report.instances;
      const TabloidPair pair{r, t};
      const std::string id = "(R, T) = (" + compact(r) + ", " + compact(t) + ")";
      bump(report.pairs_per_norm, nr + content_weight(t, a));
      auto hit = image.find(pair_key(pair));
      if (hit == image.end()) {
        log.add(id, "not in the image of map_full");
      } else {
        ++matched;
      }
      try {
        auto q = unsplit(pair, a, trace_opts);
        if (options.step_invariants) log.add_all(id, unsplit_violations(pair, a, q.trace));
        if (!(split(q.value, a, TraceOptions{false}).value == pair)) {
          log.add(id, "split(unsplit(R, T)) != (R, T)");
        }
        const Tabloid p = unevacuate(q.value, TraceOptions{false}).value;
        if (hit != image.end() && !(p == hit->second)) {
          log.add(id, "unmap_full gives " + compact(p) + " but map_full came from " +
                          compact(hit->second));
        }
      } catch (const Error& e) {
        log.add(id, std::string("raised: ") + e.what());
      }
    });
  }
  if (matched != static_cast<std::int64_t>(image.size())) {
    log.add("image", std::to_string(image.size()) + " images but only " + std::to_string(matched) +
                         " enumerated pairs matched");
  }
  for (std::size_t n = 0; n < buckets; ++n) {
    if (report.ssyt_per_norm[n] != report.pairs_per_norm[n] ||
        report.ssyt_per_norm[n] != report.reverse_per_norm[n]) {
      log.add("norm " + std::to_string(n),
              "counts differ: " + std::to_string(report.ssyt_per_norm[n]) + " SSYT, " +
                  std::to_string(report.reverse_per_norm[n]) + " reverse SSYT, " +
                  std::to_string(report.pairs_per_norm[n]) + " pairs");
    }
  }
  return report;
}

}  // namespace skewjdt

namespace skewjdt {

std::vector<MatchupRow> matchup(const SkewShape& shape, std::int64_t a, Entry norm_value) {
  require_valid_a(shape, a);
  std::vector<MatchupRow> rows;
  for (const Tabloid& p : enumerate_ssyt(shape, norm_value)) {
    if (norm(p) != norm_value) continue;
    Tabloid q = evacuate(p, TraceOptions{false}).value;
    TabloidPair rt = split(q, a, TraceOptions{false}).value;
    rows.push_back({p, std::move(q), std::move(rt.r), std::move(rt.t)});
  }
  return rows;
}

}  // namespace skewjdt
