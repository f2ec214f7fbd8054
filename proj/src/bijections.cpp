#include "skewjdt/bijections.hpp"

#include "skewjdt/errors.hpp"

namespace skewjdt {

namespace {

void snapshot(TraceStep& step, const TraceOptions& options, const char* label_a,
              const PartialFilling& a, const char* label_b, const PartialFilling& b) {
  if (!options.snapshots) return;
  step.snapshots.push_back({label_a, a});
  step.snapshots.push_back({label_b, b});
}

}  // namespace

Traced<Tabloid> evacuate(const Tabloid& input, TraceOptions options) {
  if (!is_ssyt(input)) throw PreconditionError("evacuate: input is not a SSYT");
  const SkewShape& shape = input.shape();
  PartialFilling p(input);
  PartialFilling q(input.shared_shape());
  BijectionTrace trace{"evacuate", {}, {}};
  if (options.snapshots) trace.initial = {{"P", p}, {"Q", q}};

  for (std::size_t remaining = shape.size(); remaining > 0; --remaining) {
    // Minimal entry; on ties the right-most cell (column strictness makes it unique).
    std::optional<Cell> rho;
    Entry e = 0;
    for (Cell c : shape.cells()) {
      auto v = p.get(c);
      if (!v) continue;
      if (!rho || *v < e || (*v == e && c.col > rho->col)) {
        rho = c;
        e = *v;
      }
    }
    auto slid = jdt_forward_slide(std::move(p), *rho);
    p = std::move(slid.filling);
    const Cell stop = slid.path.stop();
    q.set(stop, e);
    p.erase(stop);
    TraceStep step{*rho, e, std::move(slid.path), {}};
    snapshot(step, options, "P", p, "Q", q);
    trace.steps.push_back(std::move(step));
  }
  return {q.to_tabloid(), std::move(trace)};
}

Traced<Tabloid> unevacuate(const Tabloid& input, TraceOptions options) {
  if (!is_reverse_ssyt(input)) throw PreconditionError("unevacuate: input is not a reverse SSYT");
  const SkewShape& shape = input.shape();
  PartialFilling q(input);
  PartialFilling p(input.shared_shape());
  BijectionTrace trace{"unevacuate", {}, {}};
  if (options.snapshots) trace.initial = {{"Q", q}, {"P", p}};

  for (std::size_t remaining = shape.size(); remaining > 0; --remaining) {
    std::optional<Cell> rho;
    Entry e = 0;
    for (Cell c : shape.cells()) {
      auto v = q.get(c);
      if (!v) continue;
      if (!rho || *v > e || (*v == e && c.col < rho->col)) {
        rho = c;
        e = *v;
      }
    }
    q.erase(*rho);
    p.set(*rho, e);
    auto slid = jdt_backward_slide(std::move(p), *rho);
    p = std::move(slid.filling);
    TraceStep step{*rho, e, std::move(slid.path), {}};
    snapshot(step, options, "Q", q, "P", p);
    trace.steps.push_back(std::move(step));
  }
  return {p.to_tabloid(), std::move(trace)};
}

Traced<TabloidPair> split(const Tabloid& q, std::int64_t a, TraceOptions options) {
  if (!is_reverse_ssyt(q)) throw PreconditionError("split: input is not a reverse SSYT");
  const SkewShape& shape = q.shape();
  require_valid_a(shape, a);

  std::vector<Entry> bound(static_cast<std::size_t>(shape.rows()) + 1);
  for (int i = 1; i <= shape.rows(); ++i) bound[i] = row_bound(shape, a, i);

  Tabloid r = q;
  Tabloid t(q.shared_shape(), std::vector<Entry>(shape.size(), 0));
  BijectionTrace trace{"split", {}, {}};
  if (options.snapshots) trace.initial = {{"R", PartialFilling(r)}, {"T", PartialFilling(t)}};

  auto violates = [&] {
    for (std::size_t k = 0; k < shape.size(); ++k)
      if (r[k] > bound[shape.cells()[k].row]) return true;
    return false;
  };

  while (violates()) {
    // Maximal R - (a + c); iterating row-major with >= keeps the bottom-most,
    // then right-most, candidate.
    std::size_t best = 0;
    Entry e = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      const Cell c = shape.cells()[k];
      const Entry value = r[k] - (a + c.col - c.row);
      if (k == 0 || value >= e) {
        best = k;
        e = value;
      }
    }
    if (e < 0) {
      throw InvariantError("split: selected value " + std::to_string(e) + " is negative at " +
                           to_string(shape.cells()[best]));
    }
    const Cell rho = shape.cells()[best];
    auto slid = mjdt_forward_slide(std::move(r), rho, a);
    r = std::move(slid.filling);
    const std::size_t stop = *shape.index_of(slid.path.stop());
    t.set_index(stop, checked::add(t[stop], 1));
    TraceStep step{rho, e, std::move(slid.path), {}};
    if (options.snapshots) snapshot(step, options, "R", PartialFilling(r), "T", PartialFilling(t));
    trace.steps.push_back(std::move(step));
  }
  return {{std::move(r), std::move(t)}, std::move(trace)};
}

Traced<Tabloid> unsplit(const TabloidPair& pair, std::int64_t a, TraceOptions options,
                        bool strict) {
  const SkewShape& shape = pair.r.shape();
  if (!(shape == pair.t.shape())) throw PreconditionError("unsplit: R and T differ in shape");
  require_valid_a(shape, a);
  if (!is_reverse_ssyt(pair.r)) throw PreconditionError("unsplit: R is not a reverse SSYT");
  if (!respects_row_bounds(pair.r, a)) {
    throw PreconditionError("unsplit: R exceeds the row bounds a + inner_i - i");
  }

  Tabloid q = pair.r;
  Tabloid t = pair.t;
  BijectionTrace trace{"unsplit", {}, {}};
  if (options.snapshots) trace.initial = {{"Q", PartialFilling(q)}, {"T", PartialFilling(t)}};

  while (true) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (t[k] == 0) continue;
      if (!best || q[k] < q[*best] ||
          (q[k] == q[*best] && shape.cells()[k].col > shape.cells()[*best].col)) {
        best = k;
      }
    }
    if (!best) break;
    const Cell rho = shape.cells()[*best];
    const Entry e = q[*best];
    t.set_index(*best, t[*best] - 1);
    auto slid = mjdt_backward_slide(std::move(q), rho, a);
    q = std::move(slid.filling);
    TraceStep step{rho, e, std::move(slid.path), {}};
    if (options.snapshots) snapshot(step, options, "Q", PartialFilling(q), "T", PartialFilling(t));
    trace.steps.push_back(std::move(step));
  }

  if (!is_reverse_ssyt(q)) {
    throw PreconditionError("unsplit: (R, T) has no preimage, result is not a reverse SSYT");
  }
  if (strict) {
    auto again = split(q, a, TraceOptions{false});
    if (!(again.value == pair)) {
      throw PreconditionError("unsplit: strict check failed, split(unsplit(R, T)) != (R, T)");
    }
  }
  return {std::move(q), std::move(trace)};
}

TabloidPair map_full(const Tabloid& p, std::int64_t a) {
  require_valid_a(p.shape(), a);
  auto q = evacuate(p, TraceOptions{false});
  return split(q.value, a, TraceOptions{false}).value;
}

Tabloid unmap_full(const TabloidPair& pair, std::int64_t a, bool strict) {
  auto q = unsplit(pair, a, TraceOptions{false}, strict);
  return unevacuate(q.value, TraceOptions{false}).value;
}

}  // namespace skewjdt
