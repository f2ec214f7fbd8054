#include "skewjdt/slides.hpp"

#include "skewjdt/errors.hpp"

namespace skewjdt {

std::string to_string(const SlidePath& path) {
  std::string out;
  for (std::size_t k = 0; k < path.cells.size(); ++k) {
    if (k) out += ' ';
    out += to_string(path.cells[k]);
  }
  return out;
}

namespace {

void require_filled(const PartialFilling& p, Cell start) {
  if (!p.shape().contains(start)) {
    throw PreconditionError("slide start " + to_string(start) + " is not in the shape");
  }
  if (!p.filled(start)) throw PreconditionError("slide start " + to_string(start) + " is empty");
}

}  // namespace

SlideResult<PartialFilling> jdt_forward_slide(PartialFilling p, Cell start) {
  require_filled(p, start);
  const Entry e = p.at(start);
  SlidePath path{{start}};
  Cell rho = start;
  while (true) {
    const Cell right{rho.row, rho.col + 1};
    const Cell below{rho.row + 1, rho.col};
    const auto x = p.get(right);
    const auto y = p.get(below);
    if (!x && !y) break;
    const Cell next = (x && (!y || *x < *y)) ? right : below;
    p.set(rho, *p.get(next));
    p.set(next, e);
    rho = next;
    path.cells.push_back(rho);
  }
  return {std::move(p), std::move(path)};
}

SlideResult<PartialFilling> jdt_backward_slide(PartialFilling p, Cell start) {
  require_filled(p, start);
  const Entry e = p.at(start);
  SlidePath path{{start}};
  Cell rho = start;
  while (true) {
    const Cell left{rho.row, rho.col - 1};
    const Cell above{rho.row - 1, rho.col};
    const auto x = p.get(left);
    const auto y = p.get(above);
    if (!x && !y) break;
    const Cell next = (x && (!y || *x > *y)) ? left : above;
    const Entry moved = *p.get(next);
    if (moved == e) break;
    p.set(rho, moved);
    p.set(next, e);
    rho = next;
    path.cells.push_back(rho);
  }
  return {std::move(p), std::move(path)};
}

SlideResult<Tabloid> mjdt_forward_slide(Tabloid r, Cell start, std::int64_t a) {
  const SkewShape& shape = r.shape();
  const std::size_t start_idx = shape.checked_index(start);
  const Entry e = r[start_idx] - (a + start.col - start.row);
  if (e < 0) {
    throw PreconditionError("modified slide at " + to_string(start) + " would place " +
                            std::to_string(e) + " < 0");
  }
  r.set_index(start_idx, e);
  SlidePath path{{start}};
  Cell rho = start;
  std::size_t rho_idx = start_idx;
  while (true) {
    const auto right_idx = shape.index_of({rho.row, rho.col + 1});
    const auto below_idx = shape.index_of({rho.row + 1, rho.col});
    const bool go_on = (right_idx && e < r[*right_idx]) || (below_idx && e <= r[*below_idx]);
    if (!go_on) break;
    if (right_idx && (!below_idx || r[*right_idx] - 1 > r[*below_idx])) {
      r.set_index(rho_idx, r[*right_idx] - 1);
      r.set_index(*right_idx, e);
      rho = {rho.row, rho.col + 1};
      rho_idx = *right_idx;
    } else {
      r.set_index(rho_idx, r[*below_idx] + 1);
      r.set_index(*below_idx, e);
      rho = {rho.row + 1, rho.col};
      rho_idx = *below_idx;
    }
    path.cells.push_back(rho);
  }
  return {std::move(r), std::move(path)};
}

SlideResult<Tabloid> mjdt_backward_slide(Tabloid q, Cell start, std::int64_t a) {
  const SkewShape& shape = q.shape();
  std::size_t rho_idx = shape.checked_index(start);
  const Entry e = q[rho_idx];
  SlidePath path{{start}};
  Cell rho = start;
  while (true) {
    const Entry restored = e + a + rho.col - rho.row;
    const auto left_idx = shape.index_of({rho.row, rho.col - 1});
    const auto above_idx = shape.index_of({rho.row - 1, rho.col});
    const bool go_on =
        (left_idx && restored > q[*left_idx]) || (above_idx && restored >= q[*above_idx]);
    if (!go_on) break;
    if (left_idx && (!above_idx || q[*above_idx] > q[*left_idx] + 1)) {
      q.set_index(rho_idx, q[*left_idx] + 1);
      q.set_index(*left_idx, e);
      rho = {rho.row, rho.col - 1};
      rho_idx = *left_idx;
    } else {
      if (q[*above_idx] == 0) {
        throw PreconditionError("modified backward slide from " + to_string(start) +
                                " would write -1 at " + to_string(rho));
      }
      q.set_index(rho_idx, q[*above_idx] - 1);
      q.set_index(*above_idx, e);
      rho = {rho.row - 1, rho.col};
      rho_idx = *above_idx;
    }
    path.cells.push_back(rho);
  }
  q.set_index(rho_idx, checked::add(q[rho_idx], a + rho.col - rho.row));
  return {std::move(q), std::move(path)};
}

}  // namespace skewjdt
