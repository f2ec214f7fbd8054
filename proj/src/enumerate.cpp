#include "skewjdt/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "skewjdt/errors.hpp"

namespace skewjdt {

namespace {

constexpr Entry kUnbounded = std::numeric_limits<Entry>::max() / 4;

struct Neighbours {
  std::vector<std::ptrdiff_t> left, above;
};

Neighbours neighbours(const SkewShape& shape) {
  Neighbours nb;
  for (Cell c : shape.cells()) {
    auto l = shape.index_of({c.row, c.col - 1});
    auto u = shape.index_of({c.row - 1, c.col});
    nb.left.push_back(l ? static_cast<std::ptrdiff_t>(*l) : -1);
    nb.above.push_back(u ? static_cast<std::ptrdiff_t>(*u) : -1);
  }
  return nb;
}

/// suffix[k] = sum of floor[k..n).
std::vector<Entry> suffix_sums(const std::vector<Entry>& floor) {
  std::vector<Entry> suffix(floor.size() + 1, 0);
  for (std::size_t k = floor.size(); k-- > 0;) suffix[k] = suffix[k + 1] + floor[k];
  return suffix;
}

class SsytSearch {
 public:
  SsytSearch(const SkewShape& shape, Entry max_norm, const TabloidVisitor& visit)
      : shape_(std::make_shared<const SkewShape>(shape)),
        nb_(neighbours(shape)),
        max_norm_(max_norm),
        visit_(visit),
        cur_(shape.size(), 0) {
    // Smallest value any SSYT can hold at each cell, ignoring the prefix.
    std::vector<Entry> floor(shape.size(), 0);
    for (std::size_t k = 0; k < floor.size(); ++k) {
      if (nb_.left[k] >= 0) floor[k] = std::max(floor[k], floor[nb_.left[k]]);
      if (nb_.above[k] >= 0) floor[k] = std::max(floor[k], floor[nb_.above[k]] + 1);
    }
    rest_ = suffix_sums(floor);
  }

  void run() {
    if (rest_[0] <= max_norm_) recurse(0, 0);
  }

 private:
  void recurse(std::size_t k, Entry sum) {
    if (k == cur_.size()) {
      visit_(Tabloid(shape_, cur_));
      return;
    }
    Entry lo = 0;
    if (nb_.left[k] >= 0) lo = std::max(lo, cur_[nb_.left[k]]);
    if (nb_.above[k] >= 0) lo = std::max(lo, cur_[nb_.above[k]] + 1);
    for (Entry v = lo; sum + v + rest_[k + 1] <= max_norm_; ++v) {
      cur_[k] = v;
      recurse(k + 1, sum + v);
    }
  }

  std::shared_ptr<const SkewShape> shape_;
  Neighbours nb_;
  Entry max_norm_;
  const TabloidVisitor& visit_;
  std::vector<Entry> cur_;
  std::vector<Entry> rest_;
};

class ReverseSearch {
 public:
  ReverseSearch(const SkewShape& shape, Entry max_norm, std::vector<Entry> cap,
                const TabloidVisitor& visit)
      : shape_(std::make_shared<const SkewShape>(shape)),
        nb_(neighbours(shape)),
        max_norm_(max_norm),
        cap_(std::move(cap)),
        visit_(visit),
        cur_(shape.size(), 0) {
    // Smallest value at each cell: columns strictly decrease down to >= 0.
    floor_.assign(shape.size(), 0);
    for (std::size_t k = shape.size(); k-- > 0;) {
      Cell c = shape.cells()[k];
      if (auto r = shape.index_of({c.row, c.col + 1})) floor_[k] = std::max(floor_[k], floor_[*r]);
      if (auto b = shape.index_of({c.row + 1, c.col}))
        floor_[k] = std::max(floor_[k], floor_[*b] + 1);
    }
    rest_ = suffix_sums(floor_);
  }

  void run() {
    if (rest_[0] <= max_norm_) recurse(0, 0);
  }

 private:
  void recurse(std::size_t k, Entry sum) {
    if (k == cur_.size()) {
      visit_(Tabloid(shape_, cur_));
      return;
    }
    Entry hi = cap_[k];
    if (nb_.left[k] >= 0) hi = std::min(hi, cur_[nb_.left[k]]);
    if (nb_.above[k] >= 0) hi = std::min(hi, cur_[nb_.above[k]] - 1);
    hi = std::min(hi, max_norm_ - sum - rest_[k + 1]);
    for (Entry v = floor_[k]; v <= hi; ++v) {
      cur_[k] = v;
      recurse(k + 1, sum + v);
    }
  }

  std::shared_ptr<const SkewShape> shape_;
  Neighbours nb_;
  Entry max_norm_;
  std::vector<Entry> cap_;
  const TabloidVisitor& visit_;
  std::vector<Entry> cur_;
  std::vector<Entry> floor_;
  std::vector<Entry> rest_;
};

void require_non_negative(Entry value, const char* what) {
  if (value < 0) throw PreconditionError(std::string(what) + " must be non-negative");
}

std::vector<Tabloid> collect_sorted(const std::function<void(const TabloidVisitor&)>& source,
                                    const std::function<Entry(const Tabloid&)>& key) {
  std::vector<std::pair<Entry, Tabloid>> keyed;
  source([&](const Tabloid& t) { keyed.emplace_back(key(t), t); });
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Tabloid> out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

Entry norm_key(const Tabloid& t) { return norm(t); }

}  // namespace

void for_each_ssyt(const SkewShape& shape, Entry max_norm, const TabloidVisitor& visit) {
  require_non_negative(max_norm, "max_norm");
  SsytSearch(shape, max_norm, visit).run();
}

std::vector<Tabloid> enumerate_ssyt(const SkewShape& shape, Entry max_norm) {
  return collect_sorted([&](const TabloidVisitor& v) { for_each_ssyt(shape, max_norm, v); },
                        norm_key);
}

void for_each_reverse_ssyt(const SkewShape& shape, Entry max_norm, const TabloidVisitor& visit) {
  require_non_negative(max_norm, "max_norm");
  ReverseSearch(shape, max_norm, std::vector<Entry>(shape.size(), kUnbounded), visit).run();
}

std::vector<Tabloid> enumerate_reverse_ssyt(const SkewShape& shape, Entry max_norm) {
  return collect_sorted(
      [&](const TabloidVisitor& v) { for_each_reverse_ssyt(shape, max_norm, v); }, norm_key);
}

void for_each_bounded_reverse(const SkewShape& shape, std::int64_t a, const TabloidVisitor& visit) {
  require_valid_a(shape, a);
  std::vector<Entry> cap;
  cap.reserve(shape.size());
  for (Cell c : shape.cells()) cap.push_back(row_bound(shape, a, c.row));
  ReverseSearch(shape, kUnbounded, std::move(cap), visit).run();
}

std::vector<Tabloid> enumerate_bounded_reverse(const SkewShape& shape, std::int64_t a) {
  return collect_sorted([&](const TabloidVisitor& v) { for_each_bounded_reverse(shape, a, v); },
                        norm_key);
}

void for_each_tabloid_by_weight(const SkewShape& shape, std::int64_t a, Entry max_weight,
                                const TabloidVisitor& visit) {
  require_valid_a(shape, a);
  require_non_negative(max_weight, "max_weight");
  auto shared = std::make_shared<const SkewShape>(shape);
  std::vector<Entry> weight;
  for (Cell c : shape.cells()) weight.push_back(a + c.col - c.row);
  std::vector<Entry> cur(shape.size(), 0);
  std::function<void(std::size_t, Entry)> recurse = [&](std::size_t k, Entry used) {
    if (k == cur.size()) {
      visit(Tabloid(shared, cur));
      return;
    }
    for (Entry v = 0; used + v * weight[k] <= max_weight; ++v) {
      cur[k] = v;
      recurse(k + 1, used + v * weight[k]);
    }
    cur[k] = 0;
  };
  recurse(0, 0);
}

std::vector<Tabloid> enumerate_tabloids_by_weight(const SkewShape& shape, std::int64_t a,
                                                  Entry max_weight) {
  return collect_sorted(
      [&](const TabloidVisitor& v) { for_each_tabloid_by_weight(shape, a, max_weight, v); },
      [a](const Tabloid& t) { return content_weight(t, a); });
}

}  // namespace skewjdt
