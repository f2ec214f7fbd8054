#include "skewjdt/tabloids.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "fixtures.hpp"
#include "skewjdt/errors.hpp"

namespace skewjdt {
namespace {

using namespace skewjdt::testing;

TEST(TabloidTest, FromRowsPlacesEntriesInSkewCells) {
  Tabloid p = example_p();
  EXPECT_EQ(p.at({1, 3}), 0);
  EXPECT_EQ(p.at({3, 2}), 1);
  EXPECT_EQ(p.at({4, 1}), 2);
  EXPECT_EQ(p.at({4, 3}), 9);
  EXPECT_THROW(p.at({1, 1}), PreconditionError);
}

TEST(TabloidTest, FromRowsRejectsWrongRowLength) {
  EXPECT_THROW(tab("3,2/1", {{0, 0}, {0}}), PreconditionError);
  EXPECT_THROW(tab("3,2/1", {{0, 0}}), PreconditionError);
}

TEST(TabloidTest, RejectsNegativeEntries) {
  Tabloid t(shape("2,1"));
  EXPECT_THROW(t.set({1, 1}, -1), PreconditionError);
  EXPECT_THROW(tab("2", {{0, -3}}), PreconditionError);
}

TEST(NormTest, RunningExample) {
  EXPECT_EQ(norm(example_p()), 43);
  EXPECT_EQ(norm(example_q()), 43);
  EXPECT_EQ(norm(example_r()), 19);
  EXPECT_EQ(content_weight(example_t(), 6), 24);
}

TEST(NormTest, EmptyShape) {
  Tabloid t(shape("2,1/2,1"));
  EXPECT_EQ(norm(t), 0);
  EXPECT_EQ(content_weight(t, -5), 0);
  EXPECT_TRUE(is_ssyt(t));
  EXPECT_TRUE(is_reverse_ssyt(t));
}

TEST(NormTest, ContentWeightRequiresValidA) {
  EXPECT_THROW(content_weight(example_t(), 2), PreconditionError);
}

TEST(NormTest, OverflowIsReported) {
  const Entry big = std::numeric_limits<Entry>::max() / 2 + 1;
  Tabloid t = tab("2", {{big, big}});
  EXPECT_THROW(norm(t), InvariantError);
  EXPECT_THROW(checked::mul(big, 3), InvariantError);
  EXPECT_EQ(checked::add(2, 3), 5);
}

TEST(OrderTest, RunningExampleOrders) {
  EXPECT_TRUE(is_ssyt(example_p()));
  EXPECT_FALSE(is_reverse_ssyt(example_p()));
  EXPECT_TRUE(is_reverse_ssyt(example_q()));
  EXPECT_TRUE(is_reverse_ssyt(example_r()));
  EXPECT_FALSE(is_ssyt(example_q()));
}

TEST(OrderTest, ColumnsMustBeStrict) {
  EXPECT_FALSE(is_ssyt(tab("1,1", {{1}, {1}})));
  EXPECT_TRUE(is_ssyt(tab("1,1", {{1}, {2}})));
  EXPECT_FALSE(is_reverse_ssyt(tab("1,1", {{1}, {1}})));
  EXPECT_TRUE(is_reverse_ssyt(tab("1,1", {{2}, {1}})));
}

TEST(OrderTest, DisconnectedRowsAreUnconstrained) {
  // (2,1)/(1): cells (1,2) and (2,1) share no row or column.
  EXPECT_TRUE(is_ssyt(tab("2,1/1", {{5}, {0}})));
  EXPECT_TRUE(is_ssyt(tab("2,1/1", {{0}, {5}})));
  EXPECT_TRUE(is_reverse_ssyt(tab("2,1/1", {{0}, {5}})));
}

TEST(OrderTest, PartialFillingIgnoresEmptyCells) {
  PartialFilling p = partial("2,2", {{0, -1}, {-1, 1}});
  EXPECT_TRUE(is_ssyt(p));
  p.set({2, 1}, 0);
  EXPECT_FALSE(is_ssyt(p));
}

TEST(RowBoundsTest, RunningExample) {
  EXPECT_TRUE(respects_row_bounds(example_r(), 6));
  EXPECT_FALSE(respects_row_bounds(example_q(), 6));
  EXPECT_FALSE(respects_row_bounds(tab("3,2/1", {{1, 0}, {1, 0}}), 2));
  EXPECT_TRUE(respects_row_bounds(tab("3,2/1", {{2, 0}, {0, 0}}), 2));
}

TEST(TabloidTest, SumIsCellwise) {
  Tabloid s = example_r() + example_t();
  EXPECT_EQ(s.at({3, 4}), 2);
  EXPECT_EQ(s.at({3, 2}), 5);
  EXPECT_THROW(example_r() + Tabloid(shape("2")), PreconditionError);
}

TEST(PartialFillingTest, SetEraseComplete) {
  PartialFilling p(shape("2,1"));
  EXPECT_EQ(p.filled_count(), 0u);
  EXPECT_THROW(p.to_tabloid(), PreconditionError);
  p.set({1, 1}, 0);
  p.set({1, 2}, 3);
  p.set({2, 1}, 1);
  EXPECT_TRUE(p.complete());
  EXPECT_EQ(p.to_tabloid(), tab("2,1", {{0, 3}, {1}}));
  p.erase({1, 2});
  EXPECT_FALSE(p.filled({1, 2}));
  EXPECT_EQ(p.get({1, 2}), std::nullopt);
  EXPECT_FALSE(p.filled({5, 5}));
  EXPECT_THROW(p.at({1, 2}), PreconditionError);
  EXPECT_EQ(norm(p), 1);
}

TEST(TabloidPropertyTest, GeneratedFillingsHaveTheirOrder) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    SkewShape s = random_shape(rng, 5, 5);
    Tabloid p = random_ssyt(rng, s, 3);
    Tabloid q = random_reverse_ssyt(rng, s, 3);
    EXPECT_TRUE(is_ssyt(p)) << compact(p);
    EXPECT_TRUE(is_reverse_ssyt(q)) << compact(q);
    EXPECT_EQ(norm(p + q), norm(p) + norm(q));
    EXPECT_EQ(PartialFilling(p).to_tabloid(), p);
  }
}

}  // namespace
}  // namespace skewjdt
