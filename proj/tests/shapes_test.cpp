#include "skewjdt/shapes.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "skewjdt/errors.hpp"

namespace skewjdt {
namespace {

using testing::shape;

TEST(PartitionTest, AcceptsWeaklyDecreasingParts) {
  Partition p = make_partition({4, 3, 3, 1});
  EXPECT_EQ(p.length(), 4u);
  EXPECT_EQ(p.size(), 11);
  EXPECT_EQ(p.part(3), 3);
  EXPECT_EQ(p.part(5), 0);
}

TEST(PartitionTest, EmptyPartition) {
  Partition p = make_partition({});
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.part(1), 0);
}

TEST(PartitionTest, RejectsIncreaseNamingIndex) {
  try {
    make_partition({3, 4});
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos) << e.what();
  }
}

TEST(PartitionTest, RejectsNonPositivePart) {
  EXPECT_THROW(make_partition({2, 0}), PreconditionError);
  EXPECT_THROW(make_partition({-1}), PreconditionError);
}

TEST(SkewShapeTest, FerrersExample) {
  SkewShape s = make_skew_shape(make_partition({4, 3, 3, 1}), make_partition({2, 2, 1}));
  EXPECT_EQ(s.size(), 6u);
  EXPECT_TRUE(s.contains({1, 3}));
  EXPECT_FALSE(s.contains({1, 2}));
  EXPECT_TRUE(s.contains({4, 1}));
}

TEST(SkewShapeTest, RunningExampleRowLengths) {
  SkewShape s = shape("4,4,4,3/2,2,1");
  EXPECT_EQ(s.size(), 10u);
  std::vector<int> lengths;
  for (int i = 1; i <= s.rows(); ++i) lengths.push_back(s.end_col(i) - s.first_col(i));
  EXPECT_EQ(lengths, (std::vector<int>{2, 2, 3, 3}));
}

TEST(SkewShapeTest, LambdaOverLambdaIsEmpty) {
  Partition l = make_partition({3, 1});
  SkewShape s = make_skew_shape(l, l);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.rows(), 2);
}

TEST(SkewShapeTest, ContainmentViolationNamesRow) {
  try {
    make_skew_shape(make_partition({3, 1}), make_partition({2, 2}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(make_skew_shape(make_partition({3}), make_partition({1, 1})), PreconditionError);
}

TEST(SkewShapeTest, IndexOrderIsRowMajor) {
  SkewShape s = shape("3,2/1");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.cells()[0], (Cell{1, 2}));
  EXPECT_EQ(s.cells()[3], (Cell{2, 2}));
  EXPECT_EQ(s.index_of({2, 1}), 2u);
  EXPECT_EQ(s.index_of({1, 1}), std::nullopt);
  EXPECT_THROW(s.checked_index({3, 1}), PreconditionError);
}

TEST(ContentTest, Examples) {
  SkewShape s = shape("4,4,4,3/2,2,1");
  EXPECT_EQ(content(s, {3, 2}), -1);
  EXPECT_EQ(6 + content(s, {3, 2}), 5);
  EXPECT_EQ(content(s, {1, 3}), 2);
  EXPECT_EQ(6 + content(s, {1, 3}), 8);
  EXPECT_EQ(content(s, {3, 3}), 0);
  EXPECT_THROW(content(s, {1, 1}), PreconditionError);
}

TEST(RowBoundTest, Examples) {
  SkewShape s = shape("4,4,4,3/2,2,1");
  std::vector<std::int64_t> bounds;
  for (int i = 1; i <= 4; ++i) bounds.push_back(row_bound(s, 6, i));
  EXPECT_EQ(bounds, (std::vector<std::int64_t>{7, 6, 4, 2}));

  SkewShape small = shape("3,2/1");
  EXPECT_EQ(row_bound(small, 2, 1), 2);
  EXPECT_EQ(row_bound(small, 2, 2), 0);
  EXPECT_EQ(row_bound(shape("1"), 1, 1), 0);
  EXPECT_THROW(row_bound(small, 2, 3), PreconditionError);
  EXPECT_THROW(row_bound(small, 2, 0), PreconditionError);
}

TEST(ValidateATest, Examples) {
  EXPECT_TRUE(validate_a(shape("4,4,4,3/2,2,1"), 6));
  EXPECT_FALSE(validate_a(shape("4,4,4,3/2,2,1"), 2));
  EXPECT_TRUE(validate_a(shape("3,2/1"), 2));
  EXPECT_FALSE(validate_a(shape("3,2/1"), 1));
  EXPECT_TRUE(validate_a(SkewShape(), -100));
}

TEST(ShapeTextTest, FormatsAndParses) {
  EXPECT_EQ(format_shape(shape(" 4, 4,4 ,3 / 2,2,1 ")), "4,4,4,3/2,2,1");
  EXPECT_EQ(format_shape(shape("2,2")), "2,2");
  EXPECT_EQ(format_shape(shape("2,2/")), "2,2");
  EXPECT_EQ(format_shape(shape("")), "");
}

TEST(ShapeTextTest, RejectsMalformed) {
  EXPECT_THROW(parse_shape("3,,2"), ParseError);
  EXPECT_THROW(parse_shape("3,a"), ParseError);
  EXPECT_THROW(parse_shape("2,3"), ParseError);
  EXPECT_THROW(parse_shape("2/3"), ParseError);
}

TEST(ShapePropertyTest, RandomShapesSatisfyInvariants) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    SkewShape s = testing::random_shape(rng, 5, 6);
    int expected = 0;
    for (int i = 1; i <= s.rows(); ++i) expected += s.outer().part(i) - s.inner().part(i);
    ASSERT_EQ(s.size(), static_cast<std::size_t>(expected));
    for (Cell c : s.cells()) {
      if (s.contains({c.row + 1, c.col + 1})) {
        EXPECT_EQ(content(s, c), content(s, {c.row + 1, c.col + 1}));
      }
    }
    for (std::int64_t a = -3; a < 8; ++a) {
      if (validate_a(s, a)) EXPECT_TRUE(validate_a(s, a + 1));
    }
    EXPECT_EQ(parse_shape(format_shape(s)), s);
  }
}

}  // namespace
}  // namespace skewjdt
