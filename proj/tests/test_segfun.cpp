#include <gtest/gtest.h>

#include <vector>

#include "probrob/error.hpp"
#include "probrob/rng.hpp"
#include "probrob/segfun.hpp"

using namespace probrob;

namespace {

using Rows = std::vector<Segment>;

SegFun random_segfun(SeededStream& rng, std::size_t m, std::uint64_t max_value) {
  std::vector<std::uint64_t> v(m);
  std::uint64_t current = rng.below(max_value + 1);
  for (auto& x : v) {
    if (rng.below(4) == 0) current = rng.below(max_value + 1);
    x = current;
  }
  return SegFun::from_values(v);
}

SegFun sum(const SegFun& x, const SegFun& y) {
  MergeCostCounter c;
  return merge(x, y, c);
}

}  // namespace

TEST(SegFun, EvalExamples) {
  EXPECT_EQ(SegFun(3, Rows{{1, 2, 1}, {3, 3, 0}}).eval(2), 1u);
  EXPECT_EQ(SegFun(5, Rows{{1, 5, 0}}).eval(5), 0u);
  EXPECT_EQ(SegFun(4, Rows{{1, 1, 7}, {2, 4, 0}}).eval(3), 0u);
}

TEST(SegFun, EvalOutOfDomain) {
  const SegFun f(3, Rows{{1, 3, 2}});
  for (std::size_t i : {0u, 4u}) {
    try {
      (void)f.eval(i);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kIndexError);
    }
  }
}

TEST(SegFun, ConstructorRejectsNonCanonicalRows) {
  EXPECT_THROW(SegFun(3, Rows{}), Error);
  EXPECT_THROW(SegFun(3, Rows{{2, 3, 0}}), Error);
  EXPECT_THROW(SegFun(3, Rows{{1, 2, 0}}), Error);
  EXPECT_THROW(SegFun(3, Rows{{1, 1, 0}, {3, 3, 1}}), Error);
  EXPECT_THROW(SegFun(3, Rows{{1, 1, 0}, {2, 3, 0}}), Error);
  EXPECT_THROW(SegFun(3, Rows{{1, 2, 0}, {2, 3, 1}}), Error);
  EXPECT_THROW(SegFun(0, Rows{}), Error);
}

TEST(Merge, Examples) {
  MergeCostCounter c;
  const SegFun d(3, Rows{{1, 2, 1}, {3, 3, 0}});
  const SegFun h(3, Rows{{1, 1, 0}, {2, 3, 1}});
  EXPECT_EQ(merge(d, h, c).rows(), (Rows{{1, 1, 1}, {2, 2, 2}, {3, 3, 1}}));
  EXPECT_EQ(c.row_visits, 4u);

  EXPECT_EQ(sum(d, SegFun::constant(3, 0)), d);

  const SegFun p(4, Rows{{1, 2, 1}, {3, 4, 0}});
  const SegFun q(4, Rows{{1, 2, 1}, {3, 4, 2}});
  EXPECT_EQ(sum(p, q).rows(), (Rows{{1, 4, 2}}));
}

TEST(Merge, DomainMismatch) {
  try {
    (void)sum(SegFun::constant(3, 1), SegFun::constant(4, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompatibleDomain);
  }
}

TEST(Merge, PointwiseSumAndCost) {
  SeededStream rng(1, 1);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = 1 + rng.below(200);
    const SegFun d = random_segfun(rng, m, 3);
    const SegFun h = random_segfun(rng, m, 50);
    MergeCostCounter c;
    c.row_visits = 17;
    const SegFun got = merge(d, h, c);
    EXPECT_EQ(c.row_visits, 17 + d.row_count() + h.row_count());
    std::vector<std::uint64_t> expected(m);
    for (std::size_t i = 1; i <= m; ++i) {
      expected[i - 1] = d.eval(i) + h.eval(i);
      ASSERT_EQ(got.eval(i), expected[i - 1]);
    }
    // Re-encoding the dense values must reproduce exactly the same rows.
    ASSERT_EQ(got, SegFun::from_values(expected));
    ASSERT_NO_THROW(SegFun(m, got.rows()));
  }
}

TEST(Merge, CommutativeAndAssociative) {
  SeededStream rng(2, 2);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = 1 + rng.below(200);
    const SegFun a = random_segfun(rng, m, 5);
    const SegFun b = random_segfun(rng, m, 5);
    const SegFun c = random_segfun(rng, m, 5);
    ASSERT_EQ(sum(a, b), sum(b, a));
    const SegFun left = sum(sum(a, b), c);
    ASSERT_EQ(left, sum(a, sum(b, c)));
    ASSERT_EQ(left, sum(sum(a, c), b));
    ASSERT_EQ(left, sum(c, sum(b, a)));
  }
}

TEST(SegFun, EncodingRoundTrip) {
  SeededStream rng(3, 3);
  for (int t = 0; t < 1000; ++t) {
    const SegFun f = random_segfun(rng, 1 + rng.below(300), 4);
    ASSERT_EQ(SegFun::from_values(f.values()), f);
    for (std::size_t k = 1; k < f.row_count(); ++k) {
      ASSERT_NE(f.rows()[k].value, f.rows()[k - 1].value);
    }
  }
}

TEST(MergeCostCounter, Accumulates) {
  MergeCostCounter a{3};
  MergeCostCounter b{4};
  a += b;
  EXPECT_EQ(a.row_visits, 7u);
}
