#include "dyckmax/counting.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dyckmax/exhaustive.hpp"

namespace dyck {
namespace {

TEST(Counting, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(10), 16796);
  EXPECT_EQ(bridge_count(1), 3);
  EXPECT_EQ(bridge_count(2), 10);
}

TEST(Counting, WalkCountParityAndRange) {
  EXPECT_EQ(walk_count(2, 0), 2);
  EXPECT_EQ(walk_count(2, 1), 0);
  EXPECT_EQ(walk_count(2, 3), 0);
  EXPECT_EQ(walk_count(3, -1), 3);
  EXPECT_EQ(walk_count(0, 0), 1);
  EXPECT_EQ(walk_count(-1, 0), 0);
}

TEST(Counting, RowSumsArePowersOfTwo) {
  for (std::int64_t m = 0; m <= 30; ++m) {
    BigCount s = 0;
    for (std::int64_t j = -m - 2; j <= m + 2; ++j) s += walk_count(m, j);
    BigCount p = 1;
    p <<= static_cast<mp_bitcnt_t>(m);
    EXPECT_EQ(s, p) << m;
  }
}

TEST(Counting, CatalanTimesLengthIsBridgeCount) {
  for (std::int64_t n = 0; n <= 500; ++n) EXPECT_EQ(catalan(n) * (2 * n + 1), bridge_count(n)) << n;
}

TEST(Counting, StripCountMatchesEnumeration) {
  for (std::size_t steps = 0; steps <= 12; ++steps) {
    for (int lo = -3; lo <= 0; ++lo) {
      for (int hi = 0; hi <= 3; ++hi) {
        for (int to = lo; to <= hi; ++to) {
          std::int64_t brute = 0;
          for_each_walk(steps, [&](const LatticeWalk& w) {
            brute += w.min() >= lo && w.max() <= hi && w.final_height() == to;
          });
          EXPECT_EQ(strip_count(static_cast<std::int64_t>(steps), 0, to, lo, hi), BigCount(brute))
              << steps << " " << lo << " " << hi << " " << to;
        }
      }
    }
  }
  EXPECT_EQ(strip_count(4, 5, 0, 0, 3), 0);
}

TEST(Counting, ExactProbCanonicalAndChecked) {
  const ExactProb p(BigCount(6), BigCount(8));
  EXPECT_EQ(p.numerator(), 3);
  EXPECT_EQ(p.denominator(), 4);
  EXPECT_EQ(p.to_string(), "3/4");
  EXPECT_DOUBLE_EQ(p.to_double(), 0.75);
  EXPECT_THROW(ExactProb(BigCount(1), BigCount(0)), std::invalid_argument);
  EXPECT_THROW(ExactProb(BigCount(5), BigCount(4)), std::invalid_argument);
  EXPECT_THROW(ExactProb(mpq_class(-1, 2)), std::invalid_argument);
  EXPECT_TRUE(ExactProb(BigCount(1), BigCount(3)) < p);
}

TEST(Counting, LogBigAndRatioOnHugeNumbers) {
  EXPECT_NEAR(log_big(BigCount(1000)), std::log(1000.0), 1e-14);
  // log C(2n, n) against lgamma, far outside double range.
  const std::int64_t n = 5000;
  const double expected = std::lgamma(2.0 * n + 1) - 2.0 * std::lgamma(n + 1.0);
  EXPECT_NEAR(log_big(binomial(2 * n, n)), expected, 1e-9 * expected);
  // C(2n+1, n) / C(2n, n) = (2n+1)/(n+1).
  const double r = ratio_to_double(bridge_count(n), binomial(2 * n, n));
  const double exact = (2.0 * n + 1.0) / (n + 1.0);
  EXPECT_LE(std::abs(r - exact), std::abs(std::nextafter(exact, 2.0) - exact));
  EXPECT_EQ(ratio_to_double(BigCount(0), BigCount(7)), 0.0);
  EXPECT_THROW(ratio_to_double(BigCount(1), BigCount(0)), std::domain_error);
  EXPECT_THROW(log_big(BigCount(0)), std::domain_error);
}

}  // namespace
}  // namespace dyck
