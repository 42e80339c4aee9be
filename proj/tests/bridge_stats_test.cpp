#include "dyckmax/bridge_stats.hpp"

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "dyckmax/exhaustive.hpp"

namespace dyck {
namespace {

TEST(BridgeStats, MidpointCountsAtOne) {
  const auto m = bridge_midpoint_counts(1);
  EXPECT_EQ(m, (std::map<std::int64_t, BigCount>{{-1, 2}, {1, 1}}));
  EXPECT_EQ(bridge_midpoint_probability(1, 0).to_string(), "0");
  EXPECT_EQ(bridge_midpoint_probability(1, -1).to_string(), "2/3");
}

TEST(BridgeStats, MidpointCountsMatchEnumeration) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::map<std::int64_t, BigCount> brute;
    for_each_bridge(n, [&](const LatticeWalk& w) { brute[w.height(n)] += 1; });
    const auto m = bridge_midpoint_counts(static_cast<std::int64_t>(n));
    EXPECT_EQ(m, brute) << n;
    BigCount total = 0;
    for (const auto& [k, c] : m) total += c;
    EXPECT_EQ(total, bridge_count(static_cast<std::int64_t>(n)));
  }
}

TEST(BridgeStats, C0Rows) {
  const auto scan = c0_scan(40);
  EXPECT_EQ(scan.rows[0].displayed, mpq_class(1));
  EXPECT_EQ(scan.rows[1].displayed, mpq_class(4, 3));
  EXPECT_EQ(scan.rows[0].horizon_n, mpq_class(4, 3));
  EXPECT_EQ(scan.rows[1].horizon_n, mpq_class(6, 5));
  EXPECT_EQ(scan.sup_horizon_n_plus_1, mpq_class(8, 5));
  EXPECT_EQ(scan.argsup_horizon_n_plus_1, 2);
  // The displayed form is the horizon-n constant one index lower.
  for (std::size_t i = 1; i < scan.rows.size(); ++i) EXPECT_EQ(scan.rows[i].displayed, scan.rows[i - 1].horizon_n);
  EXPECT_DOUBLE_EQ(scan.certified_horizon_n, std::nextafter(std::sqrt(2.0), 2.0));
  EXPECT_GE(mpq_class(scan.certified_horizon_n_plus_1), scan.sup_horizon_n_plus_1);
}

TEST(BridgeStats, C0RowIsSupOverMidpointRatios) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    mpq_class best = 0;
    BigCount pow2 = 1;
    pow2 <<= static_cast<mp_bitcnt_t>(n);
    for (const auto& [k, c] : bridge_midpoint_counts(n)) {
      mpq_class ratio(c * pow2, walk_count(n, k) * bridge_count(n));
      ratio.canonicalize();
      best = std::max(best, ratio);
    }
    EXPECT_EQ(best, c0_scan(n).rows.back().horizon_n) << n;
  }
}

TEST(BridgeStats, C0ScanFlattens) {
  const auto scan = c0_scan(10000);
  EXPECT_LE(scan.sup_horizon_n, mpq_class(std::sqrt(2.0)) + mpq_class(1, 1000000));
  EXPECT_LT(scan.tail_spread, 1e-3);
  const double last = scan.rows.back().horizon_n.get_d();
  EXPECT_NEAR(last, std::sqrt(2.0), 1e-3);
  EXPECT_LE(scan.rows.back().displayed.get_d(), 2.0);
}

TEST(BridgeStats, RoundUp) {
  EXPECT_EQ(round_up(mpq_class(1, 2)), 0.5);
  const double third = round_up(mpq_class(1, 3));
  EXPECT_GE(mpq_class(third), mpq_class(1, 3));
  EXPECT_LT(mpq_class(std::nextafter(third, 0.0)), mpq_class(1, 3));
}

TEST(BridgeStats, RangeLawsMatchEnumeration) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const std::size_t len = 2 * n + 1;
    std::vector<BigCount> full(len + 1);
    std::vector<BigCount> half[2] = {std::vector<BigCount>(n + 1), std::vector<BigCount>(n + 2)};
    for_each_bridge(n, [&](const LatticeWalk& w) {
      full[static_cast<std::size_t>(range_stat(w, 0, len).range)] += 1;
      for (int a = 0; a < 2; ++a) half[a][static_cast<std::size_t>(range_stat(w, 0, n + a).range)] += 1;
    });
    EXPECT_EQ(bridge_range_counts(static_cast<std::int64_t>(n)), full) << n;
    for (int a = 0; a < 2; ++a) {
      const auto h = half_range_counts(static_cast<std::int64_t>(n), a);
      EXPECT_EQ(h.bridge, half[a]) << n << " " << a;
      std::vector<BigCount> walk(n + a + 1);
      for_each_walk(n + a, [&](const LatticeWalk& w) { walk[static_cast<std::size_t>(w.max() - w.min())] += 1; });
      EXPECT_EQ(h.walk, walk) << n << " " << a;
    }
  }
}

TEST(BridgeStats, WideHalfRangeTotals) {
  // n + a = 127 takes the big-integer path.
  for (int a = 0; a < 2; ++a) {
    const auto h = half_range_counts(126, a);
    BigCount b = 0, w = 0;
    for (const auto& c : h.bridge) b += c;
    for (const auto& c : h.walk) w += c;
    EXPECT_EQ(b, bridge_count(126));
    BigCount all = 1;
    all <<= static_cast<mp_bitcnt_t>(126 + a);
    EXPECT_EQ(w, all);
  }
}

TEST(BridgeStats, HalfRangeMoment) {
  for (double lambda : {0.3, 1.0, 2.0}) {
    EXPECT_NEAR(half_range_moment(1, lambda, 0).value, std::exp(2 * lambda / std::sqrt(2.0)), 1e-13);
  }
  EXPECT_EQ(half_range_moment(5, 0.0, 1).value, 1.0);
  EXPECT_NEAR(half_range_moment(5, 1e-9, 1).value, 1.0, 1e-8);
  // All 35 bridges of B_7.
  double brute = 0.0;
  for_each_bridge(3, [&](const LatticeWalk& w) { brute += std::exp(2.0 * range_stat(w, 0, 4).range / std::sqrt(6.0)); });
  EXPECT_NEAR(half_range_moment(3, 1.0, 1).value, brute / 35.0, 1e-13);
}

TEST(BridgeStats, CauchySchwarz) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (double lambda : {0.0, 0.5, 1.0, 3.0}) {
      const auto r = cauchy_schwarz_check(n, lambda);
      EXPECT_TRUE(r.exhaustive);
      EXPECT_TRUE(r.holds) << n << " " << lambda;
      EXPECT_EQ(BigCount(r.pathwise_checked), bridge_count(n));
    }
  }
  const auto zero = cauchy_schwarz_check(4, 0.0);
  EXPECT_DOUBLE_EQ(zero.full_moment, 1.0);
  EXPECT_DOUBLE_EQ(zero.rhs, 1.0);
  const auto big = cauchy_schwarz_check(40, 1.0, 3000);
  EXPECT_FALSE(big.exhaustive);
  EXPECT_TRUE(big.holds);
  EXPECT_EQ(big.pathwise_checked, 3000);
}

}  // namespace
}  // namespace dyck
