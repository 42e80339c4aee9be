#include "dyckmax/bounds.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "dyckmax/exhaustive.hpp"

namespace dyck {
namespace {

TEST(Reflection, SmallExamples) {
  const auto a = reflection_identity(2, 1);
  EXPECT_EQ(a.lhs.to_string(), "1/2");
  EXPECT_TRUE(a.holds());
  const auto b = reflection_identity(2, 2);
  EXPECT_EQ(b.lhs.to_string(), "1/4");
  EXPECT_TRUE(b.holds());
  const auto c = reflection_identity(3, 0);
  EXPECT_TRUE(c.degenerate);
  EXPECT_EQ(c.lhs.to_string(), "1");
}

TEST(Reflection, ExactForAllSmallN) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t x = -1; x <= n + 1; ++x) {
      const auto r = reflection_identity(n, x);
      EXPECT_TRUE(r.holds()) << n << " " << x << ": " << r.lhs.to_string() << " vs " << r.rhs.to_string();
    }
  }
}

TEST(WalkMax, CountsMatchBruteForce) {
  for (std::int64_t n = 0; n <= 14; ++n) {
    std::vector<BigCount> brute(static_cast<std::size_t>(n + 1));
    for_each_walk(static_cast<std::size_t>(n), [&](const LatticeWalk& w) { ++brute[static_cast<std::size_t>(w.max())]; });
    EXPECT_EQ(walk_max_counts(n), brute) << n;
  }
}

TEST(Hoeffding, Examples) {
  EXPECT_EQ(hoeffding_tail(5, 0.0), 1.0);
  EXPECT_NEAR(hoeffding_tail(4, 4.0), std::exp(-2.0), 1e-15);
  EXPECT_GE(hoeffding_tail(4, 4.0), walk_endpoint_tail(4, 4).to_double());
  EXPECT_EQ(walk_endpoint_tail(4, 4).to_string(), "1/16");
}

TEST(Hoeffding, DominatesExactTailForAllSmallN) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t x = 0; x <= n + 1; ++x) {
      const mpq_class bound(hoeffding_tail(n, static_cast<double>(x)));
      EXPECT_LE(walk_endpoint_tail(n, x).value(), bound) << n << " " << x;
    }
  }
}

TEST(WalkMaxMoment, OneStep) {
  for (double lambda : {0.1, 1.0, 3.0}) {
    const auto m = walk_max_exp_moment(1, lambda);
    EXPECT_NEAR(m.exact.value, (std::exp(4.0 * lambda / std::sqrt(2.0)) + 1.0) / 2.0, 1e-12 * m.exact.value);
    EXPECT_TRUE(m.dominated);
  }
  EXPECT_NEAR(walk_max_exp_moment(10, 1e-9).exact.value, 1.0, 1e-7);
}

TEST(WalkMaxMoment, DominatedByMajorant) {
  for (std::int64_t n : {2, 5, 17, 64, 200}) {
    for (double lambda : {0.25, 1.0, 4.0}) {
      const auto m = walk_max_exp_moment(n, lambda);
      EXPECT_TRUE(m.dominated) << n << " " << lambda;
      EXPECT_LE(m.exact.value, m.majorant);
    }
  }
}

TEST(Majorant, BoundedByLimitAndFlattening) {
  const double c = 4.0 / std::sqrt(2.0);
  const double limit = walk_max_majorant_limit(c);
  std::vector<double> values;
  for (std::int64_t m : {4, 16, 64, 256, 1024, 1 << 14, 1 << 20}) {
    const double v = walk_max_majorant(m, c / std::sqrt(static_cast<double>(m)));
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_LE(v, limit * (1.0 + 1e-9)) << m;
    values.push_back(v);
  }
  // Increments shrink as m grows by factors of 4.
  for (std::size_t i = 2; i + 1 < values.size() - 1; ++i) {
    EXPECT_LT(values[i + 1] - values[i], values[i] - values[i - 1]);
  }
  EXPECT_NEAR(values.back() / limit, 1.0, 0.01);
}

TEST(Certificate, PassesOnSmallGrid) {
  std::vector<std::int64_t> grid;
  for (std::int64_t n = 1; n <= 50; ++n) grid.push_back(n);
  const auto cert = uniform_bound_certificate(1.0, grid);
  EXPECT_TRUE(cert.passed()) << cert.failure;
  EXPECT_TRUE(std::isfinite(cert.bound));
  EXPECT_LE(cert.worst_ratio, 1.0);
  EXPECT_GE(cert.bound_epsilon, cert.bound);
  for (const auto& link : cert.links) EXPECT_GE(link.margin(), -1e-12 * std::abs(link.right)) << link.name << " " << link.n;
  ASSERT_FALSE(cert.majorant_trend.empty());
  EXPECT_EQ(cert.majorant_trend.back().first, 0);
}

TEST(Certificate, SmallLambda) {
  const std::vector<std::int64_t> grid{1, 2, 3, 5, 8, 13, 21};
  const auto cert = uniform_bound_certificate(0.01, grid);
  ASSERT_TRUE(cert.passed()) << cert.failure;
  for (const auto& link : cert.links) {
    if (link.name == "final") {
      EXPECT_GE(link.left, 1.0);
      EXPECT_LE(link.left, cert.bound);
    }
  }
  EXPECT_LT(cert.bound, 2.0);
}

TEST(Certificate, BoundIncreasesWithLambda) {
  const auto inputs = precompute_certificate_inputs({1, 4, 16, 64});
  double prev = 0.0;
  for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const auto cert = uniform_bound_certificate(lambda, inputs);
    EXPECT_TRUE(cert.passed()) << cert.failure;
    EXPECT_GT(cert.bound, prev);
    prev = cert.bound;
  }
}

TEST(Certificate, LinkNamesCoverTheChain) {
  const auto cert = uniform_bound_certificate(0.5, std::vector<std::int64_t>{3, 100});
  std::set<std::string> at3, at100;
  for (const auto& link : cert.links) (link.n == 3 ? at3 : at100).insert(link.name);
  for (const char* name : {"dyck_vs_bridge", "cauchy_schwarz", "bridge_vs_walk_0", "bridge_vs_walk_1",
                           "range_vs_max_0", "range_vs_max_1", "majorant_0", "majorant_1", "assembly", "final"}) {
    EXPECT_TRUE(at3.count(name)) << name;
  }
  EXPECT_FALSE(at100.count("cauchy_schwarz"));
  EXPECT_TRUE(at100.count("final"));
}

TEST(Equivalence, TwoSidedFactorForSmallN) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (double lambda : {0.25, 1.0, 4.0}) {
      const auto e = equivalence_check(n, lambda);
      EXPECT_TRUE(e.holds) << n << " " << lambda;
      EXPECT_DOUBLE_EQ(e.factor, std::exp(lambda / std::sqrt(2.0 * static_cast<double>(n))));
    }
  }
}

}  // namespace
}  // namespace dyck
