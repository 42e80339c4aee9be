#include "dyckmax/sampling.hpp"

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "dyckmax/exhaustive.hpp"
#include "dyckmax/heights.hpp"
#include "dyckmax/stats.hpp"

namespace dyck {
namespace {

TEST(Rng, ReproducibleAndSplittable) {
  RngStream a(42, 3), b(42, 3), c(42, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
  EXPECT_NE(a.substream(0).next(), a.substream(1).next());
  EXPECT_EQ(RngStream(1, 2).substream(5).next(), RngStream(1, 2).substream(5).next());
}

TEST(Rng, UniformBelowIsUnbiased) {
  RngStream rng(5, 0);
  std::vector<std::int64_t> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_below(7)];
  const std::vector<double> p(7, 1.0 / 7.0);
  EXPECT_GT(chi_square_gof(counts, p).p_value, 0.001);
  EXPECT_THROW(rng.uniform_below(0), std::invalid_argument);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Sampler, TrivialCases) {
  RngStream rng(1, 0);
  EXPECT_EQ(sample_bridge(0, rng).walk().to_string(), "D");
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sample_dyck(1, rng).walk().to_string(), "UD");
  EXPECT_EQ(sample_dyck(0, rng).walk().length(), 0u);
  RngStream r1(9, 9), r2(9, 9);
  EXPECT_EQ(sample_bridge(30, r1).walk(), sample_bridge(30, r2).walk());
}

// Chi-square of sampled words against the uniform law on `support`.
template <typename Draw>
double uniformity_p_value(const std::vector<std::string>& support, int samples, Draw draw) {
  std::map<std::string, std::int64_t> hits;
  for (const auto& s : support) hits[s] = 0;
  for (int i = 0; i < samples; ++i) {
    const auto it = hits.find(draw());
    if (it == hits.end()) return -1.0;
    ++it->second;
  }
  std::vector<std::int64_t> obs;
  for (const auto& [s, c] : hits) obs.push_back(c);
  return chi_square_gof(obs, std::vector<double>(obs.size(), 1.0 / static_cast<double>(obs.size()))).p_value;
}

TEST(Sampler, BridgesUniformOnB3) {
  RngStream rng(42, 0);
  const double p = uniformity_p_value({"UDD", "DUD", "DDU"}, 30000, [&] { return sample_bridge(1, rng).walk().to_string(); });
  EXPECT_GT(p, 0.01);
}

TEST(Sampler, DyckPathsUniform) {
  for (std::size_t n : {3u, 4u}) {
    std::vector<std::string> support;
    for_each_dyck(n, [&](const LatticeWalk& w) { support.push_back(w.to_string()); });
    RngStream rng(42, n);
    const double p = uniformity_p_value(support, 50000, [&] { return sample_dyck(n, rng).walk().to_string(); });
    EXPECT_GT(p, 0.01) << n;
  }
}

TEST(Sampler, MaxMatchesPathMaxOnSameStream) {
  RngStream a(77, 1), b(77, 1);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(i % 40);
    EXPECT_EQ(sample_dyck_max(n, a), sample_dyck(n, b).walk().max());
  }
}

TEST(Sampler, MaxHistogramMatchesExactLaw) {
  for (std::int64_t n : {3, 5, 8}) {
    const auto d = max_distribution(n);
    RngStream rng(42, static_cast<std::uint64_t>(n));
    std::vector<std::int64_t> obs(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < 40000; ++i) ++obs[static_cast<std::size_t>(sample_dyck_max(n, rng) - 1)];
    std::vector<double> p;
    for (std::int64_t h = 1; h <= n; ++h) p.push_back(d.probability(h).to_double());
    EXPECT_GT(chi_square_gof(obs, p).p_value, 0.01) << n;
  }
}

TEST(MonteCarlo, DegenerateAtOne) {
  const auto e = mc_qn(1, 1.0, 1000, RngStream(42, 0));
  EXPECT_DOUBLE_EQ(e.estimate, std::exp(1.0 / std::sqrt(2.0)));
  EXPECT_EQ(e.half_width, 0.0);
  EXPECT_EQ(e.n_samples, 1000);
  EXPECT_THROW(mc_qn(3, 1.0, 99, RngStream(42, 0)), std::invalid_argument);
}

TEST(MonteCarlo, CoversExactValue) {
  const auto e = mc_qn(3, 1.0, 100000, RngStream(42, 0));
  EXPECT_LE(std::abs(e.estimate - qn_exact(3, 1.0).value), e.half_width);
  EXPECT_DOUBLE_EQ(e.level, 0.99);
}

TEST(MonteCarlo, HalfWidthScalesAsRootN) {
  const auto a = mc_qn(20, 1.0, 40000, RngStream(42, 0));
  const auto b = mc_qn(20, 1.0, 80000, RngStream(42, 0));
  EXPECT_NEAR(b.half_width / a.half_width, 1.0 / std::sqrt(2.0), 0.2 / std::sqrt(2.0));
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  const auto one = mc_qn(30, 1.0, 20000, RngStream(5, 0), {0.99, 1});
  const auto four = mc_qn(30, 1.0, 20000, RngStream(5, 0), {0.99, 4});
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_EQ(one.half_width, four.half_width);
  const auto c1 = empirical_max_cdf(30, 10000, RngStream(5, 0), 1);
  const auto c4 = empirical_max_cdf(30, 10000, RngStream(5, 0), 3);
  EXPECT_EQ(c1.sorted(), c4.sorted());
}

TEST(EmpiricalCdf, StepsAtOneAndThree) {
  const auto one = empirical_max_cdf(1, 100, RngStream(1, 0));
  EXPECT_EQ(one(1.0 / std::sqrt(2.0) - 1e-12), 0.0);
  EXPECT_EQ(one(1.0 / std::sqrt(2.0)), 1.0);
  EXPECT_EQ(one.sorted().front(), 1.0 / std::sqrt(2.0));
  const auto three = empirical_max_cdf(3, 50000, RngStream(2, 0));
  const double r = std::sqrt(6.0);
  EXPECT_NEAR(three(1 / r), 0.2, 0.01);
  EXPECT_NEAR(three(2 / r) - three(1 / r), 0.6, 0.01);
  EXPECT_NEAR(1.0 - three(2 / r), 0.2, 0.01);
  EXPECT_EQ(three(3 / r), 1.0);
}

TEST(EmpiricalCdf, KsDistance) {
  const EmpiricalCdf f({1.0, 2.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(f.ks_distance_discrete({1.0, 2.0, 3.0}, {0.25, 0.75, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(f.ks_distance_discrete({1.0, 2.0, 3.0}, {0.5, 0.75, 1.0}), 0.25);
  // A model that puts everything at 0.5 differs by 1 just before 1.0.
  EXPECT_DOUBLE_EQ(f.ks_distance_discrete({0.5}, {1.0}), 1.0);
  EXPECT_THROW(f.ks_distance_discrete({1.0}, {}), std::invalid_argument);
}

TEST(EmpiricalCdf, DistanceShrinksWithSamples) {
  const std::int64_t n = 40;
  const auto exact = max_distribution(n);
  std::vector<double> pts, cdf;
  for (std::int64_t h = 1; h <= n; ++h) {
    pts.push_back(h / std::sqrt(2.0 * n));
    cdf.push_back(exact.cdf(h).to_double());
  }
  const double small = empirical_max_cdf(n, 2000, RngStream(3, 0)).ks_distance_discrete(pts, cdf);
  const double large = empirical_max_cdf(n, 200000, RngStream(3, 0)).ks_distance_discrete(pts, cdf);
  EXPECT_LT(large, small);
  EXPECT_LT(large, 0.01);
}

}  // namespace
}  // namespace dyck
