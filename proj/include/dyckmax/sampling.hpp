#pragma once

// Exact uniform samplers for bridges and Dyck paths, and Monte Carlo
// estimators built on them.

#include <cstdint>
#include <random>
#include <vector>

#include "dyckmax/walk.hpp"

namespace dyck {

// A reproducible random stream identified by (seed, stream id). Copies
// continue the same sequence independently.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound), bound > 0, without modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // A stream derived from this one's (seed, stream) and `index`; used to hand
  // independent chunks to workers.
  RngStream substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// Uniform over the C(2n+1, n) arrangements of n up and n+1 down steps,
// drawn by sequential selection (each step is up with probability
// ups_left / steps_left).
BernoulliBridge sample_bridge(std::int64_t n, RngStream& rng);

// Uniform on D_{2n}: a uniform bridge, rotated to its pointed Dyck
// representative, minus the final down step. O(n).
DyckPath sample_dyck(std::int64_t n, RngStream& rng);

// max S of a uniform Dyck path of 2n steps without materialising the path.
int sample_dyck_max(std::int64_t n, RngStream& rng);

struct ConfidenceEstimate {
  double estimate = 0.0;
  double half_width = 0.0;
  double level = 0.0;
  std::int64_t n_samples = 0;
};

// Normal-approximation interval from a sample mean and variance.
ConfidenceEstimate normal_interval(double mean, double variance, std::int64_t count, double level);

struct McOptions {
  double level = 0.99;
  // Workers; the result does not depend on this.
  unsigned threads = 1;
};

// Samples are drawn in fixed-size chunks, chunk i from rng.substream(i), and
// merged in chunk order with compensated sums.
inline constexpr std::int64_t kMcChunk = 4096;

// Mean of exp(λ max S / sqrt(2n)) over uniform Dyck samples.
ConfidenceEstimate mc_qn(std::int64_t n, double lambda, std::int64_t n_samples, const RngStream& rng,
                         McOptions options = {});

// Mean of max S / sqrt(2n) over uniform Dyck samples.
ConfidenceEstimate mc_scaled_max_mean(std::int64_t n, std::int64_t n_samples, const RngStream& rng,
                                      McOptions options = {});

// Right-continuous empirical CDF of a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);
  double operator()(double y) const;
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

  // sup_y |F_emp(y) - F(y)| against a distribution with atoms at `points`
  // (ascending) whose CDF takes the value cdf[i] on [points[i], points[i+1]).
  double ks_distance_discrete(const std::vector<double>& points, const std::vector<double>& cdf) const;

 private:
  std::vector<double> sorted_;
};

// Empirical CDF of max S / sqrt(2n) over n_samples uniform Dyck paths.
EmpiricalCdf empirical_max_cdf(std::int64_t n, std::int64_t n_samples, const RngStream& rng,
                               unsigned threads = 1);

}  // namespace dyck
