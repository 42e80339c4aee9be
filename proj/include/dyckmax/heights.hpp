#pragma once

// Exact law of max S under the uniform measure on D_{2n}, and the
// exponential moment Q_n(λ) = E[exp(λ max S / sqrt(2n))].

#include <cstdint>
#include <vector>

#include "dyckmax/counting.hpp"

namespace dyck {

// A value with a relative error budget: |true - value| <= rel_err * |value|.
struct HighPrecisionReal {
  double value = 0.0;
  double rel_err = 0.0;
};

struct HeightDistribution {
  std::int64_t n = 0;
  // counts[h] = #{S in D_{2n} : max S = h}, h = 0..n.
  std::vector<BigCount> counts;

  BigCount total() const;
  ExactProb probability(std::int64_t h) const;
  // P(max S <= h) as an exact rational.
  ExactProb cdf(std::int64_t h) const;
};

// Entry h (0 <= h <= H) = #{Dyck paths of 2n steps with max <= h}, by the
// transfer recursion on heights {0..h}.
std::vector<BigCount> bounded_height_counts(std::int64_t n, std::int64_t max_h);

// table[n][h] for 0 <= n <= n_max, 0 <= h <= max_h. One transfer run per h
// serves every n at once (the count for n is read off at time 2n).
std::vector<std::vector<BigCount>> bounded_height_table(std::int64_t n_max, std::int64_t max_h);

// Closed form by reflection images; used as an independent cross-check.
BigCount bounded_height_count_reflection(std::int64_t n, std::int64_t h);

HeightDistribution max_distribution(std::int64_t n);

// Floating route. table[n][h] = P(max S = h) under the uniform measure on
// D_{2n}, for n <= n_max and h <= max_h. Each height runs a two-layer transfer
// recursion on {0..h} (paths that have not yet touched h, and paths that have),
// so every entry is a sum of positive terms and keeps its relative accuracy
// even deep in the upper tail. Counts are carried in double precision with
// exact power-of-two rescaling; the recursion runs on the vector kernels.
std::vector<std::vector<double>> height_probability_table(std::int64_t n_max, std::int64_t max_h);

// P(max S <= h) for h = 0..max_h, accumulated from height_probability_table.
std::vector<double> bounded_height_fractions(std::int64_t n, std::int64_t max_h);

enum class QnMode { kExactRational, kLogSpace };

// Heights summed in full up to this n; beyond it the sum stops at
// ceil(8 sqrt(2n)) and the reflection bound on the rest enters the budget.
inline constexpr std::int64_t kFullHeightSumLimit = 300;

std::int64_t qn_height_cutoff(std::int64_t n);

// Upper bound on sum_{h >= from} P(max S >= h) e^{c h}, from
// #{max >= h} <= C(2n, n-h).
double qn_tail_bound(std::int64_t n, std::int64_t from, double c);

// Q_n(λ). λ = 0 returns exactly 1; λ < 0 or n < 1 throws std::invalid_argument.
HighPrecisionReal qn_exact(std::int64_t n, double lambda, QnMode mode = QnMode::kExactRational);

// Q_n(λ) in exact-rational mode for every n in `ns`, from one shared table.
std::vector<HighPrecisionReal> qn_exact_many(const std::vector<std::int64_t>& ns, double lambda);

// Q_n(λ) for every n in `ns` sharing one transfer run per height.
std::vector<HighPrecisionReal> qn_log_space_many(const std::vector<std::int64_t>& ns,
                                                 double lambda);

}  // namespace dyck
