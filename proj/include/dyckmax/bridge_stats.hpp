#pragma once

// Exact laws of bridge statistics: the position at the midpoint, the range of
// the whole bridge and of its first half, and the comparison constant between
// bridge and free-walk probabilities of prefix events.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dyckmax/counting.hpp"
#include "dyckmax/heights.hpp"

namespace dyck {

// k -> #{S in B_{2n+1} : S_n = k} = N(n, k) N(n+1, k+1). Only reachable k
// (parity of n, |k| <= n) appear.
std::map<std::int64_t, BigCount> bridge_midpoint_counts(std::int64_t n);

// P(S_n = k | S_{2n+1} = -1) under the uniform walk measure.
ExactProb bridge_midpoint_probability(std::int64_t n, std::int64_t k);

struct C0Row {
  std::int64_t n = 0;
  // sup_k 2^n N(n+1, k+1) / N(2n+1, -1): density of S_n under the bridge
  // measure relative to the free walk, the constant for events decided by
  // the first n steps.
  mpq_class horizon_n;
  // sup_k 2^{n+1} N(n, k+1) / N(2n+1, -1): the same for the first n+1 steps.
  mpq_class horizon_n_plus_1;
  // 2^n C(n, floor(n/2)) / C(2n, n), the closed form as it is usually
  // displayed; it equals horizon_n at n-1.
  mpq_class displayed;
};

struct C0Scan {
  std::vector<C0Row> rows;
  mpq_class sup_horizon_n;
  mpq_class sup_horizon_n_plus_1;
  mpq_class sup_displayed;
  std::int64_t argsup_horizon_n = 0;
  std::int64_t argsup_horizon_n_plus_1 = 0;
  // All three sequences tend to sqrt(2). The horizon-n sequence increases
  // towards it along odd and along even n, so its supremum over all n is the
  // limit; certified constants are max(scanned sup, sqrt 2) rounded up.
  double limit = 0.0;
  double certified_horizon_n = 0.0;
  double certified_horizon_n_plus_1 = 0.0;
  // |row(n_max) - row(n_max/2)| of horizon_n, a flattening indicator.
  double tail_spread = 0.0;
};

C0Scan c0_scan(std::int64_t n_max);

// Smallest double >= q.
double round_up(const mpq_class& q);

// counts[r] = #{S in B_{2n+1} : max S - min S = r} for r = 0..2n+1, using the
// union-of-strips identity over windows of width r and r-1.
std::vector<BigCount> bridge_range_counts(std::int64_t n);

struct HalfRangeCounts {
  std::int64_t n = 0;
  int a = 0;
  // bridge[r] = #{S in B_{2n+1} : Y_[0,n+a] = r}.
  std::vector<BigCount> bridge;
  // walk[r] = #{S in W_{n+a} : Y_[0,n+a] = r}.
  std::vector<BigCount> walk;
};

// Dynamic programme over (value, running min, running max) for the first n+a
// steps; the bridge law then weights each end value v by the N(n+1-a, -1-v)
// ways to finish. a must be 0 or 1.
HalfRangeCounts half_range_counts(std::int64_t n, int a);

// sum_r counts[r] e^{coef r} / sum_r counts[r].
HighPrecisionReal range_exp_moment(const std::vector<BigCount>& counts, double coef);

// E_b[exp(2 λ Y_[0,n+a] / sqrt(2n))] for a uniform bridge of 2n+1 steps.
HighPrecisionReal half_range_moment(std::int64_t n, double lambda, int a);

struct CauchySchwarzReport {
  std::int64_t n = 0;
  double lambda = 0.0;
  // Bridges checked for Y_[0,2n+1] <= Y_[0,n] + Y_[n,2n+1] (all of B_{2n+1}
  // when exhaustive).
  std::int64_t pathwise_checked = 0;
  bool pathwise_holds = true;
  bool exhaustive = false;
  double full_moment = 0.0;   // E_b[e^{λ Y / sqrt(2n)}]
  double first_half = 0.0;    // E_b[e^{2λ Y_[0,n] / sqrt(2n)}]
  double second_half = 0.0;   // E_b[e^{2λ Y_[n,2n+1] / sqrt(2n)}]
  double rhs = 0.0;           // sqrt(first_half * second_half)
  bool holds = false;
};

// Exhaustive over B_{2n+1} for n <= 10; beyond that the moments come from the
// exact range laws and the pathwise inequality is checked on `samples`
// uniform bridges drawn with `seed`.
CauchySchwarzReport cauchy_schwarz_check(std::int64_t n, double lambda, std::int64_t samples = 2000,
                                         std::uint64_t seed = 42);

}  // namespace dyck
