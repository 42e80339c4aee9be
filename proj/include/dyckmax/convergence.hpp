#pragma once

// Q_n(λ) against its limit E exp(λ M) along a grid of n.

#include <cstdint>
#include <vector>

#include "dyckmax/excursion.hpp"
#include "dyckmax/heights.hpp"
#include "dyckmax/stats.hpp"

namespace dyck {

struct ConvergenceRow {
  std::int64_t n = 0;
  HighPrecisionReal qn;
  double gap = 0.0;  // |Q_n - L|
};

struct ConvergenceReport {
  double lambda = 0.0;
  LimitMoment limit;
  std::vector<ConvergenceRow> rows;  // ascending n
  // Places where the gap grows from one grid point to the next.
  int inversions = 0;
  double largest_inversion = 0.0;
  // At most one inversion, smaller than 1e-3.
  bool gaps_monotone = false;
  // gap regressed on n^{-1/2}.
  LinearFit fit;
};

ConvergenceReport theorem1_convergence(double lambda, std::vector<std::int64_t> ns, double tol,
                                       QnMode mode = QnMode::kExactRational);

}  // namespace dyck
