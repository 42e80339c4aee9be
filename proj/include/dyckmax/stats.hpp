#pragma once

// Goodness-of-fit and regression helpers for the statistical checks.

#include <cstdint>
#include <span>

namespace dyck {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
};

// Pearson's test of observed cell counts against cell probabilities.
// Throws std::invalid_argument on size mismatch or an empty cell probability.
ChiSquareResult chi_square_gof(std::span<const std::int64_t> observed, std::span<const double> probs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least squares y = intercept + slope x.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

}  // namespace dyck
