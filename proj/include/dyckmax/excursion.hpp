#pragma once

// Chung's law of the maximum M of the normalized Brownian excursion,
//   P(M <= x) = 1 + 2 sum_{j>=1} (1 - 4 j^2 x^2) exp(-2 j^2 x^2),
// and the exponential moments E exp(λ M).

namespace dyck {

struct SeriesEval {
  double value = 0.0;
  // Certified bound on the dropped terms (floating rounding not included).
  double truncation_bound = 0.0;
  int terms_used = 0;
};

// P(M <= x). Below x = 1 the series is summed as written; from x = 1 on it is
// 1 minus the survival series. x <= 0 gives 0. Throws if tol <= 0.
SeriesEval chung_cdf(double x, double tol);

// P(M > x) = 2 sum_{j>=1} (4 j^2 x^2 - 1) exp(-2 j^2 x^2), summed directly.
SeriesEval chung_survival(double x, double tol);

struct LimitMoment {
  double value = 0.0;
  // Quadrature error estimate plus the certified truncation terms.
  double error_bound = 0.0;
  // Integration cut-off x* and the bound on the integral beyond it.
  double cutoff = 0.0;
  double tail_bound = 0.0;
};

// E exp(λ M) = 1 + λ int_0^inf e^{λx} P(M > x) dx, by adaptive Gauss-Kronrod
// quadrature. λ = 0 gives exactly 1. Throws std::invalid_argument for λ < 0
// and std::runtime_error if tol is below 1e-14 or the quadrature misses it
// within its depth cap.
LimitMoment limit_moment(double lambda, double tol);

// E M = int_0^inf P(M > x) dx, by the same quadrature (sqrt(pi/2) exactly).
LimitMoment limit_mean(double tol);

}  // namespace dyck
