#include "dyckmax/excursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dyck {
namespace {

constexpr int kMaxTerms = 1 << 20;
constexpr unsigned kMaxDepth = 20;
// Below this point P(M <= x) is bounded through monotonicity by its value here.
constexpr double kFlatEnd = 0.1;

void check_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
}

// The quadrature cannot certify a relative error below a few ulps.
constexpr double kMinQuadratureTol = 1e-14;

void check_reachable(double tol, const char* what) {
  if (tol < kMinQuadratureTol) {
    throw std::runtime_error(std::string(what) + ": tol " + std::to_string(tol) +
                             " is below the attainable 1e-14");
  }
}

// sum_{j>=1} sign * (4 j^2 x^2 - 1) exp(-2 j^2 x^2) until the remainder is
// certified below tol. Past j with 4 j^2 x^2 >= 1 the terms are dominated by
// 4 x^2 g(j), g(j) = j^2 e^{-2 j^2 x^2}, and g(j+1)/g(j) = ((j+1)/j)^2
// e^{-2 x^2 (2j+1)} decreases in j, so once that ratio rho is below 1 the tail
// from J+1 is at most 4 x^2 g(J+1) / (1 - rho).
SeriesEval theta_sum(double x, double tol) {
  const double x2 = x * x;
  double sum = 0.0, comp = 0.0;
  for (int j = 1; j <= kMaxTerms; ++j) {
    const double jj = static_cast<double>(j) * j;
    const double term = (4.0 * jj * x2 - 1.0) * std::exp(-2.0 * jj * x2);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    const double next = static_cast<double>(j) + 1.0;
    if (4.0 * next * next * x2 < 1.0) continue;
    const double rho = ((next + 1.0) / next) * ((next + 1.0) / next) * std::exp(-2.0 * x2 * (2.0 * next + 1.0));
    if (rho >= 1.0) continue;
    const double tail = 8.0 * x2 * next * next * std::exp(-2.0 * next * next * x2) / (1.0 - rho);
    if (tail < tol) return {2.0 * (sum + comp), tail, j};
  }
  throw std::runtime_error("Chung series did not reach tol within the term cap at x = " + std::to_string(x));
}

double survival_value(double x, double tol) {
  if (x <= kFlatEnd) return 1.0;
  if (x < 1.0) return 1.0 - chung_cdf(x, tol).value;
  return chung_survival(x, tol).value;
}

// int_a^b e^{λx} P(M > x) dx with a, b on one side of the crossover.
double integrate_piece(double lambda, double a, double b, double tol, double& error) {
  double err = 0.0;
  // Spread the series truncation budget over the e^{λx} weight of the piece.
  const double weight = lambda == 0.0 ? b - a : (std::exp(lambda * b) - std::exp(lambda * a)) / lambda;
  const double series_tol = tol * 1e-3 / weight;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double x) { return std::exp(lambda * x) * survival_value(x, series_tol); }, a, b, kMaxDepth,
      tol * 1e-2, &err);
  error += err + weight * series_tol;
  return v;
}

// int_0^inf e^{λx} P(M > x) dx with the certified pieces accounted.
LimitMoment integrate_survival(double lambda, double tol) {
  LimitMoment out;
  // For x >= 1, P(M > x) <= K 8 x^2 e^{-2x^2} with K = sum_j j^2 e^{-2(j^2-1)}.
  double k_const = 0.0;
  for (int j = 1; j <= 8; ++j) k_const += static_cast<double>(j) * j * std::exp(-2.0 * (static_cast<double>(j) * j - 1.0));
  k_const *= 1.0 + 1e-12;
  // g(x) = 8 x^2 e^{-2x^2 + λx} has g'/g = -(4x - λ - 2/x) =: -mu(x); mu grows
  // in x, so the integral of g beyond x* is at most g(x*) / mu(x*).
  double cut = std::max(2.0, lambda);
  for (;; cut += 0.25) {
    const double mu = 4.0 * cut - lambda - 2.0 / cut;
    if (mu <= 0.0) continue;
    const double g = 8.0 * cut * cut * std::exp(-2.0 * cut * cut + lambda * cut);
    const double tail = k_const * g / mu;
    if (tail < tol * 1e-2) {
      out.cutoff = cut;
      out.tail_bound = tail;
      break;
    }
  }
  // [0, kFlatEnd]: P(M > x) = 1 - P(M <= x) and 0 <= P(M <= x) <= P(M <= kFlatEnd).
  const SeriesEval flat = chung_cdf(kFlatEnd, tol * 1e-3);
  const double flat_int = lambda == 0.0 ? kFlatEnd : std::expm1(lambda * kFlatEnd) / lambda;
  double error = flat_int * (std::max(flat.value, 0.0) + flat.truncation_bound) + out.tail_bound;
  double total = flat_int;
  total += integrate_piece(lambda, kFlatEnd, 1.0, tol, error);
  total += integrate_piece(lambda, 1.0, out.cutoff, tol, error);
  out.value = total;
  out.error_bound = error;
  return out;
}

}  // namespace

SeriesEval chung_cdf(double x, double tol) {
  check_tol(tol);
  if (!(x > 0.0)) return {0.0, 0.0, 0};
  if (x >= 1.0) {
    const SeriesEval s = chung_survival(x, tol);
    return {std::clamp(1.0 - s.value, 0.0, 1.0), s.truncation_bound, s.terms_used};
  }
  SeriesEval s = theta_sum(x, tol);
  s.value = std::clamp(1.0 - s.value, 0.0, 1.0);
  return s;
}

SeriesEval chung_survival(double x, double tol) {
  check_tol(tol);
  if (!(x > 0.0)) return {1.0, 0.0, 0};
  SeriesEval s = theta_sum(x, tol);
  s.value = std::clamp(s.value, 0.0, 1.0);
  return s;
}

LimitMoment limit_moment(double lambda, double tol) {
  check_tol(tol);
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("limit_moment: lambda must be >= 0");
  if (lambda == 0.0) return {1.0, 0.0, 0.0, 0.0};
  check_reachable(tol, "limit_moment");
  LimitMoment m = integrate_survival(lambda, tol / lambda);
  m.value = 1.0 + lambda * m.value;
  m.error_bound *= lambda;
  m.tail_bound *= lambda;
  if (!(m.error_bound <= tol * std::max(1.0, m.value))) {
    throw std::runtime_error("limit_moment: quadrature error " + std::to_string(m.error_bound) +
                             " exceeds tol at lambda = " + std::to_string(lambda));
  }
  return m;
}

LimitMoment limit_mean(double tol) {
  check_tol(tol);
  check_reachable(tol, "limit_mean");
  LimitMoment m = integrate_survival(0.0, tol);
  if (!(m.error_bound <= tol)) {
    throw std::runtime_error("limit_mean: quadrature error " + std::to_string(m.error_bound) + " exceeds tol");
  }
  return m;
}

}  // namespace dyck
