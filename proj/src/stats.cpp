#include "dyckmax/stats.hpp"

#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace dyck {

ChiSquareResult chi_square_gof(std::span<const std::int64_t> observed, std::span<const double> probs) {
  if (observed.size() != probs.size() || observed.size() < 2) {
    throw std::invalid_argument("chi_square_gof: need matching observed/probability vectors of size >= 2");
  }
  std::int64_t total = 0;
  for (const auto o : observed) total += o;
  ChiSquareResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(probs[i] > 0.0)) throw std::invalid_argument("chi_square_gof: cell probability must be > 0");
    const double e = probs[i] * static_cast<double>(total);
    const double d = static_cast<double>(observed[i]) - e;
    r.statistic += d * d / e;
  }
  r.dof = static_cast<int>(observed.size()) - 1;
  const boost::math::chi_squared_distribution<double> chi(r.dof);
  r.p_value = boost::math::cdf(boost::math::complement(chi, r.statistic));
  return r;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_linear: need >= 2 points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_linear: x values are all equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace dyck
