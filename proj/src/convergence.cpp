#include "dyckmax/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyck {

ConvergenceReport theorem1_convergence(double lambda, std::vector<std::int64_t> ns, double tol, QnMode mode) {
  if (ns.size() < 2) throw std::invalid_argument("theorem1_convergence: need at least two n values");
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  ConvergenceReport r;
  r.lambda = lambda;
  r.limit = limit_moment(lambda, tol);
  const auto qs = mode == QnMode::kExactRational ? qn_exact_many(ns, lambda) : qn_log_space_many(ns, lambda);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    ConvergenceRow row{ns[i], qs[i], std::abs(qs[i].value - r.limit.value)};
    if (!r.rows.empty() && row.gap > r.rows.back().gap) {
      ++r.inversions;
      r.largest_inversion = std::max(r.largest_inversion, row.gap - r.rows.back().gap);
    }
    x.push_back(1.0 / std::sqrt(static_cast<double>(ns[i])));
    y.push_back(row.gap);
    r.rows.push_back(row);
  }
  r.gaps_monotone = r.inversions == 0 || (r.inversions == 1 && r.largest_inversion < 1e-3);
  r.fit = fit_linear(x, y);
  return r;
}

}  // namespace dyck
