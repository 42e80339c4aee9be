#include "dyckmax/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "dyckmax/bridge_stats.hpp"
#include "dyckmax/numeric.hpp"

namespace dyck {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Relative slack for comparing two independently rounded sums.
constexpr double kLinkSlack = 1e-12;

// #{S in W_m : max S >= x} for x = 0..m+1, by reflection.
std::vector<BigCount> walk_max_tail_counts(std::int64_t m) {
  std::vector<BigCount> at(static_cast<std::size_t>(m + 2));
  // above[x] = #{S_m > x}
  BigCount above = 0;
  for (std::int64_t x = m + 1; x >= 0; --x) {
    const BigCount here = walk_count(m, x);
    at[static_cast<std::size_t>(x)] = 2 * above + here;
    above += here;
  }
  return at;
}

std::vector<double> to_probabilities(const std::vector<BigCount>& counts) {
  BigCount total = 0;
  for (const auto& c : counts) total += c;
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) p[i] = counts[i] == 0 ? 0.0 : ratio_to_double(counts[i], total);
  return p;
}

std::vector<double> walk_max_law(std::int64_t m) {
  const auto tail = walk_max_tail_counts(m);
  std::vector<BigCount> exact(static_cast<std::size_t>(m + 1));
  for (std::int64_t h = 0; h <= m; ++h) {
    exact[static_cast<std::size_t>(h)] = tail[static_cast<std::size_t>(h)] - tail[static_cast<std::size_t>(h + 1)];
  }
  return to_probabilities(exact);
}

double exp_moment(const std::vector<double>& p, double coef) {
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0.0) s.add(p[i] * std::exp(coef * static_cast<double>(i)));
  }
  return s.value();
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be a finite value > 0");
}

struct MajorantSup {
  double value = 0.0;
  std::vector<std::pair<std::int64_t, double>> trend;
};

// Largest majorant value over the grid, powers of two up to 2^30 and the
// limit, for θ = 4λ/sqrt(2n) at walk lengths n and n+1.
MajorantSup majorant_sup(double lambda, const std::vector<std::int64_t>& grid) {
  MajorantSup out;
  auto visit = [&](std::int64_t n, bool record) {
    const double theta = 4.0 * lambda / std::sqrt(2.0 * static_cast<double>(n));
    const double v = std::max(walk_max_majorant(n, theta), walk_max_majorant(n + 1, theta));
    out.value = std::max(out.value, v);
    if (record) out.trend.emplace_back(n, v);
  };
  for (const auto n : grid) visit(n, false);
  for (int k = 0; k <= 30; ++k) visit(std::int64_t{1} << k, true);
  const double lim = walk_max_majorant_limit(4.0 * lambda / std::sqrt(2.0));
  out.trend.emplace_back(0, lim);
  out.value = std::max(out.value, lim);
  return out;
}

double assemble_bound(double lambda, const double c0[2], double majorant) {
  return std::exp(lambda / std::sqrt(2.0)) * std::sqrt(c0[0] * c0[1]) * majorant;
}

}  // namespace

ReflectionIdentity reflection_identity(std::int64_t n, std::int64_t x) {
  if (n < 1) throw std::invalid_argument("reflection_identity: n must be >= 1");
  ReflectionIdentity r;
  r.n = n;
  r.x = x;
  BigCount all = 1;
  all <<= static_cast<mp_bitcnt_t>(n);
  if (x <= 0) {
    r.degenerate = true;
    r.lhs = ExactProb(all, all);
    r.rhs = r.lhs;
    return r;
  }
  const auto law = walk_max_counts(n);
  BigCount lhs = 0;
  for (std::int64_t h = x; h <= n; ++h) lhs += law[static_cast<std::size_t>(h)];
  BigCount above = 0;
  for (std::int64_t j = x + 1; j <= n; ++j) above += walk_count(n, j);
  r.lhs = ExactProb(lhs, all);
  r.rhs = ExactProb(2 * above + walk_count(n, x), all);
  return r;
}

std::vector<BigCount> walk_max_counts(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("walk_max_counts: n must be >= 0");
  const auto dim = static_cast<std::size_t>(n + 1);
  // cell[top * dim + gap]: walks with running max `top` sitting `gap` below it.
  std::vector<BigCount> cur(dim * dim), next(dim * dim);
  cur[0] = 1;
  for (std::int64_t t = 0; t < n; ++t) {
    for (auto& c : next) c = 0;
    for (std::size_t top = 0; top <= static_cast<std::size_t>(t); ++top) {
      for (std::size_t gap = 0; top + gap <= static_cast<std::size_t>(t); ++gap) {
        const BigCount& c = cur[top * dim + gap];
        if (c == 0) continue;
        if (gap == 0) {
          next[(top + 1) * dim] += c;
        } else {
          next[top * dim + gap - 1] += c;
        }
        next[top * dim + gap + 1] += c;
      }
    }
    std::swap(cur, next);
  }
  std::vector<BigCount> out(dim);
  for (std::size_t top = 0; top < dim; ++top) {
    for (std::size_t gap = 0; top + gap < dim; ++gap) out[top] += cur[top * dim + gap];
  }
  return out;
}

ExactProb walk_endpoint_tail(std::int64_t n, std::int64_t x) {
  if (n < 0) throw std::invalid_argument("walk_endpoint_tail: n must be >= 0");
  BigCount all = 1;
  all <<= static_cast<mp_bitcnt_t>(n);
  BigCount tail = 0;
  for (std::int64_t j = std::max(x, -n); j <= n; ++j) tail += walk_count(n, j);
  return ExactProb(tail, all);
}

double hoeffding_tail(std::int64_t n, double x) {
  if (n < 1) throw std::invalid_argument("hoeffding_tail: n must be >= 1");
  if (!(x >= 0.0)) throw std::invalid_argument("hoeffding_tail: x must be >= 0");
  return std::exp(-x * x / (2.0 * static_cast<double>(n)));
}

double walk_max_majorant(std::int64_t m, double theta) {
  if (m < 1) throw std::invalid_argument("walk_max_majorant: m must be >= 1");
  if (!(theta >= 0.0)) throw std::invalid_argument("walk_max_majorant: theta must be >= 0");
  if (theta == 0.0) return 1.0;
  const double two_m = 2.0 * static_cast<double>(m);
  const double front = 2.0 * -std::expm1(-theta);
  CompensatedSum sum;
  sum.add(1.0);
  for (std::int64_t x = 1;; ++x) {
    const auto xd = static_cast<double>(x);
    const double term = front * std::exp(theta * xd - xd * xd / two_m);
    sum.add(term);
    // term_{y+1} / term_y = e^{θ - (2y+1)/(2m)} decreases in y.
    const double ratio = std::exp(theta - (2.0 * xd + 1.0) / two_m);
    if (ratio < 1.0) {
      const double rest = term * ratio / (1.0 - ratio);
      if (rest < 1e-15 * sum.value()) {
        sum.add(rest);
        return sum.value();
      }
    }
  }
}

double walk_max_majorant_limit(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("walk_max_majorant_limit: c must be >= 0");
  const boost::math::normal_distribution<double> z;
  return 1.0 + 2.0 * c * std::sqrt(2.0 * M_PI) * std::exp(c * c / 2.0) * boost::math::cdf(z, c);
}

HighPrecisionReal walk_max_moment(std::int64_t m, double theta) {
  if (m < 0) throw std::invalid_argument("walk_max_moment: m must be >= 0");
  return {exp_moment(walk_max_law(m), theta), (static_cast<double>(m) + 8.0) * kEps};
}

WalkMaxMoment walk_max_exp_moment(std::int64_t n, double lambda) {
  if (n < 1) throw std::invalid_argument("walk_max_exp_moment: n must be >= 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("walk_max_exp_moment: lambda must be >= 0");
  const double theta = 4.0 * lambda / std::sqrt(2.0 * static_cast<double>(n));
  WalkMaxMoment out;
  out.exact = walk_max_moment(n, theta);
  out.majorant = walk_max_majorant(n, theta);
  out.dominated = out.exact.value * (1.0 - out.exact.rel_err) <= out.majorant;
  return out;
}

std::vector<std::int64_t> default_certificate_grid() {
  std::vector<std::int64_t> g;
  for (std::int64_t n = 1; n <= 50; ++n) g.push_back(n);
  for (std::int64_t n = 64; n <= 1024; n *= 2) g.push_back(n);
  return g;
}

CertificateInputs precompute_certificate_inputs(std::vector<std::int64_t> n_grid, std::int64_t c0_scan_n_max) {
  std::sort(n_grid.begin(), n_grid.end());
  n_grid.erase(std::unique(n_grid.begin(), n_grid.end()), n_grid.end());
  if (n_grid.empty() || n_grid.front() < 1) throw std::invalid_argument("certificate grid must be nonempty with n >= 1");
  CertificateInputs in;
  in.n_grid = n_grid;
  std::int64_t h_max = 0;
  for (const auto n : n_grid) h_max = std::max(h_max, qn_height_cutoff(n));
  const auto table = height_probability_table(n_grid.back(), h_max);
  const std::size_t count = n_grid.size();
  in.dyck_max.resize(count);
  in.dyck_max_rel_err.resize(count);
  in.bridge_range.resize(count);
  for (int a = 0; a < 2; ++a) {
    in.half_bridge[a].resize(count);
    in.half_walk[a].resize(count);
    in.walk_max[a].resize(count);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t n = n_grid[i];
    const auto& row = table[static_cast<std::size_t>(n)];
    in.dyck_max[i].assign(row.begin(), row.begin() + qn_height_cutoff(n) + 1);
    in.dyck_max_rel_err[i] = (static_cast<double>(n) + 8.0) * kEps;
    in.bridge_range[i] = to_probabilities(bridge_range_counts(n));
    for (int a = 0; a < 2; ++a) {
      in.walk_max[a][i] = walk_max_law(n + a);
      if (n <= kBridgeLinkCap) {
        const auto half = half_range_counts(n, a);
        in.half_bridge[a][i] = to_probabilities(half.bridge);
        in.half_walk[a][i] = to_probabilities(half.walk);
      }
    }
  }
  const C0Scan scan = c0_scan(c0_scan_n_max);
  in.c0_scan_n_max = c0_scan_n_max;
  in.c0[0] = scan.certified_horizon_n;
  in.c0[1] = scan.certified_horizon_n_plus_1;
  return in;
}

BoundCertificate uniform_bound_certificate(double lambda, const CertificateInputs& in, double epsilon) {
  check_lambda(lambda);
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  BoundCertificate cert;
  cert.lambda = lambda;
  cert.epsilon = epsilon;
  cert.n_grid = in.n_grid;
  cert.c0_variant = "sup_k 2^n N(n+1,k+1)/N(2n+1,-1) and sup_k 2^(n+1) N(n,k+1)/N(2n+1,-1)";
  cert.c0_scan_n_max = in.c0_scan_n_max;
  cert.c0[0] = in.c0[0];
  cert.c0[1] = in.c0[1];
  const MajorantSup sup = majorant_sup(lambda, in.n_grid);
  cert.majorant_sup = sup.value;
  cert.majorant_trend = sup.trend;
  cert.bound = assemble_bound(lambda, in.c0, sup.value);
  cert.bound_epsilon = epsilon == 0.0 ? cert.bound
                                      : assemble_bound(lambda + epsilon, in.c0, majorant_sup(lambda + epsilon, in.n_grid).value);

  auto link = [&](std::string name, std::int64_t n, double left, double right) {
    if (cert.passed() && !(left <= right * (1.0 + kLinkSlack))) {
      cert.failure = "link " + name + " fails at n = " + std::to_string(n);
    }
    cert.links.push_back({std::move(name), n, left, right});
  };

  for (std::size_t i = 0; i < in.n_grid.size(); ++i) {
    const std::int64_t n = in.n_grid[i];
    const double c = lambda / std::sqrt(2.0 * static_cast<double>(n));
    const std::int64_t top = static_cast<std::int64_t>(in.dyck_max[i].size()) - 1;
    const double qn = exp_moment(in.dyck_max[i], c);
    const double tail = top < n ? qn_tail_bound(n, top + 1, c) : 0.0;
    const double qn_upper = qn * (1.0 + in.dyck_max_rel_err[i]) + tail;
    const double eb = exp_moment(in.bridge_range[i], c);
    link("dyck_vs_bridge", n, qn_upper, std::exp(c) * eb);
    double maj[2];
    if (!in.half_bridge[0][i].empty()) {
      double h[2];
      for (int a = 0; a < 2; ++a) h[a] = exp_moment(in.half_bridge[a][i], 2.0 * c);
      link("cauchy_schwarz", n, eb, std::sqrt(h[0] * h[1]));
      for (int a = 0; a < 2; ++a) {
        const double w = exp_moment(in.half_walk[a][i], 2.0 * c);
        const std::string suffix = a == 0 ? "_0" : "_1";
        link("bridge_vs_walk" + suffix, n, h[a], in.c0[a] * w);
        link("range_vs_max" + suffix, n, w, exp_moment(in.walk_max[a][i], 4.0 * c));
      }
    }
    for (int a = 0; a < 2; ++a) {
      maj[a] = walk_max_majorant(n + a, 4.0 * c);
      link(a == 0 ? "majorant_0" : "majorant_1", n, exp_moment(in.walk_max[a][i], 4.0 * c), maj[a]);
    }
    link("assembly", n, std::exp(c) * std::sqrt(in.c0[0] * maj[0] * in.c0[1] * maj[1]), cert.bound);
    link("final", n, qn_upper, cert.bound);
    cert.worst_ratio = std::max(cert.worst_ratio, qn_upper / cert.bound);
  }
  return cert;
}

BoundCertificate uniform_bound_certificate(double lambda, const std::vector<std::int64_t>& n_grid, double epsilon) {
  return uniform_bound_certificate(lambda, precompute_certificate_inputs(n_grid), epsilon);
}

EquivalenceCheck equivalence_check(std::int64_t n, double lambda) {
  if (n < 1) throw std::invalid_argument("equivalence_check: n must be >= 1");
  check_lambda(lambda);
  EquivalenceCheck e;
  const double c = lambda / std::sqrt(2.0 * static_cast<double>(n));
  e.dyck = qn_exact(n, lambda).value;
  e.bridge = range_exp_moment(bridge_range_counts(n), c).value;
  e.factor = std::exp(c);
  e.holds = e.dyck / e.factor <= e.bridge * (1.0 + kLinkSlack) && e.bridge <= e.dyck * e.factor * (1.0 + kLinkSlack);
  return e;
}

}  // namespace dyck
