#include "dyckmax/heights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dyckmax/kernels.hpp"
#include "dyckmax/numeric.hpp"

namespace dyck {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kRescaleExponent = 512;

void check_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be a finite value >= 0");
  }
}

double log_binomial(std::int64_t m, std::int64_t k) {
  return std::lgamma(static_cast<double>(m) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(m - k) + 1.0);
}

// Q = sum_{h=1}^{top} P(max = h) e^{ch}; heights above top are covered by the
// reflection tail bound.
HighPrecisionReal qn_from_probabilities(std::int64_t n, double lambda, const std::vector<double>& p,
                                        std::int64_t top) {
  const double c = lambda / std::sqrt(2.0 * static_cast<double>(n));
  CompensatedSum sum;
  for (std::int64_t h = 1; h <= top; ++h) {
    sum.add(p[static_cast<std::size_t>(h)] * std::exp(c * static_cast<double>(h)));
  }
  const double value = sum.value();
  const double tail = top < n ? qn_tail_bound(n, top + 1, c) : 0.0;
  return {value, (static_cast<double>(n) + 8.0) * kEps + tail / value};
}

// Same sum from bounded counts #{max <= h}, with exact probabilities.
HighPrecisionReal qn_from_counts(std::int64_t n, double lambda, const std::vector<BigCount>& bounded,
                                 std::int64_t top) {
  const BigCount cat = catalan(n);
  const double c = lambda / std::sqrt(2.0 * static_cast<double>(n));
  CompensatedSum sum;
  for (std::int64_t h = 1; h <= top; ++h) {
    const BigCount count = bounded[static_cast<std::size_t>(h)] - bounded[static_cast<std::size_t>(h - 1)];
    if (count == 0) continue;
    sum.add(ratio_to_double(count, cat) * std::exp(c * static_cast<double>(h)));
  }
  const double value = sum.value();
  const double tail = top < n ? qn_tail_bound(n, top + 1, c) : 0.0;
  return {value, tail / value + 8.0 * kEps};
}

}  // namespace

BigCount HeightDistribution::total() const {
  BigCount t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

ExactProb HeightDistribution::probability(std::int64_t h) const {
  if (h < 0 || h >= static_cast<std::int64_t>(counts.size())) return ExactProb();
  return ExactProb(counts[static_cast<std::size_t>(h)], total());
}

ExactProb HeightDistribution::cdf(std::int64_t h) const {
  BigCount acc = 0;
  for (std::int64_t i = 0; i <= h && i < static_cast<std::int64_t>(counts.size()); ++i) {
    acc += counts[static_cast<std::size_t>(i)];
  }
  return ExactProb(acc, total());
}

std::vector<std::vector<BigCount>> bounded_height_table(std::int64_t n_max, std::int64_t max_h) {
  if (n_max < 0 || max_h < 0) throw std::invalid_argument("bounded_height_table: negative size");
  std::vector<std::vector<BigCount>> table(static_cast<std::size_t>(n_max + 1),
                                           std::vector<BigCount>(static_cast<std::size_t>(max_h + 1)));
  for (std::int64_t h = 0; h <= max_h; ++h) {
    const auto w = static_cast<std::size_t>(h + 1);
    std::vector<BigCount> cur(w), next(w);
    cur[0] = 1;
    table[0][static_cast<std::size_t>(h)] = 1;
    for (std::int64_t t = 1; t <= 2 * n_max; ++t) {
      // Only heights with the parity of t are reachable.
      for (std::size_t i = 0; i < w; ++i) {
        if (((static_cast<std::int64_t>(i) + t) & 1) != 0) {
          next[i] = 0;
          continue;
        }
        if (i == 0) {
          next[i] = w > 1 ? cur[1] : BigCount(0);
        } else if (i + 1 == w) {
          next[i] = cur[i - 1];
        } else {
          mpz_add(next[i].get_mpz_t(), cur[i - 1].get_mpz_t(), cur[i + 1].get_mpz_t());
        }
      }
      std::swap(cur, next);
      if ((t & 1) == 0) table[static_cast<std::size_t>(t / 2)][static_cast<std::size_t>(h)] = cur[0];
    }
  }
  return table;
}

std::vector<BigCount> bounded_height_counts(std::int64_t n, std::int64_t max_h) {
  if (n < 0 || max_h < 0) throw std::invalid_argument("bounded_height_counts: negative argument");
  // Heights above n behave like h = n; cap the recursion width there.
  const std::int64_t width = std::min(max_h, n);
  auto row = bounded_height_table(n, width)[static_cast<std::size_t>(n)];
  row.resize(static_cast<std::size_t>(max_h + 1), row.back());
  return row;
}

BigCount bounded_height_count_reflection(std::int64_t n, std::int64_t h) {
  if (n < 0 || h < 0) return 0;
  return strip_count(2 * n, 0, 0, 0, h);
}

HeightDistribution max_distribution(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("max_distribution: n must be >= 0");
  const auto bounded = bounded_height_counts(n, n);
  HeightDistribution d;
  d.n = n;
  d.counts.resize(bounded.size());
  for (std::size_t h = 0; h < bounded.size(); ++h) {
    d.counts[h] = h == 0 ? bounded[0] : BigCount(bounded[h] - bounded[h - 1]);
  }
  return d;
}

std::vector<std::vector<double>> height_probability_table(std::int64_t n_max, std::int64_t max_h) {
  if (n_max < 0 || max_h < 0) throw std::invalid_argument("height_probability_table: negative size");
  const auto rows = static_cast<std::size_t>(n_max + 1);
  std::vector<double> cat_mant(rows);
  std::vector<long> cat_exp(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const BigCount c = catalan(static_cast<std::int64_t>(n));
    cat_mant[n] = mpz_get_d_2exp(&cat_exp[n], c.get_mpz_t());
  }
  std::vector<std::vector<double>> table(rows, std::vector<double>(static_cast<std::size_t>(max_h + 1)));
  table[0][0] = 1.0;
  for (std::int64_t h = 1; h <= max_h; ++h) {
    const auto w = static_cast<std::size_t>(h);
    // below: paths still inside {0..h-1}; touched: paths that have visited h.
    std::vector<double> below(w, 0.0), below_next(w, 0.0);
    std::vector<double> touched(w + 1, 0.0), touched_next(w + 1, 0.0);
    below[0] = 1.0;
    long exponent = 0;
    for (std::int64_t t = 1; t <= 2 * n_max; ++t) {
      kernels::band_step(below, below_next);
      kernels::band_step(touched, touched_next);
      touched_next[w] += below[w - 1];
      std::swap(below, below_next);
      std::swap(touched, touched_next);
      if ((t & 31) == 0 &&
          std::max(kernels::max_value(below), kernels::max_value(touched)) >
              std::ldexp(1.0, kRescaleExponent)) {
        const double f = std::ldexp(1.0, -kRescaleExponent);
        kernels::scale(below, f);
        kernels::scale(touched, f);
        exponent += kRescaleExponent;
      }
      if ((t & 1) == 0) {
        const auto n = static_cast<std::size_t>(t / 2);
        table[n][w] = std::ldexp(touched[0] / cat_mant[n], static_cast<int>(exponent - cat_exp[n]));
      }
    }
  }
  return table;
}

std::vector<double> bounded_height_fractions(std::int64_t n, std::int64_t max_h) {
  if (n < 0 || max_h < 0) throw std::invalid_argument("bounded_height_fractions: negative argument");
  const std::int64_t width = std::min(max_h, n);
  const auto p = height_probability_table(n, width)[static_cast<std::size_t>(n)];
  std::vector<double> out(static_cast<std::size_t>(max_h + 1), 1.0);
  CompensatedSum acc;
  for (std::int64_t h = 0; h <= width; ++h) {
    acc.add(p[static_cast<std::size_t>(h)]);
    out[static_cast<std::size_t>(h)] = std::min(acc.value(), 1.0);
  }
  return out;
}

std::int64_t qn_height_cutoff(std::int64_t n) {
  if (n <= kFullHeightSumLimit) return n;
  const auto h = static_cast<std::int64_t>(std::ceil(8.0 * std::sqrt(2.0 * static_cast<double>(n))));
  return std::min(h, n);
}

double qn_tail_bound(std::int64_t n, std::int64_t from, double c) {
  const double log_cat = log_big(catalan(n));
  double total = 0.0;
  for (std::int64_t h = std::max<std::int64_t>(from, 1); h <= n; ++h) {
    total += std::exp(log_binomial(2 * n, n - h) - log_cat + c * static_cast<double>(h));
  }
  // Slack for lgamma rounding.
  return total * (1.0 + 1e-9);
}

HighPrecisionReal qn_exact(std::int64_t n, double lambda, QnMode mode) {
  check_lambda(lambda);
  if (n < 1) throw std::invalid_argument("qn_exact: n must be >= 1");
  if (lambda == 0.0) return {1.0, 0.0};
  const std::int64_t top = qn_height_cutoff(n);
  if (mode == QnMode::kLogSpace) {
    const auto p = height_probability_table(n, top)[static_cast<std::size_t>(n)];
    return qn_from_probabilities(n, lambda, p, top);
  }
  return qn_from_counts(n, lambda, bounded_height_counts(n, top), top);
}

std::vector<HighPrecisionReal> qn_exact_many(const std::vector<std::int64_t>& ns, double lambda) {
  check_lambda(lambda);
  std::int64_t n_max = 0, h_max = 0;
  for (const auto n : ns) {
    if (n < 1) throw std::invalid_argument("qn_exact_many: n must be >= 1");
    n_max = std::max(n_max, n);
    h_max = std::max(h_max, qn_height_cutoff(n));
  }
  if (lambda == 0.0) return std::vector<HighPrecisionReal>(ns.size(), HighPrecisionReal{1.0, 0.0});
  const auto table = ns.empty() ? std::vector<std::vector<BigCount>>{} : bounded_height_table(n_max, h_max);
  std::vector<HighPrecisionReal> out;
  out.reserve(ns.size());
  for (const auto n : ns) {
    out.push_back(qn_from_counts(n, lambda, table[static_cast<std::size_t>(n)], qn_height_cutoff(n)));
  }
  return out;
}

std::vector<HighPrecisionReal> qn_log_space_many(const std::vector<std::int64_t>& ns, double lambda) {
  check_lambda(lambda);
  std::vector<HighPrecisionReal> out;
  if (ns.empty()) return out;
  std::int64_t n_max = 0, h_max = 0;
  for (const auto n : ns) {
    if (n < 1) throw std::invalid_argument("qn_log_space_many: n must be >= 1");
    n_max = std::max(n_max, n);
    h_max = std::max(h_max, qn_height_cutoff(n));
  }
  if (lambda == 0.0) return std::vector<HighPrecisionReal>(ns.size(), HighPrecisionReal{1.0, 0.0});
  const auto table = height_probability_table(n_max, h_max);
  out.reserve(ns.size());
  for (const auto n : ns) {
    out.push_back(
        qn_from_probabilities(n, lambda, table[static_cast<std::size_t>(n)], qn_height_cutoff(n)));
  }
  return out;
}

}  // namespace dyck
