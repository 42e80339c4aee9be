#include "dyckmax/bridge_stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "dyckmax/exhaustive.hpp"
#include "dyckmax/numeric.hpp"
#include "dyckmax/sampling.hpp"
#include "dyckmax/walk.hpp"

namespace dyck {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// N(L, j) from a precomputed row of C(L, .).
class WalkRow {
 public:
  explicit WalkRow(std::int64_t length) : length_(length), row_(static_cast<std::size_t>(length + 1)) {
    row_[0] = 1;
    for (std::int64_t k = 1; k <= length; ++k) {
      row_[static_cast<std::size_t>(k)] = row_[static_cast<std::size_t>(k - 1)] * (length - k + 1);
      mpz_divexact_ui(row_[static_cast<std::size_t>(k)].get_mpz_t(),
                      row_[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(k));
    }
  }

  const BigCount* at(std::int64_t j) const {
    if (j > length_ || j < -length_ || ((length_ + j) & 1) != 0) return nullptr;
    return &row_[static_cast<std::size_t>((length_ + j) / 2)];
  }

  // Walks from `from` to `to` inside [lo, hi]; same image sum as strip_count.
  void add_strip(BigCount& acc, std::int64_t from, std::int64_t to, std::int64_t lo,
                 std::int64_t hi, int sign) const {
    if (lo > hi || from < lo || from > hi || to < lo || to > hi) return;
    const std::int64_t period = 2 * (hi - lo + 2);
    const std::int64_t direct = to - from;
    const std::int64_t mirror = 2 * (hi + 1) - to - from;
    for (const std::int64_t base : {direct, mirror}) {
      const int s = base == direct ? sign : -sign;
      std::int64_t k = (-length_ - base) / period - 1;
      for (; base + k * period <= length_; ++k) {
        if (const BigCount* c = at(base + k * period)) {
          if (s > 0) {
            acc += *c;
          } else {
            acc -= *c;
          }
        }
      }
    }
  }

 private:
  std::int64_t length_;
  std::vector<BigCount> row_;
};

template <typename Count>
void add_to(BigCount& acc, const Count& c) {
  if constexpr (std::is_same_v<Count, BigCount>) {
    acc += c;
  } else {
    // unsigned __int128 into GMP via two 64-bit halves.
    BigCount hi = static_cast<unsigned long>(static_cast<std::uint64_t>(c >> 64));
    hi <<= 64;
    hi += static_cast<unsigned long>(static_cast<std::uint64_t>(c));
    acc += hi;
  }
}

template <typename Count>
HalfRangeCounts half_range_dp(std::int64_t n, int a) {
  const std::int64_t m = n + a;
  const auto dim = static_cast<std::size_t>(m + 1);
  // cell(lo, hi) holds counts for v in [-lo, hi], stored at v + lo.
  using Table = std::vector<std::vector<Count>>;
  auto fresh = [&] {
    Table t(dim * dim);
    for (std::size_t lo = 0; lo < dim; ++lo) {
      for (std::size_t hi = 0; lo + hi < dim; ++hi) t[lo * dim + hi].assign(lo + hi + 1, Count(0));
    }
    return t;
  };
  Table cur = fresh();
  cur[0][0] = 1;
  for (std::int64_t t = 0; t < m; ++t) {
    Table next = fresh();
    for (std::size_t lo = 0; lo < dim; ++lo) {
      for (std::size_t hi = 0; lo + hi <= static_cast<std::size_t>(t) && lo + hi < dim; ++hi) {
        const auto& cell = cur[lo * dim + hi];
        for (std::size_t idx = 0; idx < cell.size(); ++idx) {
          const Count& c = cell[idx];
          if (c == 0) continue;
          const auto v = static_cast<std::int64_t>(idx) - static_cast<std::int64_t>(lo);
          // Up step.
          if (v + 1 > static_cast<std::int64_t>(hi)) {
            next[lo * dim + hi + 1][idx + 1] += c;
          } else {
            next[lo * dim + hi][idx + 1] += c;
          }
          // Down step.
          if (v - 1 < -static_cast<std::int64_t>(lo)) {
            next[(lo + 1) * dim + hi][0] += c;
          } else {
            next[lo * dim + hi][idx - 1] += c;
          }
        }
      }
    }
    cur = std::move(next);
  }
  HalfRangeCounts out;
  out.n = n;
  out.a = a;
  out.bridge.assign(dim, BigCount(0));
  out.walk.assign(dim, BigCount(0));
  const std::int64_t rest = 2 * n + 1 - m;
  for (std::size_t lo = 0; lo < dim; ++lo) {
    for (std::size_t hi = 0; lo + hi < dim; ++hi) {
      const auto& cell = cur[lo * dim + hi];
      for (std::size_t idx = 0; idx < cell.size(); ++idx) {
        if (cell[idx] == 0) continue;
        const auto v = static_cast<std::int64_t>(idx) - static_cast<std::int64_t>(lo);
        BigCount c = 0;
        add_to(c, cell[idx]);
        out.walk[lo + hi] += c;
        out.bridge[lo + hi] += c * walk_count(rest, -1 - v);
      }
    }
  }
  return out;
}

}  // namespace

std::map<std::int64_t, BigCount> bridge_midpoint_counts(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bridge_midpoint_counts: n must be >= 1");
  std::map<std::int64_t, BigCount> out;
  for (std::int64_t k = -n; k <= n; k += 2) out[k] = walk_count(n, k) * walk_count(n + 1, k + 1);
  return out;
}

ExactProb bridge_midpoint_probability(std::int64_t n, std::int64_t k) {
  return ExactProb(walk_count(n, k) * walk_count(n + 1, k + 1), walk_count(2 * n + 1, -1));
}

double round_up(const mpq_class& q) {
  double d = q.get_d();
  if (mpq_class(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

C0Scan c0_scan(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("c0_scan: n_max must be >= 1");
  C0Scan scan;
  scan.rows.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    C0Row row;
    row.n = n;
    BigCount pow2 = 1;
    pow2 <<= static_cast<mp_bitcnt_t>(n);
    const BigCount bridges = walk_count(2 * n + 1, -1);
    // N(m, .) peaks at the central binomial.
    row.horizon_n = mpq_class(pow2 * binomial(n + 1, (n + 1) / 2), bridges);
    row.horizon_n_plus_1 = mpq_class(pow2 * 2 * binomial(n, n / 2), bridges);
    row.displayed = mpq_class(pow2 * binomial(n, n / 2), binomial(2 * n, n));
    row.horizon_n.canonicalize();
    row.horizon_n_plus_1.canonicalize();
    row.displayed.canonicalize();
    if (n == 1 || row.horizon_n > scan.sup_horizon_n) {
      scan.sup_horizon_n = row.horizon_n;
      scan.argsup_horizon_n = n;
    }
    if (n == 1 || row.horizon_n_plus_1 > scan.sup_horizon_n_plus_1) {
      scan.sup_horizon_n_plus_1 = row.horizon_n_plus_1;
      scan.argsup_horizon_n_plus_1 = n;
    }
    if (n == 1 || row.displayed > scan.sup_displayed) scan.sup_displayed = row.displayed;
    scan.rows.push_back(std::move(row));
  }
  scan.limit = std::sqrt(2.0);
  const double limit_up = std::nextafter(scan.limit, std::numeric_limits<double>::infinity());
  scan.certified_horizon_n = std::max(round_up(scan.sup_horizon_n), limit_up);
  scan.certified_horizon_n_plus_1 = std::max(round_up(scan.sup_horizon_n_plus_1), limit_up);
  const auto& last = scan.rows.back().horizon_n;
  const auto& mid = scan.rows[static_cast<std::size_t>(std::max<std::int64_t>(n_max / 2, 1) - 1)].horizon_n;
  scan.tail_spread = std::abs(mpq_class(last - mid).get_d());
  return scan;
}

std::vector<BigCount> bridge_range_counts(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("bridge_range_counts: n must be >= 0");
  const std::int64_t len = 2 * n + 1;
  const WalkRow row(len);
  // at_most[r] = #{bridges with range <= r}.
  std::vector<BigCount> at_most(static_cast<std::size_t>(len + 1));
  for (std::int64_t r = 1; r <= len; ++r) {
    BigCount acc = 0;
    for (std::int64_t a = 1; a <= r; ++a) row.add_strip(acc, 0, -1, -a, r - a, +1);
    for (std::int64_t a = 1; a <= r - 1; ++a) row.add_strip(acc, 0, -1, -a, r - 1 - a, -1);
    at_most[static_cast<std::size_t>(r)] = acc;
  }
  std::vector<BigCount> counts(static_cast<std::size_t>(len + 1));
  for (std::int64_t r = 1; r <= len; ++r) {
    counts[static_cast<std::size_t>(r)] = at_most[static_cast<std::size_t>(r)] - at_most[static_cast<std::size_t>(r - 1)];
  }
  return counts;
}

HalfRangeCounts half_range_counts(std::int64_t n, int a) {
  if (n < 0) throw std::invalid_argument("half_range_counts: n must be >= 0");
  if (a != 0 && a != 1) throw std::invalid_argument("half_range_counts: a must be 0 or 1");
  // Every count is at most 2^{n+a}.
  if (n + a < 127) return half_range_dp<unsigned __int128>(n, a);
  return half_range_dp<BigCount>(n, a);
}

HighPrecisionReal range_exp_moment(const std::vector<BigCount>& counts, double coef) {
  BigCount total = 0;
  for (const auto& c : counts) total += c;
  if (total == 0) throw std::invalid_argument("range_exp_moment: empty law");
  CompensatedSum sum;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    sum.add(ratio_to_double(counts[r], total) * std::exp(coef * static_cast<double>(r)));
  }
  return {sum.value(), 8.0 * kEps};
}

HighPrecisionReal half_range_moment(std::int64_t n, double lambda, int a) {
  if (n < 1) throw std::invalid_argument("half_range_moment: n must be >= 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("half_range_moment: lambda must be >= 0");
  if (lambda == 0.0) return {1.0, 0.0};
  const auto counts = half_range_counts(n, a);
  return range_exp_moment(counts.bridge, 2.0 * lambda / std::sqrt(2.0 * static_cast<double>(n)));
}

CauchySchwarzReport cauchy_schwarz_check(std::int64_t n, double lambda, std::int64_t samples,
                                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("cauchy_schwarz_check: n must be >= 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("cauchy_schwarz_check: lambda must be >= 0");
  CauchySchwarzReport rep;
  rep.n = n;
  rep.lambda = lambda;
  const auto un = static_cast<std::size_t>(n);
  const double scale = std::sqrt(2.0 * static_cast<double>(n));
  std::vector<BigCount> full, first, second;
  auto check_path = [&](const LatticeWalk& w) {
    const int y = range_stat(w, 0, 2 * un + 1).range;
    const int y0 = range_stat(w, 0, un).range;
    const int y1 = range_stat(w, un, 2 * un + 1).range;
    if (y > y0 + y1) rep.pathwise_holds = false;
    ++rep.pathwise_checked;
    return std::array<int, 3>{y, y0, y1};
  };
  if (n <= 10) {
    rep.exhaustive = true;
    const auto len = 2 * un + 2;
    full.assign(len, 0);
    first.assign(len, 0);
    second.assign(len, 0);
    for_each_bridge(un, [&](const LatticeWalk& w) {
      const auto [y, y0, y1] = check_path(w);
      ++full[static_cast<std::size_t>(y)];
      ++first[static_cast<std::size_t>(y0)];
      ++second[static_cast<std::size_t>(y1)];
    });
  } else {
    full = bridge_range_counts(n);
    first = half_range_counts(n, 0).bridge;
    // Reading the increments backwards maps Y_[n,2n+1] onto Y_[0,n+1].
    second = half_range_counts(n, 1).bridge;
    RngStream rng(seed, 0);
    for (std::int64_t i = 0; i < samples; ++i) check_path(sample_bridge(n, rng).walk());
  }
  rep.full_moment = range_exp_moment(full, lambda / scale).value;
  rep.first_half = range_exp_moment(first, 2.0 * lambda / scale).value;
  rep.second_half = range_exp_moment(second, 2.0 * lambda / scale).value;
  rep.rhs = std::sqrt(rep.first_half * rep.second_half);
  // Allow for the rounding of three exponential sums.
  rep.holds = rep.pathwise_holds && rep.full_moment <= rep.rhs * (1.0 + 64.0 * kEps);
  return rep;
}

}  // namespace dyck
