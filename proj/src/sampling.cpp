#include "dyckmax/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "dyckmax/cycle_lemma.hpp"
#include "dyckmax/numeric.hpp"

namespace dyck {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  return std::mt19937_64(seq);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Heights of a uniform bridge of 2n+1 steps into `h` (size 2n+2).
void fill_bridge_heights(std::int64_t n, RngStream& rng, std::vector<int>& h) {
  const std::int64_t len = 2 * n + 1;
  h.resize(static_cast<std::size_t>(len + 1));
  h[0] = 0;
  std::int64_t ups = n;
  for (std::int64_t i = 0; i < len; ++i) {
    const bool up = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(len - i))) < ups;
    if (up) --ups;
    h[static_cast<std::size_t>(i + 1)] = h[static_cast<std::size_t>(i)] + (up ? 1 : -1);
  }
}

struct ChunkStats {
  CompensatedSum sum;
  CompensatedSum sum_sq;
  std::int64_t count = 0;
};

// Runs f(chunk_index, rng) over all chunks, distributing chunks over threads
// round-robin. Results land in per-chunk slots so the merge order is fixed.
template <typename F>
void for_each_chunk(std::int64_t n_samples, const RngStream& rng, unsigned threads, F&& f) {
  const std::int64_t chunks = (n_samples + kMcChunk - 1) / kMcChunk;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::int64_t>(chunks, 1))));
  auto work = [&](unsigned tid) {
    for (std::int64_t c = tid; c < chunks; c += threads) {
      const std::int64_t begin = c * kMcChunk;
      const std::int64_t count = std::min(kMcChunk, n_samples - begin);
      RngStream local = rng.substream(static_cast<std::uint64_t>(c));
      f(c, count, local);
    }
  };
  if (threads == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();
}

template <typename Stat>
ConfidenceEstimate mc_mean(std::int64_t n, std::int64_t n_samples, const RngStream& rng,
                           McOptions options, Stat stat) {
  if (n < 1) throw std::invalid_argument("Monte Carlo estimate: n must be >= 1");
  if (n_samples < 100) throw std::invalid_argument("Monte Carlo estimate: need at least 100 samples");
  const std::int64_t chunks = (n_samples + kMcChunk - 1) / kMcChunk;
  std::vector<ChunkStats> per_chunk(static_cast<std::size_t>(chunks));
  for_each_chunk(n_samples, rng, options.threads, [&](std::int64_t c, std::int64_t count, RngStream& local) {
    auto& slot = per_chunk[static_cast<std::size_t>(c)];
    for (std::int64_t i = 0; i < count; ++i) {
      const double x = stat(sample_dyck_max(n, local));
      slot.sum.add(x);
      slot.sum_sq.add(x * x);
    }
    slot.count = count;
  });
  CompensatedSum sum, sum_sq;
  for (const auto& s : per_chunk) {
    sum.add(s.sum);
    sum_sq.add(s.sum_sq);
  }
  const auto count = static_cast<double>(n_samples);
  const double mean = sum.value() / count;
  const double var = std::max(0.0, (sum_sq.value() - count * mean * mean) / (count - 1.0));
  return normal_interval(mean, var, n_samples, options.level);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be > 0");
  // Lemire's multiply-shift with rejection of the biased low region.
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(seed_, mix64(stream_ ^ mix64(index + 1)));
}

BernoulliBridge sample_bridge(std::int64_t n, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample_bridge: n must be >= 0");
  const std::int64_t len = 2 * n + 1;
  std::vector<int> inc(static_cast<std::size_t>(len));
  std::int64_t ups = n;
  for (std::int64_t i = 0; i < len; ++i) {
    const bool up = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(len - i))) < ups;
    if (up) --ups;
    inc[static_cast<std::size_t>(i)] = up ? 1 : -1;
  }
  return BernoulliBridge(make_walk(inc));
}

DyckPath sample_dyck(std::int64_t n, RngStream& rng) {
  return psi_inverse(sample_bridge(n, rng)).path.to_dyck();
}

int sample_dyck_max(std::int64_t n, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample_dyck_max: n must be >= 0");
  thread_local std::vector<int> h;
  fill_bridge_heights(n, rng, h);
  // The pointed Dyck representative reads the cyclic word from the first
  // minimum m: heights S_j - S_m for j >= m, then S_j - 1 - S_m for j < m.
  const auto m = static_cast<std::size_t>(std::min_element(h.begin(), h.end()) - h.begin());
  const int after = *std::max_element(h.begin() + static_cast<std::ptrdiff_t>(m), h.end());
  const int before = m > 0 ? *std::max_element(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(m)) - 1 : after;
  return std::max(after, before) - h[m];
}

ConfidenceEstimate normal_interval(double mean, double variance, std::int64_t count, double level) {
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must lie in (0, 1)");
  if (count < 2) throw std::invalid_argument("confidence interval needs at least 2 samples");
  const boost::math::normal_distribution<double> z;
  const double q = boost::math::quantile(z, 0.5 + 0.5 * level);
  return {mean, q * std::sqrt(variance / static_cast<double>(count)), level, count};
}

ConfidenceEstimate mc_qn(std::int64_t n, double lambda, std::int64_t n_samples, const RngStream& rng,
                         McOptions options) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("mc_qn: lambda must be >= 0");
  const double c = lambda / std::sqrt(2.0 * static_cast<double>(n));
  return mc_mean(n, n_samples, rng, options, [c](int m) { return std::exp(c * m); });
}

ConfidenceEstimate mc_scaled_max_mean(std::int64_t n, std::int64_t n_samples, const RngStream& rng,
                                      McOptions options) {
  const double inv = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  return mc_mean(n, n_samples, rng, options, [inv](int m) { return m * inv; });
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double y) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), y);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::ks_distance_discrete(const std::vector<double>& points,
                                          const std::vector<double>& cdf) const {
  if (points.size() != cdf.size()) throw std::invalid_argument("ks_distance_discrete: size mismatch");
  // Both CDFs are right-continuous step functions; the sup is attained at a
  // jump of either one, or just left of it.
  std::vector<double> knots = points;
  knots.insert(knots.end(), sorted_.begin(), sorted_.end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  auto model = [&](double y) {
    const auto it = std::upper_bound(points.begin(), points.end(), y);
    return it == points.begin() ? 0.0 : cdf[static_cast<std::size_t>(it - points.begin() - 1)];
  };
  double d = 0.0;
  double prev_emp = 0.0, prev_model = 0.0;
  for (const double y : knots) {
    // Left limits equal the values on the previous flat stretch.
    d = std::max(d, std::abs(prev_emp - prev_model));
    prev_emp = (*this)(y);
    prev_model = model(y);
    d = std::max(d, std::abs(prev_emp - prev_model));
  }
  return d;
}

EmpiricalCdf empirical_max_cdf(std::int64_t n, std::int64_t n_samples, const RngStream& rng,
                               unsigned threads) {
  if (n < 1) throw std::invalid_argument("empirical_max_cdf: n must be >= 1");
  if (n_samples < 1) throw std::invalid_argument("empirical_max_cdf: need at least one sample");
  std::vector<double> values(static_cast<std::size_t>(n_samples));
  // Divided rather than multiplied by a reciprocal so the values coincide
  // with atoms computed as h / sqrt(2n).
  const double scale = std::sqrt(2.0 * static_cast<double>(n));
  for_each_chunk(n_samples, rng, threads, [&](std::int64_t c, std::int64_t count, RngStream& local) {
    for (std::int64_t i = 0; i < count; ++i) {
      values[static_cast<std::size_t>(c * kMcChunk + i)] = sample_dyck_max(n, local) / scale;
    }
  });
  return EmpiricalCdf(std::move(values));
}

}  // namespace dyck
