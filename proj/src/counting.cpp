#include "dyckmax/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyck {

ExactProb::ExactProb(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::invalid_argument("ExactProb: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
  if (q_ < 0 || q_ > 1) throw std::invalid_argument("ExactProb: value outside [0, 1]: " + q_.get_str());
}

ExactProb::ExactProb(const mpq_class& q) : q_(q) {
  q_.canonicalize();
  if (q_ < 0 || q_ > 1) throw std::invalid_argument("ExactProb: value outside [0, 1]: " + q_.get_str());
}

BigCount binomial(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

BigCount catalan(std::int64_t n) {
  if (n < 0) return 0;
  BigCount c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

BigCount bridge_count(std::int64_t n) { return binomial(2 * n + 1, n); }

BigCount walk_count(std::int64_t m, std::int64_t j) {
  if (m < 0 || j > m || j < -m || ((m + j) & 1) != 0) return 0;
  return binomial(m, (m + j) / 2);
}

BigCount strip_count(std::int64_t steps, std::int64_t from, std::int64_t to, std::int64_t lo,
                     std::int64_t hi) {
  if (steps < 0 || lo > hi || from < lo || from > hi || to < lo || to > hi) return 0;
  const std::int64_t top = hi + 1;
  const std::int64_t period = 2 * (hi - lo + 2);
  BigCount total = 0;
  // Images y - x + k P (positive) and 2 top - y - x + k P (negative).
  const std::int64_t direct = to - from;
  const std::int64_t mirror = 2 * top - to - from;
  for (std::int64_t base : {direct, mirror}) {
    std::int64_t k0 = (-steps - base) / period - 1;
    for (std::int64_t k = k0; base + k * period <= steps; ++k) {
      const std::int64_t j = base + k * period;
      if (j < -steps) continue;
      if (base == direct) {
        total += walk_count(steps, j);
      } else {
        total -= walk_count(steps, j);
      }
    }
  }
  return total;
}

double log_big(const BigCount& x) {
  if (x <= 0) throw std::domain_error("log_big: non-positive argument");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double ratio_to_double(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::domain_error("ratio_to_double: zero denominator");
  if (num == 0) return 0.0;
  // Scale so the integer quotient carries 64+ significant bits, then truncate once.
  const long shift = 64 + static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  BigCount scaled = num;
  if (shift > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(shift));
  }
  BigCount q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, q.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp2 - std::max(shift, 0L)));
}

}  // namespace dyck
