#pragma once

// Exact counting primitives on GMP integers and rationals.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dyck {

using BigCount = mpz_class;

// An exact probability in lowest terms, 0 <= p <= 1.
class ExactProb {
 public:
  ExactProb() : q_(0) {}
  // Throws std::invalid_argument if den == 0 or the ratio leaves [0, 1].
  ExactProb(const BigCount& num, const BigCount& den);
  explicit ExactProb(const mpq_class& q);

  const mpq_class& value() const { return q_; }
  BigCount numerator() const { return q_.get_num(); }
  BigCount denominator() const { return q_.get_den(); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) { return a.q_ == b.q_; }
  friend bool operator<(const ExactProb& a, const ExactProb& b) { return a.q_ < b.q_; }
  friend bool operator<=(const ExactProb& a, const ExactProb& b) { return a.q_ <= b.q_; }

 private:
  mpq_class q_;
};

BigCount binomial(std::int64_t m, std::int64_t k);

// C(2n, n) / (n + 1) = #D_{2n}.
BigCount catalan(std::int64_t n);
// C(2n+1, n) = #B_{2n+1}.
BigCount bridge_count(std::int64_t n);
// N(m, j): walks of m steps ending at j. Zero on parity mismatch or |j| > m.
BigCount walk_count(std::int64_t m, std::int64_t j);

// Walks of `steps` steps from `from` to `to` that stay inside [lo, hi], by
// the alternating image sum over reflections in the absorbing lines lo-1
// and hi+1. Zero if either endpoint lies outside the strip.
BigCount strip_count(std::int64_t steps, std::int64_t from, std::int64_t to,
                     std::int64_t lo, std::int64_t hi);

// log of a positive big integer, accurate to a few ulp for any magnitude.
double log_big(const BigCount& x);
// num/den within one ulp, even when both overflow double.
double ratio_to_double(const BigCount& num, const BigCount& den);

}  // namespace dyck
