#pragma once

// Free-walk tail inequalities and the chain of bounds that makes Q_n(λ)
// uniformly bounded in n.

#include <cstdint>
#include <string>
#include <vector>

#include "dyckmax/counting.hpp"
#include "dyckmax/heights.hpp"

namespace dyck {

struct ReflectionIdentity {
  std::int64_t n = 0;
  std::int64_t x = 0;
  ExactProb lhs;  // P_w(max_{0..n} S >= x)
  ExactProb rhs;  // 2 P_w(S_n > x) + P_w(S_n = x)
  // x <= 0: both sides are 1 and the identity says nothing.
  bool degenerate = false;
  bool holds() const { return lhs == rhs; }
};

// lhs from the max law of the free walk (transfer recursion), rhs from N(n, j).
ReflectionIdentity reflection_identity(std::int64_t n, std::int64_t x);

// counts[h] = #{S in W_n : max_{0..n} S = h}, h = 0..n, by transfer recursion.
std::vector<BigCount> walk_max_counts(std::int64_t n);

// P_w(S_n >= x) exactly.
ExactProb walk_endpoint_tail(std::int64_t n, std::int64_t x);

// exp(-x^2 / (2n)).
double hoeffding_tail(std::int64_t n, double x);

// 1 + sum_{x>=1} (e^{θx} - e^{θ(x-1)}) 2 e^{-x^2/(2m)}: the bound on
// E_w[e^{θ max}] over W_m from P(max >= x) <= 2 P(S_m >= x) and Hoeffding.
// The series is summed until a geometric remainder bound drops below 1e-15
// of the partial sum; that remainder is included.
double walk_max_majorant(std::int64_t m, double theta);

// The majorant with θ = c / sqrt(m) as m -> infinity:
// 1 + 2c sqrt(2 pi) e^{c^2/2} Phi(c).
double walk_max_majorant_limit(double c);

// E_w[e^{θ max}] over W_m from the exact max law.
HighPrecisionReal walk_max_moment(std::int64_t m, double theta);

struct WalkMaxMoment {
  HighPrecisionReal exact;
  double majorant = 0.0;
  bool dominated = false;
};

// E_w[e^{4λ max / sqrt(2n)}] over W_n with its majorant.
WalkMaxMoment walk_max_exp_moment(std::int64_t n, double lambda);

struct CertificateLink {
  std::string name;
  std::int64_t n = 0;
  double left = 0.0;
  double right = 0.0;
  double margin() const { return right - left; }
};

// λ-independent tables shared by certificates over several λ.
struct CertificateInputs {
  std::vector<std::int64_t> n_grid;
  // Per grid entry: P(max = h) under D_{2n}, h = 0..cutoff (floating route).
  std::vector<std::vector<double>> dyck_max;
  std::vector<double> dyck_max_rel_err;
  // P_b(Y = r), r = 0..2n+1.
  std::vector<std::vector<double>> bridge_range;
  // Half-range laws for n <= kBridgeLinkCap, else empty.
  std::vector<std::vector<double>> half_bridge[2];
  std::vector<std::vector<double>> half_walk[2];
  // P_w(max = h) over W_{n+a}.
  std::vector<std::vector<double>> walk_max[2];
  std::int64_t c0_scan_n_max = 0;
  double c0[2] = {0.0, 0.0};
};

// Above this n the bridge half-range links are not evaluated (their exact
// laws cost O(n^4)); the remaining links are evaluated at every n.
inline constexpr std::int64_t kBridgeLinkCap = 64;

CertificateInputs precompute_certificate_inputs(std::vector<std::int64_t> n_grid,
                                                std::int64_t c0_scan_n_max = 2000);

struct BoundCertificate {
  double lambda = 0.0;
  double epsilon = 0.0;
  std::vector<std::int64_t> n_grid;
  std::string c0_variant;
  std::int64_t c0_scan_n_max = 0;
  double c0[2] = {0.0, 0.0};
  // sup of the majorant over the grid, the geometric grid and the limit.
  double majorant_sup = 0.0;
  std::vector<std::pair<std::int64_t, double>> majorant_trend;  // (m, value); m = 0 is the limit
  double bound = 0.0;          // B(λ)
  double bound_epsilon = 0.0;  // B(λ + ε)
  double worst_ratio = 0.0;    // max_n Q_n(λ) / B(λ)
  std::vector<CertificateLink> links;
  std::string failure;
  bool passed() const { return failure.empty(); }
};

// B(λ) = e^{λ/sqrt 2} sqrt(C0_n C0_{n+1}) M*, with M* the largest majorant
// value found. Links per n:
//   dyck_vs_bridge   Q_n <= e^{λ/sqrt(2n)} E_b[e^{λY/sqrt(2n)}]
//   cauchy_schwarz   E_b[e^{λY/sqrt(2n)}] <= sqrt(H_0 H_1)
//   bridge_vs_walk_a H_a <= C0_a E_w[e^{2λY_[0,n+a]/sqrt(2n)}]
//   range_vs_max_a   E_w[e^{2λY/sqrt(2n)}] <= E_w[e^{4λ max/sqrt(2n)}]
//   majorant_a       E_w[e^{4λ max/sqrt(2n)}] <= majorant(n+a)
//   assembly         e^{λ/sqrt(2n)} sqrt(C0_0 maj_0 C0_1 maj_1) <= B
//   final            Q_n <= B
// with H_a = E_b[e^{2λY_[0,n+a]/sqrt(2n)}].
BoundCertificate uniform_bound_certificate(double lambda, const CertificateInputs& inputs, double epsilon = 0.1);
BoundCertificate uniform_bound_certificate(double lambda, const std::vector<std::int64_t>& n_grid,
                                           double epsilon = 0.1);

// {1..50} ∪ {64, 128, 256, 512, 1024}.
std::vector<std::int64_t> default_certificate_grid();

struct EquivalenceCheck {
  double dyck = 0.0;    // Q_n(λ)
  double bridge = 0.0;  // E_b[e^{λY/sqrt(2n)}]
  double factor = 0.0;  // e^{λ/sqrt(2n)}
  bool holds = false;   // Q_n / factor <= bridge <= Q_n factor
};

// Both moments from exact laws.
EquivalenceCheck equivalence_check(std::int64_t n, double lambda);

}  // namespace dyck
