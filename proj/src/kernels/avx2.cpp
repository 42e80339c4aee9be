// Compiled with -mavx2; only called after a runtime CPU check.

#include "dyckmax/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace dyck::kernels::avx2 {

void band_step(const double* in, double* out, std::size_t w) {
  if (w < 6) {
    scalar::band_step(in, out, w);
    return;
  }
  out[0] = in[1];
  std::size_t i = 1;
  for (; i + 4 < w; i += 4) {
    const __m256d left = _mm256_loadu_pd(in + i - 1);
    const __m256d right = _mm256_loadu_pd(in + i + 1);
    _mm256_storeu_pd(out + i, _mm256_add_pd(left, right));
  }
  for (; i + 1 < w; ++i) out[i] = in[i - 1] + in[i + 1];
  out[w - 1] = in[w - 2];
}

double max_value(const double* v, std::size_t w) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= w; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(v + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < w; ++i) m = std::max(m, v[i]);
  return m;
}

void scale(double* v, std::size_t w, double factor) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= w; i += 4) _mm256_storeu_pd(v + i, _mm256_mul_pd(_mm256_loadu_pd(v + i), f));
  for (; i < w; ++i) v[i] *= factor;
}

}  // namespace dyck::kernels::avx2

#else

namespace dyck::kernels::avx2 {
void band_step(const double* in, double* out, std::size_t w) { scalar::band_step(in, out, w); }
double max_value(const double* v, std::size_t w) { return scalar::max_value(v, w); }
void scale(double* v, std::size_t w, double factor) { scalar::scale(v, w, factor); }
}  // namespace dyck::kernels::avx2

#endif
