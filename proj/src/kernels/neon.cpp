#include "dyckmax/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>

namespace dyck::kernels::neon {

void band_step(const double* in, double* out, std::size_t w) {
  if (w < 4) {
    scalar::band_step(in, out, w);
    return;
  }
  out[0] = in[1];
  std::size_t i = 1;
  for (; i + 2 < w; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(in + i - 1), vld1q_f64(in + i + 1)));
  }
  for (; i + 1 < w; ++i) out[i] = in[i - 1] + in[i + 1];
  out[w - 1] = in[w - 2];
}

double max_value(const double* v, std::size_t w) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= w; i += 2) acc = vmaxq_f64(acc, vld1q_f64(v + i));
  double m = std::max(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
  for (; i < w; ++i) m = std::max(m, v[i]);
  return m;
}

void scale(double* v, std::size_t w, double factor) {
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + 2 <= w; i += 2) vst1q_f64(v + i, vmulq_f64(vld1q_f64(v + i), f));
  for (; i < w; ++i) v[i] *= factor;
}

}  // namespace dyck::kernels::neon

#else

namespace dyck::kernels::neon {
void band_step(const double* in, double* out, std::size_t w) { scalar::band_step(in, out, w); }
double max_value(const double* v, std::size_t w) { return scalar::max_value(v, w); }
void scale(double* v, std::size_t w, double factor) { scalar::scale(v, w, factor); }
}  // namespace dyck::kernels::neon

#endif
