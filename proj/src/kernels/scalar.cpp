#include <algorithm>

#include "dyckmax/kernels.hpp"

namespace dyck::kernels::scalar {

void band_step(const double* in, double* out, std::size_t w) {
  if (w == 0) return;
  if (w == 1) {
    out[0] = 0.0;
    return;
  }
  out[0] = in[1];
  for (std::size_t i = 1; i + 1 < w; ++i) out[i] = in[i - 1] + in[i + 1];
  out[w - 1] = in[w - 2];
}

double max_value(const double* v, std::size_t w) {
  double m = 0.0;
  for (std::size_t i = 0; i < w; ++i) m = std::max(m, v[i]);
  return m;
}

void scale(double* v, std::size_t w, double factor) {
  for (std::size_t i = 0; i < w; ++i) v[i] *= factor;
}

}  // namespace dyck::kernels::scalar
