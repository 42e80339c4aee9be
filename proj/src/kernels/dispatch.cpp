#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dyckmax/kernels.hpp"

namespace dyck::kernels {
namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("DYCKMAX_ISA")) {
    const std::string_view v(env);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (v == isa_name(isa) && isa_supported(isa)) return isa;
    }
  }
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_supported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel variant not supported here: " + std::string(isa_name(isa)));
  }
  current().store(isa, std::memory_order_relaxed);
}

void band_step(std::span<const double> in, std::span<double> out) {
  if (in.size() != out.size()) throw std::invalid_argument("band_step: size mismatch");
  switch (active_isa()) {
    case Isa::kAvx2: return avx2::band_step(in.data(), out.data(), in.size());
    case Isa::kNeon: return neon::band_step(in.data(), out.data(), in.size());
    case Isa::kScalar: break;
  }
  scalar::band_step(in.data(), out.data(), in.size());
}

double max_value(std::span<const double> v) {
  switch (active_isa()) {
    case Isa::kAvx2: return avx2::max_value(v.data(), v.size());
    case Isa::kNeon: return neon::max_value(v.data(), v.size());
    case Isa::kScalar: break;
  }
  return scalar::max_value(v.data(), v.size());
}

void scale(std::span<double> v, double factor) {
  switch (active_isa()) {
    case Isa::kAvx2: return avx2::scale(v.data(), v.size(), factor);
    case Isa::kNeon: return neon::scale(v.data(), v.size(), factor);
    case Isa::kScalar: break;
  }
  scalar::scale(v.data(), v.size(), factor);
}

}  // namespace dyck::kernels
