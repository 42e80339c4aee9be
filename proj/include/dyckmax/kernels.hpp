#pragma once

// Data-parallel inner loops of the transfer recursions. Every kernel has a
// scalar reference implementation; vector variants must produce bit-identical
// results (the operations are the same IEEE additions and comparisons, only
// grouped by lanes). The variant is picked once at runtime from the CPU
// features, and can be forced with DYCKMAX_ISA=scalar|avx2|neon or set_isa().

#include <cstddef>
#include <span>
#include <string_view>

namespace dyck::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
// Best variant this CPU supports.
Isa detected_isa();
Isa active_isa();
// Throws std::invalid_argument if the CPU (or the build) lacks the variant.
void set_isa(Isa isa);

// One step of a walk confined to the band [0, w): out[i] = in[i-1] + in[i+1]
// with in[-1] = in[w] = 0. in and out must have equal size and not alias.
void band_step(std::span<const double> in, std::span<double> out);

// Largest element (0 for an empty span). Inputs are finite and >= 0.
double max_value(std::span<const double> v);

// v[i] *= factor.
void scale(std::span<double> v, double factor);

// Per-variant entry points, exposed for equivalence tests and benchmarks.
namespace scalar {
void band_step(const double* in, double* out, std::size_t w);
double max_value(const double* v, std::size_t w);
void scale(double* v, std::size_t w, double factor);
}  // namespace scalar

namespace avx2 {
void band_step(const double* in, double* out, std::size_t w);
double max_value(const double* v, std::size_t w);
void scale(double* v, std::size_t w, double factor);
}  // namespace avx2

namespace neon {
void band_step(const double* in, double* out, std::size_t w);
double max_value(const double* v, std::size_t w);
void scale(double* v, std::size_t w, double factor);
}  // namespace neon

}  // namespace dyck::kernels
