#pragma once

// Brute-force enumeration of the small walk families. Walks are generated
// from bit words, so lengths are limited to 63 steps (far beyond what
// exhaustive checks can afford anyway).

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "dyckmax/walk.hpp"

namespace dyck {

// Calls f(const LatticeWalk&) for all 2^length walks.
template <typename F>
void for_each_walk(std::size_t length, F&& f) {
  if (length > 30) throw std::invalid_argument("for_each_walk: length too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << length;
  for (std::uint64_t bits = 0; bits < count; ++bits) f(LatticeWalk::from_bits(bits, length));
}

// Calls f(const LatticeWalk&) for every walk of 2n+1 steps ending at -1.
template <typename F>
void for_each_bridge(std::size_t n, F&& f) {
  const std::size_t length = 2 * n + 1;
  if (length > 31) throw std::invalid_argument("for_each_bridge: n too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << length;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) == n) f(LatticeWalk::from_bits(bits, length));
  }
}

// Calls f(const LatticeWalk&) for every Dyck path of 2n steps.
template <typename F>
void for_each_dyck(std::size_t n, F&& f) {
  const std::size_t length = 2 * n;
  if (length > 30) throw std::invalid_argument("for_each_dyck: n too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << length;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) != n) continue;
    int s = 0;
    bool ok = true;
    for (std::size_t i = 0; i < length && ok; ++i) {
      s += (bits >> i) & 1u ? 1 : -1;
      ok = s >= 0;
    }
    if (ok) f(LatticeWalk::from_bits(bits, length));
  }
}

}  // namespace dyck
