#pragma once

// ±1 lattice walks and the three constrained families built on them:
// Dyck paths, pointed Dyck paths (a Dyck path followed by one extra down
// step) and bridges of odd length ending at -1.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

// A walk S_0 = 0, S_{i+1} = S_i ± 1. Steps are kept as a packed bit word
// (bit set = up step); heights are cached at construction and never mutated.
class LatticeWalk {
 public:
  LatticeWalk() : heights_{0} {}

  // Throws std::invalid_argument if any increment is not +1 or -1.
  static LatticeWalk from_increments(std::span<const int> increments);
  // Steps as a string over {U, D}. Throws std::invalid_argument otherwise.
  static LatticeWalk parse(std::string_view ud);
  // Builds directly from a bit word; bit i set means step i is up.
  static LatticeWalk from_bits(std::uint64_t bits, std::size_t length);

  std::size_t length() const { return heights_.size() - 1; }
  bool empty() const { return length() == 0; }

  // Increment Δ_i = S_{i+1} - S_i, i in [0, length).
  int step(std::size_t i) const {
    return (bits_[i >> 6] >> (i & 63)) & 1u ? 1 : -1;
  }
  int height(std::size_t i) const { return heights_[i]; }
  std::span<const int> heights() const { return heights_; }
  int final_height() const { return heights_.back(); }

  int max() const;
  int min() const;
  // First index at which the global minimum is attained.
  std::size_t first_argmin() const;

  std::vector<int> increments() const;
  // The first `len` steps.
  LatticeWalk prefix(std::size_t len) const;
  LatticeWalk appended(int step) const;
  std::string to_string() const;

  bool is_dyck() const;
  bool is_pointed_dyck() const;
  bool is_bridge() const;

  // Recomputes prefix sums from the packed steps and compares with the cache.
  bool check_invariants() const;

  friend bool operator==(const LatticeWalk& a, const LatticeWalk& b) {
    return a.heights_ == b.heights_;
  }
  friend bool operator<(const LatticeWalk& a, const LatticeWalk& b) {
    return a.heights_ < b.heights_;
  }

 private:
  void push_step(bool up);

  std::vector<std::uint64_t> bits_;
  std::vector<int> heights_;
};

LatticeWalk make_walk(std::span<const int> increments);
inline LatticeWalk make_walk(std::initializer_list<int> increments) {
  return make_walk(std::span<const int>(increments.begin(), increments.size()));
}

// Length 2n, S_{2n} = 0, S_i >= 0.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(LatticeWalk w);
  const LatticeWalk& walk() const { return walk_; }
  std::size_t semilength() const { return walk_.length() / 2; }
  int max() const { return walk_.max(); }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  LatticeWalk walk_;
};

// Length 2n+1, S_i >= 0 for i <= 2n, S_{2n} = 0, S_{2n+1} = -1.
class PointedDyck {
 public:
  explicit PointedDyck(LatticeWalk w);
  static PointedDyck from_dyck(const DyckPath& d);
  const LatticeWalk& walk() const { return walk_; }
  std::size_t semilength() const { return walk_.length() / 2; }
  // The appended down step never changes the maximum.
  int max() const { return walk_.max(); }
  DyckPath to_dyck() const;
  friend bool operator==(const PointedDyck&, const PointedDyck&) = default;
  friend bool operator<(const PointedDyck& a, const PointedDyck& b) {
    return a.walk_ < b.walk_;
  }

 private:
  LatticeWalk walk_;
};

// Odd length 2n+1 with S_{2n+1} = -1: n up steps and n+1 down steps.
class BernoulliBridge {
 public:
  explicit BernoulliBridge(LatticeWalk w);
  const LatticeWalk& walk() const { return walk_; }
  std::size_t half() const { return walk_.length() / 2; }
  friend bool operator==(const BernoulliBridge&, const BernoulliBridge&) = default;
  friend bool operator<(const BernoulliBridge& a, const BernoulliBridge& b) {
    return a.walk_ < b.walk_;
  }

 private:
  LatticeWalk walk_;
};

struct RangeStat {
  int max;
  int min;
  int range;  // Y = max - min
  friend bool operator==(const RangeStat&, const RangeStat&) = default;
};

// max, min and Y of S over indices [a, b]. Throws std::out_of_range unless
// a <= b <= length.
RangeStat range_stat(const LatticeWalk& w, std::size_t a, std::size_t b);

// Piecewise-linear rescaling u_n(t) = (S_⌊nt⌋ + {nt}(S_⌈nt⌉ - S_⌊nt⌋)) / sqrt(n).
// Throws std::invalid_argument for an empty walk or t outside [0, 1].
double interpolate(const LatticeWalk& w, double t);

// Time reversal followed by reflection in the x-axis, re-anchored so the
// result again ends at -1: Δ'_i = Δ_{2n-i}. The two operations compose to a
// reversal of the increment word; it swaps Y_[0,n] with Y_[n+1,2n+1].
BernoulliBridge reverse_negate(const BernoulliBridge& b);

}  // namespace dyck
