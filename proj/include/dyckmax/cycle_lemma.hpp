#pragma once

// Rotation bijection between D*_{2n+1} x [1, 2n+1] and B_{2n+1}.
//
// psi(p, k) reads the increments of p cyclically starting at position k:
// Δ'_i = Δ_{(i+k) mod (2n+1)}. Each rotation class of a pointed Dyck path
// has exactly 2n+1 members and contains exactly one pointed Dyck path, so the
// map is a bijection and #B_{2n+1} = (2n+1) #D_{2n}. Because the rotated walk
// only re-reads the same cyclic word, |max p - (max psi - min psi)| <= 1.
//
// Index convention: k ranges over [1, 2n+1]; k = 2n+1 is the identity
// rotation (the k = 0 member of the class written over [0, 2n]). For k <= 2n
// the image first reaches its minimum at index 2n+1-k; for k = 2n+1 the image
// is p itself, whose first (and only) minimum is at index 2n+1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckmax/walk.hpp"

namespace dyck {

class RotationIndex {
 public:
  // Throws std::out_of_range unless 1 <= k <= 2n+1.
  RotationIndex(std::size_t k, std::size_t walk_length) : k_(k) {
    if (k < 1 || k > walk_length) {
      throw std::out_of_range("rotation index " + std::to_string(k) + " outside [1, " +
                              std::to_string(walk_length) + "]");
    }
  }
  std::size_t value() const { return k_; }
  friend bool operator==(const RotationIndex&, const RotationIndex&) = default;

 private:
  std::size_t k_;
};

BernoulliBridge psi(const PointedDyck& p, RotationIndex k);

struct Preimage {
  PointedDyck path;
  RotationIndex k;
};

// The unique (p, k) with psi(p, k) == b. p is b rotated so that its first
// minimum becomes the final index.
Preimage psi_inverse(const BernoulliBridge& b);

// All 2n+1 rotations of p, in order k = 1..2n+1.
std::vector<BernoulliBridge> rotation_class(const PointedDyck& p);

// Index at which psi(p, k) first reaches its minimum, as predicted by the
// rotation position alone (2n+1-k, or 2n+1 for the identity rotation).
std::size_t predicted_first_min(std::size_t walk_length, RotationIndex k);

// (2n+1) #D_{2n} == #B_{2n+1}, in exact integers.
bool cardinality_identity(std::int64_t n);

struct BijectionReport {
  std::int64_t n = 0;
  std::int64_t pairs = 0;            // (p, k) pairs visited
  std::int64_t distinct_images = 0;
  std::int64_t bridges = 0;          // #B_{2n+1} by enumeration
  bool injective = true;
  bool onto = true;
  bool range_bound = true;           // |max p - Y(psi(p, k))| <= 1
  bool first_min = true;             // first minimum where predicted
  bool round_trip = true;            // psi_inverse(psi(p, k)) == (p, k) and back
  bool classes = true;               // 2n+1 members, one pointed Dyck, disjoint
  std::string failure;               // first violation, empty when ok()

  bool ok() const { return failure.empty(); }
};

// Every pair of D*_{2n+1} x [1, 2n+1] and every bridge of B_{2n+1}; n <= 15.
BijectionReport bijection_check_exhaustive(std::int64_t n);

// The range bound and round trip on `pairs` uniform (p, k) pairs.
BijectionReport bijection_check_random(std::int64_t n, std::int64_t pairs, std::uint64_t seed);

}  // namespace dyck
