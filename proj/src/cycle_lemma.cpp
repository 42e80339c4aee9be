#include "dyckmax/cycle_lemma.hpp"

#include <cstdlib>
#include <set>

#include "dyckmax/counting.hpp"
#include "dyckmax/exhaustive.hpp"
#include "dyckmax/sampling.hpp"

namespace dyck {
namespace {

LatticeWalk rotate(const LatticeWalk& w, std::size_t shift) {
  const std::size_t len = w.length();
  std::vector<int> inc(len);
  std::size_t src = shift % len;
  for (std::size_t i = 0; i < len; ++i) {
    inc[i] = w.step(src);
    if (++src == len) src = 0;
  }
  return make_walk(inc);
}

}  // namespace

BernoulliBridge psi(const PointedDyck& p, RotationIndex k) {
  const LatticeWalk& w = p.walk();
  if (k.value() > w.length()) throw std::out_of_range("rotation index exceeds walk length");
  return BernoulliBridge(rotate(w, k.value()));
}

Preimage psi_inverse(const BernoulliBridge& b) {
  const LatticeWalk& w = b.walk();
  const std::size_t len = w.length();
  const std::size_t m = w.first_argmin();
  // Rotating b by m puts the steps after its first minimum in front; every
  // partial sum of that word is >= 0 until the last step lands on -1.
  PointedDyck p(rotate(w, m));
  const std::size_t k = m == len ? len : len - m;
  return {std::move(p), RotationIndex(k, len)};
}

std::vector<BernoulliBridge> rotation_class(const PointedDyck& p) {
  const std::size_t len = p.walk().length();
  std::vector<BernoulliBridge> out;
  out.reserve(len);
  for (std::size_t k = 1; k <= len; ++k) out.push_back(psi(p, RotationIndex(k, len)));
  return out;
}

std::size_t predicted_first_min(std::size_t walk_length, RotationIndex k) {
  return k.value() == walk_length ? walk_length : walk_length - k.value();
}

bool cardinality_identity(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("cardinality_identity: n must be >= 0");
  return catalan(n) * (2 * n + 1) == bridge_count(n);
}

namespace {

void fail(BijectionReport& r, bool& flag, const std::string& what) {
  flag = false;
  if (r.failure.empty()) r.failure = what;
}

void check_pair(BijectionReport& r, const PointedDyck& p, RotationIndex k) {
  const std::size_t len = p.walk().length();
  const BernoulliBridge b = psi(p, k);
  const auto label = [&] { return p.walk().to_string() + " k=" + std::to_string(k.value()); };
  const int y = b.walk().max() - b.walk().min();
  if (std::abs(p.walk().max() - y) > 1) fail(r, r.range_bound, "range bound violated at " + label());
  if (b.walk().first_argmin() != predicted_first_min(len, k)) {
    fail(r, r.first_min, "first minimum misplaced at " + label());
  }
  const Preimage back = psi_inverse(b);
  if (!(back.path.walk() == p.walk()) || !(back.k == k)) {
    fail(r, r.round_trip, "psi_inverse(psi) != id at " + label());
  }
  const BernoulliBridge again = psi(back.path, back.k);
  if (!(again.walk() == b.walk())) fail(r, r.round_trip, "psi(psi_inverse) != id at " + label());
  ++r.pairs;
}

}  // namespace

BijectionReport bijection_check_exhaustive(std::int64_t n) {
  if (n < 0 || n > 15) throw std::invalid_argument("bijection_check_exhaustive: n must lie in [0, 15]");
  BijectionReport r;
  r.n = n;
  const std::size_t len = static_cast<std::size_t>(2 * n + 1);
  std::set<LatticeWalk> images;
  for_each_dyck(static_cast<std::size_t>(n), [&](const LatticeWalk& d) {
    const PointedDyck p(d.appended(-1));
    const auto cls = rotation_class(p);
    std::set<LatticeWalk> members;
    int pointed = 0;
    for (std::size_t k = 1; k <= len; ++k) {
      check_pair(r, p, RotationIndex(k, len));
      const LatticeWalk& w = cls[k - 1].walk();
      members.insert(w);
      if (w.is_pointed_dyck()) ++pointed;
      if (!images.insert(w).second) fail(r, r.injective, "two pairs map to " + w.to_string());
    }
    if (members.size() != len || pointed != 1 || !(cls.back().walk() == p.walk())) {
      fail(r, r.classes, "malformed rotation class of " + p.walk().to_string());
    }
  });
  r.distinct_images = static_cast<std::int64_t>(images.size());
  for_each_bridge(static_cast<std::size_t>(n), [&](const LatticeWalk& w) {
    ++r.bridges;
    if (!images.contains(w)) fail(r, r.onto, "bridge " + w.to_string() + " has no preimage");
  });
  if (BigCount(r.bridges) != bridge_count(n) || BigCount(r.pairs) != catalan(n) * (2 * n + 1)) {
    fail(r, r.onto, "enumerated cardinalities disagree with the counting formulas");
  }
  return r;
}

BijectionReport bijection_check_random(std::int64_t n, std::int64_t pairs, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("bijection_check_random: n must be >= 0");
  BijectionReport r;
  r.n = n;
  RngStream rng(seed, 0);
  const std::size_t len = static_cast<std::size_t>(2 * n + 1);
  for (std::int64_t i = 0; i < pairs; ++i) {
    const PointedDyck p = PointedDyck::from_dyck(sample_dyck(n, rng));
    check_pair(r, p, RotationIndex(1 + rng.uniform_below(len), len));
  }
  return r;
}

}  // namespace dyck
