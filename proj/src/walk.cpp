#include "dyckmax/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyck {

void LatticeWalk::push_step(bool up) {
  const std::size_t i = length();
  if ((i & 63) == 0) bits_.push_back(0);
  if (up) bits_.back() |= std::uint64_t{1} << (i & 63);
  heights_.push_back(heights_.back() + (up ? 1 : -1));
}

LatticeWalk LatticeWalk::from_increments(std::span<const int> increments) {
  LatticeWalk w;
  w.heights_.reserve(increments.size() + 1);
  for (const int d : increments) {
    if (d != 1 && d != -1) {
      throw std::invalid_argument("walk increment must be +1 or -1, got " + std::to_string(d));
    }
    w.push_step(d == 1);
  }
  return w;
}

LatticeWalk LatticeWalk::parse(std::string_view ud) {
  LatticeWalk w;
  w.heights_.reserve(ud.size() + 1);
  for (const char c : ud) {
    if (c == 'U') {
      w.push_step(true);
    } else if (c == 'D') {
      w.push_step(false);
    } else {
      throw std::invalid_argument(std::string("walk string must be over {U,D}, got '") + c + "'");
    }
  }
  return w;
}

LatticeWalk LatticeWalk::from_bits(std::uint64_t bits, std::size_t length) {
  if (length > 64) throw std::invalid_argument("from_bits: length exceeds 64");
  LatticeWalk w;
  w.heights_.reserve(length + 1);
  for (std::size_t i = 0; i < length; ++i) w.push_step((bits >> i) & 1u);
  return w;
}

int LatticeWalk::max() const { return *std::max_element(heights_.begin(), heights_.end()); }
int LatticeWalk::min() const { return *std::min_element(heights_.begin(), heights_.end()); }

std::size_t LatticeWalk::first_argmin() const {
  return static_cast<std::size_t>(std::min_element(heights_.begin(), heights_.end()) -
                                  heights_.begin());
}

std::vector<int> LatticeWalk::increments() const {
  std::vector<int> out(length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = step(i);
  return out;
}

LatticeWalk LatticeWalk::prefix(std::size_t len) const {
  if (len > length()) throw std::out_of_range("prefix longer than walk");
  LatticeWalk w;
  w.heights_.assign(heights_.begin(), heights_.begin() + static_cast<std::ptrdiff_t>(len) + 1);
  w.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>((len + 63) / 64));
  if (len % 64 != 0) w.bits_.back() &= (std::uint64_t{1} << (len % 64)) - 1;
  return w;
}

LatticeWalk LatticeWalk::appended(int step) const {
  if (step != 1 && step != -1) throw std::invalid_argument("walk increment must be +1 or -1");
  LatticeWalk w = *this;
  w.push_step(step == 1);
  return w;
}

std::string LatticeWalk::to_string() const {
  std::string s(length(), 'D');
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (step(i) == 1) s[i] = 'U';
  }
  return s;
}

bool LatticeWalk::is_dyck() const {
  if (length() % 2 != 0 || final_height() != 0) return false;
  return std::all_of(heights_.begin(), heights_.end(), [](int h) { return h >= 0; });
}

bool LatticeWalk::is_pointed_dyck() const {
  const std::size_t n = length();
  if (n % 2 != 1) return false;
  if (heights_[n] != -1 || heights_[n - 1] != 0) return false;
  return std::all_of(heights_.begin(), heights_.end() - 1, [](int h) { return h >= 0; });
}

bool LatticeWalk::is_bridge() const { return length() % 2 == 1 && final_height() == -1; }

bool LatticeWalk::check_invariants() const {
  if (heights_.empty() || heights_[0] != 0) return false;
  if (bits_.size() != (length() + 63) / 64) return false;
  int s = 0;
  for (std::size_t i = 0; i < length(); ++i) {
    s += step(i);
    if (heights_[i + 1] != s) return false;
  }
  return true;
}

LatticeWalk make_walk(std::span<const int> increments) {
  return LatticeWalk::from_increments(increments);
}

DyckPath::DyckPath(LatticeWalk w) : walk_(std::move(w)) {
  if (!walk_.is_dyck()) throw std::invalid_argument("not a Dyck path: " + walk_.to_string());
}

PointedDyck::PointedDyck(LatticeWalk w) : walk_(std::move(w)) {
  if (!walk_.is_pointed_dyck()) {
    throw std::invalid_argument("not a pointed Dyck path: " + walk_.to_string());
  }
}

PointedDyck PointedDyck::from_dyck(const DyckPath& d) {
  return PointedDyck(d.walk().appended(-1));
}

DyckPath PointedDyck::to_dyck() const {
  return DyckPath(walk_.prefix(walk_.length() - 1));
}

BernoulliBridge::BernoulliBridge(LatticeWalk w) : walk_(std::move(w)) {
  if (!walk_.is_bridge()) throw std::invalid_argument("not a bridge: " + walk_.to_string());
}

RangeStat range_stat(const LatticeWalk& w, std::size_t a, std::size_t b) {
  if (a > b || b > w.length()) {
    throw std::out_of_range("range_stat: window [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] outside walk of length " +
                            std::to_string(w.length()));
  }
  const auto h = w.heights().subspan(a, b - a + 1);
  const auto [lo, hi] = std::minmax_element(h.begin(), h.end());
  return {*hi, *lo, *hi - *lo};
}

double interpolate(const LatticeWalk& w, double t) {
  const std::size_t n = w.length();
  if (n == 0) throw std::invalid_argument("interpolate: empty walk");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("interpolate: t outside [0, 1]");
  const double nt = static_cast<double>(n) * t;
  const double fl = std::floor(nt);
  const auto k = std::min(static_cast<std::size_t>(fl), n);
  const double frac = nt - fl;
  const std::size_t up = frac > 0.0 ? std::min(k + 1, n) : k;
  const double s = w.height(k) + frac * (w.height(up) - w.height(k));
  return s / std::sqrt(static_cast<double>(n));
}

BernoulliBridge reverse_negate(const BernoulliBridge& b) {
  const LatticeWalk& w = b.walk();
  const std::size_t len = w.length();
  std::vector<int> inc(len);
  for (std::size_t i = 0; i < len; ++i) inc[i] = w.step(len - 1 - i);
  return BernoulliBridge(make_walk(inc));
}

}  // namespace dyck
