#pragma once

// Prefix events and the exhaustive comparison of their probabilities under
// the bridge measure on B_{2n+1} and the free-walk measure on W_h.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dyckmax/counting.hpp"
#include "dyckmax/walk.hpp"

namespace dyck {

// An event decided by the first `horizon` steps. The predicate receives a
// walk of length >= horizon and must not look past step `horizon`.
class PrefixEvent {
 public:
  PrefixEvent(std::string name, std::int64_t horizon, std::function<bool(const LatticeWalk&)> pred);

  const std::string& name() const { return name_; }
  std::int64_t horizon() const { return horizon_; }
  // Throws std::invalid_argument if w is shorter than the horizon.
  bool operator()(const LatticeWalk& w) const;

 private:
  std::string name_;
  std::int64_t horizon_;
  std::function<bool(const LatticeWalk&)> pred_;
};

// max_{0..h} S >= x
PrefixEvent max_at_least(std::int64_t h, int x);
// Y_[0,h] >= x
PrefixEvent range_at_least(std::int64_t h, int x);
// min_{0..h} S <= -x
PrefixEvent min_at_most(std::int64_t h, int x);
// S_h >= x
PrefixEvent endpoint_at_least(std::int64_t h, int x);
PrefixEvent always(std::int64_t h);
PrefixEvent never(std::int64_t h);

// All of the above over every threshold that splits W_h nontrivially, plus
// one threshold on each side.
std::vector<PrefixEvent> threshold_events(std::int64_t h);

struct MeasurabilityResult {
  bool measurable = true;
  std::int64_t pairs_checked = 0;
  // Two walks sharing the first `horizon` steps on which the event differs.
  std::string witness;
};

// Randomized search for a counterexample: pairs of walks of length
// horizon + extra that agree on the first `horizon` steps.
MeasurabilityResult check_measurability(const PrefixEvent& event, std::int64_t pairs, std::uint64_t seed,
                                        std::size_t extra = 8);

struct Lemma3Row {
  std::string event;
  std::int64_t horizon = 0;
  ExactProb bridge;  // P_b(A) over B_{2n+1}
  ExactProb walk;    // P_w(A) over W_horizon
  // sum_k P_w(A | S_h = k) P_b(S_h = k), which must equal `bridge`.
  mpq_class decomposition;
  bool decomposition_exact = false;
  double c0 = 0.0;
  bool inequality = false;  // bridge <= c0 * walk, compared exactly
  bool measurable = true;
};

struct Lemma3Report {
  std::int64_t n = 0;
  std::vector<Lemma3Row> rows;
  std::string failure;  // first violation, empty when ok()
  bool ok() const { return failure.empty(); }
};

// Exhaustive over B_{2n+1} (n <= 12) and W_h for each event's horizon h
// (h <= 2n+1). c0_for_horizon(h) supplies the constant for horizon h.
Lemma3Report lemma3_exhaustive(std::int64_t n, const std::vector<PrefixEvent>& events,
                               const std::function<double(std::int64_t)>& c0_for_horizon);

// Events of horizon n and n+1 with the certified constants from c0_scan.
Lemma3Report lemma3_exhaustive(std::int64_t n);

}  // namespace dyck
