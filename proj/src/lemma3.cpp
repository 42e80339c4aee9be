#include "dyckmax/lemma3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dyckmax/bridge_stats.hpp"
#include "dyckmax/exhaustive.hpp"
#include "dyckmax/sampling.hpp"

namespace dyck {
namespace {

struct PrefixStats {
  int max = 0;
  int min = 0;
  int end = 0;
};

PrefixStats prefix_stats(const LatticeWalk& w, std::int64_t h) {
  const auto s = w.heights().first(static_cast<std::size_t>(h) + 1);
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return {*hi, *lo, s.back()};
}

std::string label(const char* what, std::int64_t h, int x) {
  return std::string(what) + "[h=" + std::to_string(h) + ",x=" + std::to_string(x) + "]";
}

}  // namespace

PrefixEvent::PrefixEvent(std::string name, std::int64_t horizon, std::function<bool(const LatticeWalk&)> pred)
    : name_(std::move(name)), horizon_(horizon), pred_(std::move(pred)) {
  if (horizon_ < 0) throw std::invalid_argument("PrefixEvent: negative horizon");
  if (!pred_) throw std::invalid_argument("PrefixEvent: empty predicate");
}

bool PrefixEvent::operator()(const LatticeWalk& w) const {
  if (static_cast<std::int64_t>(w.length()) < horizon_) {
    throw std::invalid_argument("event " + name_ + " needs a walk of at least " + std::to_string(horizon_) +
                                " steps");
  }
  return pred_(w);
}

PrefixEvent max_at_least(std::int64_t h, int x) {
  return {label("max>=", h, x), h, [h, x](const LatticeWalk& w) { return prefix_stats(w, h).max >= x; }};
}

PrefixEvent range_at_least(std::int64_t h, int x) {
  return {label("range>=", h, x), h, [h, x](const LatticeWalk& w) {
            const auto s = prefix_stats(w, h);
            return s.max - s.min >= x;
          }};
}

PrefixEvent min_at_most(std::int64_t h, int x) {
  return {label("min<=-", h, x), h, [h, x](const LatticeWalk& w) { return prefix_stats(w, h).min <= -x; }};
}

PrefixEvent endpoint_at_least(std::int64_t h, int x) {
  return {label("end>=", h, x), h, [h, x](const LatticeWalk& w) { return w.height(static_cast<std::size_t>(h)) >= x; }};
}

PrefixEvent always(std::int64_t h) {
  return {"always[h=" + std::to_string(h) + "]", h, [](const LatticeWalk&) { return true; }};
}

PrefixEvent never(std::int64_t h) {
  return {"never[h=" + std::to_string(h) + "]", h, [](const LatticeWalk&) { return false; }};
}

std::vector<PrefixEvent> threshold_events(std::int64_t h) {
  std::vector<PrefixEvent> out;
  const int top = static_cast<int>(h) + 1;
  for (int x = 0; x <= top; ++x) out.push_back(max_at_least(h, x));
  for (int x = 0; x <= top; ++x) out.push_back(range_at_least(h, x));
  for (int x = 0; x <= top; ++x) out.push_back(min_at_most(h, x));
  for (int x = -top; x <= top; ++x) out.push_back(endpoint_at_least(h, x));
  out.push_back(always(h));
  out.push_back(never(h));
  return out;
}

MeasurabilityResult check_measurability(const PrefixEvent& event, std::int64_t pairs, std::uint64_t seed,
                                        std::size_t extra) {
  MeasurabilityResult r;
  RngStream rng(seed, 1);
  const auto h = static_cast<std::size_t>(event.horizon());
  std::vector<int> a(h + extra), b(h + extra);
  for (std::int64_t i = 0; i < pairs; ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      a[j] = rng.uniform_below(2) != 0 ? 1 : -1;
      b[j] = j < h ? a[j] : (rng.uniform_below(2) != 0 ? 1 : -1);
    }
    const LatticeWalk wa = make_walk(a), wb = make_walk(b);
    ++r.pairs_checked;
    if (event(wa) != event(wb)) {
      r.measurable = false;
      r.witness = wa.to_string() + " / " + wb.to_string();
      break;
    }
  }
  return r;
}

Lemma3Report lemma3_exhaustive(std::int64_t n, const std::vector<PrefixEvent>& events,
                               const std::function<double(std::int64_t)>& c0_for_horizon) {
  if (n < 0 || n > 12) throw std::invalid_argument("lemma3_exhaustive: n must lie in [0, 12]");
  const std::int64_t len = 2 * n + 1;
  Lemma3Report report;
  report.n = n;
  const std::size_t m = events.size();
  // Bridge counts per event, and walk counts per (event, S_h).
  std::vector<BigCount> bridge_hits(m);
  std::vector<std::map<std::int64_t, BigCount>> walk_hits(m);
  std::vector<std::uint64_t> hits(m, 0);
  for (const auto& e : events) {
    if (e.horizon() > len) throw std::invalid_argument("event " + e.name() + " has horizon beyond 2n+1");
  }
  for_each_bridge(static_cast<std::size_t>(n), [&](const LatticeWalk& w) {
    for (std::size_t i = 0; i < m; ++i) hits[i] += events[i](w) ? 1 : 0;
  });
  for (std::size_t i = 0; i < m; ++i) bridge_hits[i] = static_cast<unsigned long>(hits[i]);

  std::map<std::int64_t, std::vector<std::size_t>> by_horizon;
  for (std::size_t i = 0; i < m; ++i) by_horizon[events[i].horizon()].push_back(i);
  for (const auto& [h, idx] : by_horizon) {
    for_each_walk(static_cast<std::size_t>(h), [&](const LatticeWalk& w) {
      const std::int64_t k = w.final_height();
      for (const auto i : idx) {
        if (events[i](w)) walk_hits[i][k] += 1;
      }
    });
  }

  const BigCount bridges = walk_count(len, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = events[i];
    const std::int64_t h = e.horizon();
    Lemma3Row row;
    row.event = e.name();
    row.horizon = h;
    row.bridge = ExactProb(bridge_hits[i], bridges);
    BigCount walk_total = 0;
    row.decomposition = 0;
    for (const auto& [k, c] : walk_hits[i]) {
      walk_total += c;
      const BigCount at_k = walk_count(h, k);
      mpq_class given(c, at_k);
      mpq_class midpoint(at_k * walk_count(len - h, -1 - k), bridges);
      given.canonicalize();
      midpoint.canonicalize();
      row.decomposition += given * midpoint;
    }
    BigCount all = 1;
    all <<= static_cast<mp_bitcnt_t>(h);
    row.walk = ExactProb(walk_total, all);
    row.decomposition_exact = row.decomposition == row.bridge.value();
    row.c0 = c0_for_horizon(h);
    row.inequality = row.bridge.value() <= mpq_class(row.c0) * row.walk.value();
    row.measurable = check_measurability(e, 64, 42 + i).measurable;
    if (report.ok()) {
      if (!row.measurable) {
        report.failure = "event " + row.event + " is not decided by its first " + std::to_string(h) + " steps";
      } else if (!row.decomposition_exact) {
        report.failure = "midpoint decomposition mismatch for " + row.event;
      } else if (!row.inequality) {
        report.failure = "P_b > C0 P_w for " + row.event;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Lemma3Report lemma3_exhaustive(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("lemma3_exhaustive: n must be >= 1");
  const C0Scan scan = c0_scan(std::max<std::int64_t>(n, 64));
  auto events = threshold_events(n);
  auto more = threshold_events(n + 1);
  events.insert(events.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return lemma3_exhaustive(n, events, [&](std::int64_t h) {
    if (h == n) return scan.certified_horizon_n;
    if (h == n + 1) return scan.certified_horizon_n_plus_1;
    throw std::invalid_argument("no certified constant for horizon " + std::to_string(h));
  });
}

}  // namespace dyck
