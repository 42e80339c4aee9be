#include "dyckmax/lemma3.hpp"

#include <gtest/gtest.h>

namespace dyck {
namespace {

double constant(std::int64_t) { return 1.5; }

TEST(Lemma3, EventsReadOnlyTheirPrefix) {
  const auto w = LatticeWalk::parse("UUDDDDUU");
  EXPECT_TRUE(max_at_least(2, 2)(w));
  EXPECT_FALSE(max_at_least(1, 2)(w));
  EXPECT_TRUE(range_at_least(6, 4)(w));
  EXPECT_TRUE(min_at_most(6, 2)(w));
  EXPECT_FALSE(min_at_most(3, 1)(w));
  EXPECT_TRUE(endpoint_at_least(2, 2)(w));
  EXPECT_TRUE(always(3)(w));
  EXPECT_FALSE(never(3)(w));
  EXPECT_THROW(max_at_least(9, 1)(w), std::invalid_argument);
}

TEST(Lemma3, MeasurabilitySearch) {
  for (const auto& e : threshold_events(5)) EXPECT_TRUE(check_measurability(e, 200, 1).measurable) << e.name();
  const PrefixEvent peeks("peeks", 3, [](const LatticeWalk& w) { return w.height(4) > 0; });
  const auto r = check_measurability(peeks, 200, 1);
  EXPECT_FALSE(r.measurable);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Lemma3, WorkedExampleAtTwo) {
  const auto r = lemma3_exhaustive(2, {max_at_least(2, 1), always(2), never(2)}, constant);
  ASSERT_TRUE(r.ok()) << r.failure;
  // UU and UD.
  EXPECT_EQ(r.rows[0].walk.to_string(), "1/2");
  // 4 of the 10 bridges of B_5 start with an up step.
  EXPECT_EQ(r.rows[0].bridge.to_string(), "2/5");
  EXPECT_EQ(r.rows[1].bridge.to_string(), "1");
  EXPECT_EQ(r.rows[1].walk.to_string(), "1");
  EXPECT_EQ(r.rows[2].bridge.to_string(), "0");
}

TEST(Lemma3, AlwaysNeedsConstantAtLeastOne) {
  const auto r = lemma3_exhaustive(3, {always(3)}, [](std::int64_t) { return 0.99; });
  EXPECT_FALSE(r.ok());
}

TEST(Lemma3, ScannedConstantsHoldExhaustively) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto r = lemma3_exhaustive(n);
    EXPECT_TRUE(r.ok()) << "n = " << n << ": " << r.failure;
    for (const auto& row : r.rows) {
      EXPECT_TRUE(row.decomposition_exact) << row.event;
      EXPECT_TRUE(row.inequality) << row.event;
    }
  }
}

TEST(Lemma3, ConstantIsNeeded) {
  // The endpoint events show that the bridge can favour a prefix event.
  const auto r = lemma3_exhaustive(6, threshold_events(6), [](std::int64_t) { return 1.0; });
  EXPECT_FALSE(r.ok());
}

TEST(Lemma3, NonMeasurableEventIsReported) {
  const PrefixEvent peeks("peeks", 2, [](const LatticeWalk& w) { return w.final_height() > 0; });
  const auto r = lemma3_exhaustive(2, {peeks}, constant);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.failure.find("not decided"), std::string::npos);
}

}  // namespace
}  // namespace dyck
