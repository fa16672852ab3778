#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hangar/ach.hpp"
#include "hangar/geometry.hpp"
#include "hangar/validator.hpp"

namespace hangar {
namespace {

using testing::future;
using testing::instance_of;
using validator::ViolationKind;

std::vector<ViolationKind> kinds(const validator::ValidationReport& r) {
  std::vector<ViolationKind> out;
  for (const auto& v : r.violations) out.push_back(v.kind);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(Validator, BlockingExitBlockedThenFeasible) {
  const auto inst = testing::blocking_instance();
  const auto blocked = validator::validate(inst, testing::blocking_solution(100));
  EXPECT_FALSE(blocked.feasible);
  EXPECT_EQ(kinds(blocked), std::vector<ViolationKind>{ViolationKind::ExitBlocked});
  EXPECT_NEAR(blocked.violations[0].magnitude, 20.1, 1e-9);
  EXPECT_TRUE(validator::validate(inst, testing::blocking_solution(120.1)).feasible);
}

TEST(Validator, SamePositionDisjointTimesFeasible) {
  const auto inst = instance_of({future("F1", 30, 30, 0, 10, 10), future("F2", 30, 30, 0, 10, 30)});
  Solution s{inst.label,
             {make_accepted(inst.future[0], 5, 5, 0, 10), make_accepted(inst.future[1], 5, 5, 10.1, 20.1)},
             Provenance::Manual};
  EXPECT_TRUE(validator::validate(inst, s).feasible);
}

TEST(Validator, XGapShortByOneMillimetre) {
  const auto inst = instance_of({future("F1", 20, 20, 0, 10, 10), future("F2", 20, 20, 1, 10, 11)});
  Solution s{inst.label,
             {make_accepted(inst.future[0], 5, 5, 0, 10),
              make_accepted(inst.future[1], 5 + 20 + 5 - 0.001, 10, 1, 11)},
             Provenance::Manual};
  const auto r = validator::validate(inst, s);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::SpatialOverlap);
  EXPECT_NEAR(r.violations[0].magnitude, 0.001, 1e-9);
}

TEST(Validator, RollOutsFiveHundredthsApart) {
  const auto inst = instance_of({future("F1", 20, 20, 0, 200, 200), future("F2", 20, 20, 1, 199.05, 200.05)});
  Solution s{inst.label,
             {make_accepted(inst.future[0], 5, 5, 0, 200.0),
              make_accepted(inst.future[1], 35, 5, 1, 200.05)},
             Provenance::Manual};
  const auto r = validator::validate(inst, s);
  EXPECT_EQ(kinds(r), std::vector<ViolationKind>{ViolationKind::MovementTooClose});
  EXPECT_NEAR(r.violations[0].magnitude, 0.05, 1e-9);
}

TEST(Explain, EmptyReport) {
  EXPECT_EQ(validator::explain(validator::ValidationReport{}), "feasible\n");
}

TEST(Explain, OutOfBoundsLine) {
  const auto inst = instance_of({future("F1", 20, 20, 0, 10, 10)});
  Solution s{inst.label, {make_accepted(inst.future[0], 3, 5, 0, 10)}, Provenance::Manual};
  const auto text = validator::explain(validator::validate(inst, s));
  EXPECT_EQ(text,
            "OutOfBounds F1: left side intrudes 2.000000 m into the wall buffer "
            "(magnitude 2.000000)\n");
}

TEST(Explain, MixedReportIsOrderedByKindThenMagnitude) {
  const auto inst = instance_of({future("F1", 20, 20, 5, 10, 15), future("F2", 20, 20, 5, 10, 15)});
  Solution s{inst.label,
             {make_accepted(inst.future[0], 4, 5, 4, 14), make_accepted(inst.future[1], 2, 6, 5, 14.05)},
             Provenance::Manual};
  const auto r = validator::validate(inst, s);
  const auto text = validator::explain(r);
  auto reversed = r;
  std::reverse(reversed.violations.begin(), reversed.violations.end());
  EXPECT_EQ(validator::explain(reversed), text);
  // Kinds appear in declaration order, larger magnitude first within a kind.
  EXPECT_LT(text.find("OutOfBounds F2"), text.find("OutOfBounds F1"));
  EXPECT_LT(text.find("OutOfBounds"), text.find("SpatialOverlap"));
  EXPECT_LT(text.find("SpatialOverlap"), text.find("EarlyRollIn"));
  EXPECT_LT(text.find("EarlyRollIn"), text.find("MovementTooClose"));
}

TEST(Validator, CurrentMustStayPut) {
  const auto inst = instance_of({}, {testing::current("C1", 20, 20, 5, 5, 10, 10)});
  Solution ok{inst.label, {make_accepted(inst.current[0], 5, 5, 0, 10)}, Provenance::Manual};
  EXPECT_TRUE(validator::validate(inst, ok).feasible);
  Solution moved{inst.label, {make_accepted(inst.current[0], 6, 5, 0, 10)}, Provenance::Manual};
  EXPECT_EQ(kinds(validator::validate(inst, moved)),
            std::vector<ViolationKind>{ViolationKind::CurrentStateMismatch});
  Solution gone{inst.label, {make_rejected(inst.current[0])}, Provenance::Manual};
  EXPECT_EQ(kinds(validator::validate(inst, gone)),
            std::vector<ViolationKind>{ViolationKind::CurrentStateMismatch});
}

TEST(Validator, EntryBlocked) {
  // F2 sits above F1's lane from t=0 and is still there when F1 arrives.
  const auto inst = instance_of({future("F1", 20, 20, 5, 10, 15), future("F2", 20, 20, 0, 30, 30)});
  Solution s{inst.label,
             {make_accepted(inst.future[0], 5, 5, 5, 40), make_accepted(inst.future[1], 5, 30, 0, 30)},
             Provenance::Manual};
  EXPECT_EQ(kinds(validator::validate(inst, s)),
            std::vector<ViolationKind>{ViolationKind::EntryBlocked});
}

TEST(Validator, NegativeTimeAndServiceTooShort) {
  const auto inst = instance_of({}, {testing::current("C1", 20, 20, 5, 5, 10, 10)});
  Solution s{inst.label, {make_accepted(inst.current[0], 5, 5, 0, -1)}, Provenance::Manual};
  EXPECT_EQ(kinds(validator::validate(inst, s)),
            (std::vector<ViolationKind>{ViolationKind::ServiceTooShort, ViolationKind::NegativeTime}));
}

// Metamorphic and fault-injection properties on ACH solutions of instances
// without current aircraft (their roll-in is pinned at 0, so shifting time
// would be a current-state change rather than a schedule change).
class ValidatorProperties : public ::testing::TestWithParam<int> {};

Solution shifted(const Solution& s, double delta) {
  Solution out = s;
  for (auto& a : out.assignments) {
    if (!a.accept) continue;
    a.roll_in += delta;
    a.roll_out += delta;
  }
  return out;
}

TEST_P(ValidatorProperties, ShiftLaterStaysFeasible) {
  const auto inst = testing::generated(10, GetParam(), GetParam() % 2 == 1);
  const auto s = ach::solve(inst);
  ASSERT_TRUE(validator::validate(inst, s).feasible);
  for (double delta : {0.1, 3.7, 250.0}) {
    EXPECT_TRUE(validator::validate(inst, shifted(s, delta)).feasible) << delta;
  }
}

TEST_P(ValidatorProperties, ShiftEarlierTriggersOnlyEarlyRollIn) {
  const auto inst = testing::generated(10, GetParam(), GetParam() % 2 == 1);
  const auto s = ach::solve(inst);
  double earliest = 1e18;
  double slack = 1e18;
  for (const auto& a : s.assignments) {
    if (!a.accept) continue;
    earliest = std::min(earliest, a.roll_in);
    slack = std::min(slack, a.roll_in - inst.find(a.aircraft_id)->eta);
  }
  if (earliest > 1e17) GTEST_SKIP() << "nothing accepted";
  // Go past the smallest ETA slack but stay non-negative.
  const double delta = std::min(slack + 0.5, earliest);
  if (delta <= slack + kTolerance) GTEST_SKIP() << "no room below an ETA";
  const auto r = validator::validate(inst, shifted(s, -delta));
  EXPECT_EQ(kinds(r), std::vector<ViolationKind>{ViolationKind::EarlyRollIn});
}

TEST_P(ValidatorProperties, InjectedFaults) {
  const auto inst = testing::generated(9, GetParam(), GetParam() % 2 == 0);
  const auto s = ach::solve(inst);
  const auto& h = inst.hangar;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < s.assignments.size(); ++i) {
    const auto& a = s.assignments[i];
    if (!a.accept) continue;
    const auto* spec = inst.find(a.aircraft_id);
    const Interval ia = *presence_interval(a);
    bool alone = true;
    for (const auto& b : s.assignments) {
      if (&b == &a || !b.accept) continue;
      const Interval ib = *presence_interval(b);
      // Alone in time with 1 h of margin either side.
      if (ib.end > ia.start - 1.0 && ib.start < ia.end + 1.0) alone = false;
    }
    if (!alone) continue;
    ++checked;

    auto out_of_bounds = s;
    out_of_bounds.assignments[i].x = h.hw - spec->width;  // right edge touches the wall
    EXPECT_EQ(kinds(validator::validate(inst, out_of_bounds)),
              std::vector<ViolationKind>{ViolationKind::OutOfBounds});

    auto early = s;
    early.assignments[i].roll_in = spec->eta - 0.5;
    early.assignments[i].roll_out = early.assignments[i].roll_in + spec->service + 0.5;
    if (early.assignments[i].roll_in >= 0) {
      EXPECT_EQ(kinds(validator::validate(inst, early)),
                std::vector<ViolationKind>{ViolationKind::EarlyRollIn});
    }
  }
  // Onto another footprint: take a co-present pair, move the one that fits
  // onto the other's corner.
  for (std::size_t i = 0; i < s.assignments.size(); ++i) {
    for (std::size_t j = 0; j < s.assignments.size(); ++j) {
      const auto& a = s.assignments[i];
      const auto& b = s.assignments[j];
      if (i == j || !a.accept || !b.accept) continue;
      if (!overlaps(*presence_interval(a), *presence_interval(b))) continue;
      const auto* spec = inst.find(a.aircraft_id);
      if (!within_hangar(footprint(*spec, b.x, b.y), h)) continue;
      auto stacked = s;
      stacked.assignments[i].x = b.x;
      stacked.assignments[i].y = b.y;
      const auto r = validator::validate(inst, stacked);
      EXPECT_GE(r.count(ViolationKind::SpatialOverlap), 1u);
      EXPECT_EQ(r.count(ViolationKind::OutOfBounds), 0u);
      ++checked;
    }
  }
  (void)checked;
}

INSTANTIATE_TEST_SUITE_P(Seeds, ValidatorProperties, ::testing::Range(1, 16));

}  // namespace
}  // namespace hangar
