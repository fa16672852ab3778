#ifndef HANGAR_VALIDATOR_HPP
#define HANGAR_VALIDATOR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hangar/core.hpp"

namespace hangar::validator {

/// One kind per constraint family of the formulation.
enum class ViolationKind {
  OutOfBounds,
  SpatialOverlap,
  ServiceTooShort,
  EarlyRollIn,
  MovementTooClose,
  ExitBlocked,
  EntryBlocked,
  CurrentStateMismatch,
  NegativeTime,
};

inline constexpr ViolationKind kAllViolationKinds[] = {
    ViolationKind::OutOfBounds,      ViolationKind::SpatialOverlap,
    ViolationKind::ServiceTooShort,  ViolationKind::EarlyRollIn,
    ViolationKind::MovementTooClose, ViolationKind::ExitBlocked,
    ViolationKind::EntryBlocked,     ViolationKind::CurrentStateMismatch,
    ViolationKind::NegativeTime,
};

struct Violation {
  ViolationKind kind;
  std::vector<std::string> aircraft;  // one or two ids
  std::string detail;
  double magnitude = 0.0;  // meters or hours, always > kTolerance
};

struct ValidationReport {
  bool feasible = true;
  std::vector<Violation> violations;
  CostBreakdown cost;

  std::size_t count(ViolationKind kind) const;
};

/// Runs every check on every accepted aircraft and reports all violations.
/// Throws MissingAssignment when the solution does not cover the instance.
///
/// Blocking is evaluated at each movement instant: aircraft `b` blocks `a`
/// when it is strictly present at a's roll-in or roll-out, sits above `a`
/// with full buffered clearance, and shares a's buffered lane.
ValidationReport validate(const Instance& instance, const Solution& solution);

/// One line per violation, sorted by kind then descending magnitude, or
/// "feasible".
std::string explain(const ValidationReport& report);

/// Machine-readable report (used by `validate --json`).
std::string report_to_json(const ValidationReport& report);

std::string_view to_string(ViolationKind kind) noexcept;

}  // namespace hangar::validator

#endif  // HANGAR_VALIDATOR_HPP
