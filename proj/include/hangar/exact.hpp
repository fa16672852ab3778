#ifndef HANGAR_EXACT_HPP
#define HANGAR_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hangar/core.hpp"

namespace hangar::exact {

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InstanceTooLarge"; }
};

class InvalidOracleConfig : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidOracleConfig"; }
};

enum class TimeCandidates { EventDriven, Grid };

struct OracleConfig {
  std::optional<double> grid_step;  // meters; the instance's grid_step when unset
  TimeCandidates time_candidates = TimeCandidates::EventDriven;
  double time_step = 1.0;  // hours, Grid mode only
  std::uint64_t node_budget = 500'000'000;
  double time_budget = 600.0;  // seconds
  /// Cost-bound pruning; feasibility pruning is always on.
  bool prune = true;
  /// Larger |F| throws InstanceTooLarge.
  std::size_t max_future = 4;

  void validate() const;  // throws InvalidOracleConfig
};

enum class OracleStatus { ProvenOptimalOnGrid, BudgetExhausted };

struct OracleResult {
  Solution solution;
  CostBreakdown cost;
  OracleStatus status = OracleStatus::ProvenOptimalOnGrid;
  std::uint64_t nodes_explored = 0;
  /// Leaves whose layout the validator refused; nonzero means the position
  /// model and the validator disagree.
  std::uint64_t rejected_leaves = 0;
};

/// Depth-first branch and bound. Acceptance subsets are enumerated in ACH
/// priority order (accept first), then every commit order of the accepted
/// set with roll-in times from the candidate set and roll-outs at the
/// smallest eps_t shift clear of other events, optionally waiting for a
/// committed roll-out. Positions are solved exactly on the grid for each
/// timing. The ACH schedule is part of the searched space, so the result
/// never costs more than ACH.
OracleResult solve_exact(const Instance& instance, const OracleConfig& config = {});

std::string_view to_string(OracleStatus status) noexcept;

}  // namespace hangar::exact

#endif  // HANGAR_EXACT_HPP
