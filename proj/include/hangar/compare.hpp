#ifndef HANGAR_COMPARE_HPP
#define HANGAR_COMPARE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hangar/core.hpp"
#include "hangar/exact.hpp"

namespace hangar::compare {

struct CompareRow {
  std::string label;
  std::optional<double> ach_cost;
  std::optional<double> oracle_cost;
  /// (ach - oracle) / oracle * 100; only for ProvenOptimalOnGrid.
  std::optional<double> gap_pct;
  double ach_time = 0.0;     // seconds
  double oracle_time = 0.0;  // seconds
  std::string oracle_status;  // empty when the oracle did not run
  std::string error;
};

/// Solves one instance both ways. Errors are caught and stored in `error`.
CompareRow compare_instance(const Instance& instance, const exact::OracleConfig& config);

/// Header: instance,ach_cost,oracle_cost,gap_pct,ach_time_s,oracle_time_s,oracle_status,error
std::string rows_to_csv(const std::vector<CompareRow>& rows);
std::string rows_to_json(const std::vector<CompareRow>& rows);

}  // namespace hangar::compare

#endif  // HANGAR_COMPARE_HPP
