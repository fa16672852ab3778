#include "hangar/compare.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hangar/ach.hpp"
#include "json.hpp"

namespace hangar::compare {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string num(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CompareRow compare_instance(const Instance& instance, const exact::OracleConfig& config) {
  CompareRow row;
  row.label = instance.label;
  try {
    auto start = std::chrono::steady_clock::now();
    const Solution ach = ach::solve(instance);
    row.ach_time = seconds_since(start);
    row.ach_cost = evaluate_cost(instance, ach).total;

    start = std::chrono::steady_clock::now();
    const auto oracle = exact::solve_exact(instance, config);
    row.oracle_time = seconds_since(start);
    row.oracle_cost = oracle.cost.total;
    row.oracle_status = std::string(exact::to_string(oracle.status));
    if (oracle.status == exact::OracleStatus::ProvenOptimalOnGrid) {
      if (std::abs(*row.oracle_cost) > kTolerance) {
        row.gap_pct = (*row.ach_cost - *row.oracle_cost) / *row.oracle_cost * 100.0;
      } else if (std::abs(*row.ach_cost) <= kTolerance) {
        row.gap_pct = 0.0;
      }
    }
  } catch (const Error& e) {
    row.error = std::string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string rows_to_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "instance,ach_cost,oracle_cost,gap_pct,ach_time_s,oracle_time_s,oracle_status,error\n";
  for (const auto& r : rows) {
    out << csv_field(r.label) << ',' << (r.ach_cost ? num(*r.ach_cost, 6) : "") << ','
        << (r.oracle_cost ? num(*r.oracle_cost, 6) : "") << ','
        << (r.gap_pct ? num(*r.gap_pct, 4) : "") << ',' << num(r.ach_time, 6) << ','
        << num(r.oracle_time, 6) << ',' << r.oracle_status << ',' << csv_field(r.error)
        << '\n';
  }
  return out.str();
}

std::string rows_to_json(const std::vector<CompareRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["instance"] = r.label;
    o["ach_cost"] = r.ach_cost ? nlohmann::ordered_json(*r.ach_cost) : nullptr;
    o["oracle_cost"] = r.oracle_cost ? nlohmann::ordered_json(*r.oracle_cost) : nullptr;
    o["gap_pct"] = r.gap_pct ? nlohmann::ordered_json(*r.gap_pct) : nullptr;
    o["ach_time_s"] = r.ach_time;
    o["oracle_time_s"] = r.oracle_time;
    o["oracle_status"] = r.oracle_status;
    o["error"] = r.error;
    j.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

}  // namespace hangar::compare
