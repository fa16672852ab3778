#ifndef HANGAR_CORE_HPP
#define HANGAR_CORE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hangar {

/// Absolute tolerance for every time (hours) and length (meters) comparison.
inline constexpr double kTolerance = 1e-6;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable machine-readable name, printed by the CLI on failure.
  virtual const char* kind() const noexcept { return "Error"; }
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "MissingAssignment"; }
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidInstance"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::string field = {});
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

enum class AircraftKind { Current, Future };

/// One aircraft: footprint, schedule targets and penalty economics.
/// Current aircraft carry a fixed initial position; future aircraft carry
/// rejection and arrival-delay penalties.
struct AircraftSpec {
  std::string id;
  AircraftKind kind = AircraftKind::Future;
  double width = 0.0;   // W, meters (x extent)
  double length = 0.0;  // L, meters (y extent)
  double eta = 0.0;     // hours
  double etd = 0.0;     // hours
  double service = 0.0; // hours; remaining service time for current aircraft
  std::optional<double> p_rej;  // future only
  std::optional<double> p_arr;  // future only, per hour
  double p_dep = 0.0;           // per hour
  std::optional<double> x_init;  // current only
  std::optional<double> y_init;  // current only
  bool vip = false;

  bool is_current() const noexcept { return kind == AircraftKind::Current; }
  bool is_future() const noexcept { return kind == AircraftKind::Future; }
  double rejection_penalty() const noexcept { return p_rej.value_or(0.0); }
  double arrival_penalty() const noexcept { return p_arr.value_or(0.0); }

  friend bool operator==(const AircraftSpec&, const AircraftSpec&) = default;
};

struct HangarConfig {
  double hw = 65.0;
  double hl = 60.0;
  double buffer = 5.0;
  double eps_t = 0.1;
  double eps_p = 0.001;
  double grid_step = 1.0;

  /// Throws InvalidInstance when a scalar is out of its domain.
  void validate() const;

  friend bool operator==(const HangarConfig&, const HangarConfig&) = default;
};

/// A hangar plus the current (C) and future (F) aircraft sets. The universal
/// set A is indexed current-first: index i < |C| is current[i], otherwise
/// future[i - |C|].
struct Instance {
  HangarConfig hangar;
  std::vector<AircraftSpec> current;
  std::vector<AircraftSpec> future;
  std::string label;

  std::size_t size() const noexcept { return current.size() + future.size(); }
  const AircraftSpec& at(std::size_t index) const;
  /// Index into A, or nullopt.
  std::optional<std::size_t> index_of(std::string_view id) const;
  const AircraftSpec* find(std::string_view id) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Checks every load-time invariant (ids, footprints, kind-dependent fields,
/// current aircraft inside the hangar and mutually separated).
void validate_instance(const Instance& instance);

/// True when `id` can be used verbatim inside LP-file names.
bool is_valid_identifier(std::string_view id) noexcept;

struct Assignment {
  std::string aircraft_id;
  bool accept = false;
  double x = 0.0;  // front-left corner
  double y = 0.0;
  double roll_in = 0.0;
  double roll_out = 0.0;
  double d_arr = 0.0;
  double d_dep = 0.0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

enum class Provenance { Heuristic, Oracle, Imported, Manual };

struct Solution {
  std::string instance_label;
  std::vector<Assignment> assignments;
  Provenance provenance = Provenance::Manual;

  const Assignment* find(std::string_view id) const;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct CostBreakdown {
  double rejection = 0.0;
  double arrival_delay = 0.0;
  double departure_delay = 0.0;
  double positioning = 0.0;
  double total = 0.0;
};

struct BigM {
  double m_t = 0.0;  // hours
  double m_x = 0.0;  // meters
  double m_y = 0.0;  // meters
};

struct Interval {
  double start = 0.0;
  double end = 0.0;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// M_T = max_f ETA_f + sum_a ServT_a (max over empty F is 0), M_X = HW,
/// M_Y = HL.
BigM derive_big_m(const Instance& instance);

/// Objective value with every term broken out. Delays are recomputed from
/// the roll-in/out times; rejected aircraft contribute only their rejection
/// penalty.
CostBreakdown evaluate_cost(const Instance& instance, const Solution& solution);

/// Presence in the hangar, or nullopt for a rejected aircraft.
std::optional<Interval> presence_interval(const Assignment& assignment);

/// Assignments aligned with the instance's A ordering. Throws
/// MissingAssignment when an aircraft has no assignment or more than one.
std::vector<const Assignment*> align_assignments(const Instance& instance,
                                                 const Solution& solution);

/// An accepted assignment with its delays filled in from the targets.
Assignment make_accepted(const AircraftSpec& spec, double x, double y,
                         double roll_in, double roll_out);
Assignment make_rejected(const AircraftSpec& spec);

std::string_view to_string(AircraftKind kind) noexcept;
std::string_view to_string(Provenance provenance) noexcept;
std::optional<AircraftKind> parse_aircraft_kind(std::string_view text) noexcept;
std::optional<Provenance> parse_provenance(std::string_view text) noexcept;

}  // namespace hangar

#endif  // HANGAR_CORE_HPP
