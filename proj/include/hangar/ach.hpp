#ifndef HANGAR_ACH_HPP
#define HANGAR_ACH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hangar/core.hpp"
#include "hangar/geometry.hpp"

namespace hangar::ach {

/// Lexicographic priority: higher rejection penalty, then earlier ETA, then
/// shorter service, then id.
struct PriorityKey {
  double p_rej = 0.0;
  double eta = 0.0;
  double serv = 0.0;
  std::string id;

  static PriorityKey of(const AircraftSpec& spec);
  /// True when `*this` is handled before `other`.
  bool precedes(const PriorityKey& other) const;
};

/// Future aircraft ids in processing order.
std::vector<std::string> prioritize(const Instance& instance);

/// Break-even roll-in time ETA + P^Rej / P^Arr; +inf when P^Arr is zero.
double max_admissible_time(const AircraftSpec& spec);

struct Committed {
  const AircraftSpec* spec = nullptr;
  Rect rect;
  Interval stay;
};

/// Aircraft whose position and times are already fixed, plus the sorted list
/// of their movement events (future roll-ins and every roll-out).
class Schedule {
 public:
  explicit Schedule(HangarConfig hangar) : hangar_(hangar) {}

  void commit(const AircraftSpec& spec, double x, double y, double roll_in,
              double roll_out);

  const HangarConfig& hangar() const noexcept { return hangar_; }
  const std::vector<Committed>& entries() const noexcept { return entries_; }
  const std::vector<double>& events() const noexcept { return events_; }
  /// Latest movement event, or -inf when there is none.
  double last_event() const noexcept;
  /// At least eps_t away from every committed movement event.
  bool clear_of_events(double t) const;

 private:
  HangarConfig hangar_;
  std::vector<Committed> entries_;
  std::vector<double> events_;
};

/// Current aircraft committed at their initial positions. Their roll-outs are
/// resolved front-to-back so that no current aircraft leaves while another
/// current aircraft still blocks its lane.
Schedule initial_schedule(const Instance& instance, const HangarConfig& hangar);

/// Smallest t >= t_in + ServT, stepped in eps_t increments, that keeps eps_t
/// clearance from every committed movement event.
double resolve_roll_out(const AircraftSpec& spec, double t_in,
                        const Schedule& fixed, double eps_t);

/// Time-only part of the placement check (ETA, service, event clearance).
bool times_admissible(const AircraftSpec& spec, double t_in, double t_out,
                      const Schedule& fixed);

/// Full check of one placement with explicit roll-in and roll-out.
bool is_valid_placement(const AircraftSpec& spec, double x, double y,
                        double t_in, double t_out, const Schedule& fixed);

/// Full check with the roll-out chosen by resolve_roll_out.
bool is_valid_spot(const AircraftSpec& spec, double x, double y, double t_in,
                   const Schedule& fixed, const Instance& instance);

struct PlacementCandidate {
  double x = 0.0;
  double y = 0.0;
  double t_in = 0.0;
  double t_out = 0.0;
  double score = 0.0;  // x + y
};

/// Exhaustive grid scan at roll-in time t_in; returns the valid spot with the
/// smallest x + y (ties: smaller y, then smaller x).
std::optional<PlacementCandidate> find_best_placement(
    const AircraftSpec& spec, double t_in, const Schedule& fixed,
    const Instance& instance);

struct Options {
  std::optional<double> grid_step;  // overrides the instance's grid_step
};

/// Prioritize-then-place construction. Every output validates feasible.
Solution solve(const Instance& instance, const Options& options = {});

}  // namespace hangar::ach

#endif  // HANGAR_ACH_HPP
