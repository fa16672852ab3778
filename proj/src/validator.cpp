#include "hangar/validator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hangar/geometry.hpp"
#include "json.hpp"

namespace hangar::validator {

namespace {

std::string fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

struct Event {
  double time;
  std::string id;
  const char* what;
};

class Collector {
 public:
  void add(ViolationKind kind, std::vector<std::string> ids, std::string detail,
           double magnitude) {
    if (!(magnitude > kTolerance)) return;
    out_.push_back(Violation{kind, std::move(ids), std::move(detail), magnitude});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

void check_current_state(const AircraftSpec& spec, const Assignment& a,
                         Collector& out) {
  double mismatch = 0.0;
  std::string what;
  if (!a.accept) {
    mismatch += 1.0;
    what += "not accepted; ";
  }
  const double dx = std::abs(a.x - *spec.x_init);
  const double dy = std::abs(a.y - *spec.y_init);
  const double din = std::abs(a.roll_in);
  if (dx > kTolerance) what += "x differs by " + fixed(dx) + " m; ";
  if (dy > kTolerance) what += "y differs by " + fixed(dy) + " m; ";
  if (din > kTolerance) what += "roll_in is " + fixed(a.roll_in) + " h, not 0; ";
  mismatch += (dx > kTolerance ? dx : 0.0) + (dy > kTolerance ? dy : 0.0) +
              (din > kTolerance ? din : 0.0);
  if (!what.empty()) {
    what.erase(what.size() - 2);
    out.add(ViolationKind::CurrentStateMismatch, {spec.id}, what, mismatch);
  }
}

void check_single(const AircraftSpec& spec, const Assignment& a,
                  const HangarConfig& h, Collector& out) {
  if (a.roll_in < -kTolerance) {
    out.add(ViolationKind::NegativeTime, {spec.id},
            "roll_in " + fixed(a.roll_in) + " h is negative", -a.roll_in);
  }
  if (a.roll_out < -kTolerance) {
    out.add(ViolationKind::NegativeTime, {spec.id},
            "roll_out " + fixed(a.roll_out) + " h is negative", -a.roll_out);
  }

  const Rect r = footprint(spec, a);
  const double left = h.buffer - r.x;
  const double right = r.x + r.w - (h.hw - h.buffer);
  const double bottom = h.buffer - r.y;
  const double top = r.y + r.l - (h.hl - h.buffer);
  out.add(ViolationKind::OutOfBounds, {spec.id},
          "left side intrudes " + fixed(left) + " m into the wall buffer", left);
  out.add(ViolationKind::OutOfBounds, {spec.id},
          "right side intrudes " + fixed(right) + " m into the wall buffer",
          right);
  out.add(ViolationKind::OutOfBounds, {spec.id},
          "back side intrudes " + fixed(bottom) + " m into the wall buffer",
          bottom);
  out.add(ViolationKind::OutOfBounds, {spec.id},
          "front side intrudes " + fixed(top) + " m into the wall buffer", top);

  if (spec.is_future()) {
    const double early = spec.eta - a.roll_in;
    out.add(ViolationKind::EarlyRollIn, {spec.id},
            "rolls in " + fixed(early) + " h before its ETA " + fixed(spec.eta),
            early);
  }
  const double missing = spec.service - (a.roll_out - a.roll_in);
  out.add(ViolationKind::ServiceTooShort, {spec.id},
          "stay is " + fixed(missing) + " h shorter than its service time " +
              fixed(spec.service),
          missing);
}

}  // namespace

std::size_t ValidationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [&](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate(const Instance& instance, const Solution& solution) {
  const auto aligned = align_assignments(instance, solution);
  const auto& h = instance.hangar;
  const std::size_t n = instance.size();
  Collector out;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& spec = instance.at(i);
    if (spec.is_current()) check_current_state(spec, *aligned[i], out);
    if (aligned[i]->accept) check_single(spec, *aligned[i], h, out);
  }

  // Buffered spatial separation for co-present pairs.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = *aligned[i];
    if (!a.accept) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& b = *aligned[j];
      if (!b.accept) continue;
      if (!overlaps(*presence_interval(a), *presence_interval(b))) continue;
      const double shortfall =
          separation_shortfall(footprint(instance.at(i), a),
                               footprint(instance.at(j), b), h.buffer);
      out.add(ViolationKind::SpatialOverlap, {a.aircraft_id, b.aircraft_id},
              "co-present and " + fixed(shortfall) +
                  " m short of buffered separation",
              shortfall);
    }
  }

  // Movement exclusivity. Current roll-ins are fixed at t=0 and exempt.
  std::vector<Event> events;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = *aligned[i];
    if (!a.accept) continue;
    if (instance.at(i).is_future()) events.push_back({a.roll_in, a.aircraft_id, "roll-in"});
    events.push_back({a.roll_out, a.aircraft_id, "roll-out"});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& x, const Event& y) { return x.time < y.time; });
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      const double gap = events[j].time - events[i].time;
      if (gap >= h.eps_t - kTolerance) break;
      std::vector<std::string> ids{events[i].id};
      if (events[j].id != events[i].id) ids.push_back(events[j].id);
      out.add(ViolationKind::MovementTooClose, std::move(ids),
              std::string(events[i].what) + " of " + events[i].id + " at " +
                  fixed(events[i].time) + " h and " + events[j].what + " of " +
                  events[j].id + " at " + fixed(events[j].time) + " h are " +
                  fixed(gap) + " h apart",
              h.eps_t - gap);
    }
  }

  // Path blocking at every movement instant.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = *aligned[i];
    if (!a.accept) continue;
    const Rect ra = footprint(instance.at(i), a);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = *aligned[j];
      if (j == i || !b.accept) continue;
      if (!blocks_path(footprint(instance.at(j), b), ra, h.buffer)) continue;
      const Interval ib = *presence_interval(b);
      if (present_at(ib, a.roll_out)) {
        out.add(ViolationKind::ExitBlocked, {a.aircraft_id, b.aircraft_id},
                b.aircraft_id + " is parked in the exit lane of " +
                    a.aircraft_id + " until " + fixed(b.roll_out) + " h",
                b.roll_out + h.eps_t - a.roll_out);
      }
      if (present_at(ib, a.roll_in)) {
        out.add(ViolationKind::EntryBlocked, {a.aircraft_id, b.aircraft_id},
                b.aircraft_id + " is parked in the entry lane of " +
                    a.aircraft_id + " until " + fixed(b.roll_out) + " h",
                b.roll_out + h.eps_t - a.roll_in);
      }
    }
  }

  ValidationReport report;
  report.violations = out.take();
  report.feasible = report.violations.empty();
  report.cost = evaluate_cost(instance, solution);
  return report;
}

std::string explain(const ValidationReport& report) {
  if (report.violations.empty()) return "feasible\n";
  std::vector<Violation> sorted = report.violations;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Violation& x, const Violation& y) {
                     if (x.kind != y.kind) return x.kind < y.kind;
                     if (x.magnitude != y.magnitude) return x.magnitude > y.magnitude;
                     if (x.aircraft != y.aircraft) return x.aircraft < y.aircraft;
                     return x.detail < y.detail;
                   });
  std::ostringstream text;
  for (const auto& v : sorted) {
    text << to_string(v.kind) << ' ';
    for (std::size_t i = 0; i < v.aircraft.size(); ++i) {
      text << (i ? "," : "") << v.aircraft[i];
    }
    text << ": " << v.detail << " (magnitude " << fixed(v.magnitude) << ")\n";
  }
  return text.str();
}

std::string report_to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["feasible"] = report.feasible;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back({{"kind", std::string(to_string(v.kind))},
                               {"aircraft", v.aircraft},
                               {"detail", v.detail},
                               {"magnitude", v.magnitude}});
  }
  j["cost"] = {{"rejection", report.cost.rejection},
               {"arrival_delay", report.cost.arrival_delay},
               {"departure_delay", report.cost.departure_delay},
               {"positioning", report.cost.positioning},
               {"total", report.cost.total}};
  return j.dump(2) + "\n";
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::OutOfBounds: return "OutOfBounds";
    case ViolationKind::SpatialOverlap: return "SpatialOverlap";
    case ViolationKind::ServiceTooShort: return "ServiceTooShort";
    case ViolationKind::EarlyRollIn: return "EarlyRollIn";
    case ViolationKind::MovementTooClose: return "MovementTooClose";
    case ViolationKind::ExitBlocked: return "ExitBlocked";
    case ViolationKind::EntryBlocked: return "EntryBlocked";
    case ViolationKind::CurrentStateMismatch: return "CurrentStateMismatch";
    case ViolationKind::NegativeTime: return "NegativeTime";
  }
  return "Unknown";
}

}  // namespace hangar::validator
