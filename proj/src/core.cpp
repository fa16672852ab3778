#include "hangar/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "hangar/geometry.hpp"

namespace hangar {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::string field)
    : Error([&] {
        std::string text = message;
        if (line > 0) text += " (line " + std::to_string(line) + ")";
        if (!field.empty()) text += " [field '" + field + "']";
        return text;
      }()),
      line_(line),
      field_(std::move(field)) {}

void HangarConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidInstance(std::string("hangar: ") + what);
  };
  require(std::isfinite(hw) && hw > 0, "hw must be > 0");
  require(std::isfinite(hl) && hl > 0, "hl must be > 0");
  require(std::isfinite(buffer) && buffer >= 0, "buffer must be >= 0");
  require(std::isfinite(eps_t) && eps_t > 0, "eps_t must be > 0");
  require(std::isfinite(eps_p) && eps_p >= 0, "eps_p must be >= 0");
  require(std::isfinite(grid_step) && grid_step > 0, "grid_step must be > 0");
}

const AircraftSpec& Instance::at(std::size_t index) const {
  if (index < current.size()) return current[index];
  return future.at(index - current.size());
}

std::optional<std::size_t> Instance::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (at(i).id == id) return i;
  }
  return std::nullopt;
}

const AircraftSpec* Instance::find(std::string_view id) const {
  auto index = index_of(id);
  return index ? &at(*index) : nullptr;
}

bool is_valid_identifier(std::string_view id) noexcept {
  if (id.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  if (!alpha(id.front())) return false;
  return std::all_of(id.begin(), id.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '_';
  });
}

namespace {

void validate_aircraft(const AircraftSpec& a, AircraftKind expected) {
  auto fail = [&](const std::string& what) {
    throw InvalidInstance("aircraft '" + a.id + "': " + what);
  };
  if (!is_valid_identifier(a.id)) {
    fail("id must match [A-Za-z][A-Za-z0-9_]*");
  }
  if (a.kind != expected) fail("listed in the wrong set");
  for (double v : {a.width, a.length, a.eta, a.etd, a.service, a.p_dep}) {
    if (!std::isfinite(v)) fail("non-finite field");
  }
  if (!(a.width > 0) || !(a.length > 0)) fail("footprint must be positive");
  if (!(a.service > 0)) fail("service must be > 0");
  if (a.eta < 0) fail("eta must be >= 0");
  if (a.p_dep < 0) fail("p_dep must be >= 0");
  const bool has_position = a.x_init.has_value() && a.y_init.has_value();
  const bool has_penalties = a.p_rej.has_value() && a.p_arr.has_value();
  if (a.is_current()) {
    if (!has_position) fail("current aircraft needs x_init and y_init");
    if (a.p_rej || a.p_arr) fail("current aircraft cannot carry p_rej/p_arr");
  } else {
    if (!has_penalties) fail("future aircraft needs p_rej and p_arr");
    if (a.x_init || a.y_init) fail("future aircraft cannot carry x_init/y_init");
    if (*a.p_rej < 0 || *a.p_arr < 0) fail("penalties must be >= 0");
  }
}

}  // namespace

void validate_instance(const Instance& instance) {
  instance.hangar.validate();
  std::set<std::string, std::less<>> ids;
  for (const auto& a : instance.current) {
    validate_aircraft(a, AircraftKind::Current);
    if (!ids.insert(a.id).second) {
      throw InvalidInstance("duplicate aircraft id '" + a.id + "'");
    }
  }
  for (const auto& a : instance.future) {
    validate_aircraft(a, AircraftKind::Future);
    if (!ids.insert(a.id).second) {
      throw InvalidInstance("duplicate aircraft id '" + a.id + "'");
    }
  }
  const auto& h = instance.hangar;
  for (std::size_t i = 0; i < instance.current.size(); ++i) {
    const auto& a = instance.current[i];
    const Rect ra = footprint(a, *a.x_init, *a.y_init);
    if (!within_hangar(ra, h)) {
      throw InvalidInstance("current aircraft '" + a.id +
                            "' lies outside the buffered hangar area");
    }
    for (std::size_t j = i + 1; j < instance.current.size(); ++j) {
      const auto& b = instance.current[j];
      if (!separated(ra, footprint(b, *b.x_init, *b.y_init), h.buffer)) {
        throw InvalidInstance("current aircraft '" + a.id + "' and '" + b.id +
                              "' violate buffered separation");
      }
    }
  }
}

const Assignment* Solution::find(std::string_view id) const {
  for (const auto& a : assignments) {
    if (a.aircraft_id == id) return &a;
  }
  return nullptr;
}

BigM derive_big_m(const Instance& instance) {
  double max_eta = 0.0;
  for (const auto& f : instance.future) max_eta = std::max(max_eta, f.eta);
  double total_service = 0.0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    total_service += instance.at(i).service;
  }
  return BigM{max_eta + total_service, instance.hangar.hw, instance.hangar.hl};
}

std::vector<const Assignment*> align_assignments(const Instance& instance,
                                                 const Solution& solution) {
  std::unordered_map<std::string_view, const Assignment*> by_id;
  for (const auto& a : solution.assignments) {
    if (!by_id.emplace(a.aircraft_id, &a).second) {
      throw MissingAssignment("aircraft '" + a.aircraft_id +
                              "' has more than one assignment");
    }
  }
  std::vector<const Assignment*> aligned;
  aligned.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    auto it = by_id.find(instance.at(i).id);
    if (it == by_id.end()) {
      throw MissingAssignment("no assignment for aircraft '" +
                              instance.at(i).id + "'");
    }
    aligned.push_back(it->second);
  }
  return aligned;
}

CostBreakdown evaluate_cost(const Instance& instance, const Solution& solution) {
  const auto aligned = align_assignments(instance, solution);
  CostBreakdown cost;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& spec = instance.at(i);
    const auto& a = *aligned[i];
    if (!a.accept) {
      if (spec.is_future()) cost.rejection += spec.rejection_penalty();
      continue;
    }
    if (spec.is_future()) {
      cost.arrival_delay +=
          spec.arrival_penalty() * std::max(0.0, a.roll_in - spec.eta);
      cost.positioning += instance.hangar.eps_p * (a.x + a.y);
    }
    cost.departure_delay += spec.p_dep * std::max(0.0, a.roll_out - spec.etd);
  }
  cost.total = cost.rejection + cost.arrival_delay + cost.departure_delay +
               cost.positioning;
  return cost;
}

std::optional<Interval> presence_interval(const Assignment& assignment) {
  if (!assignment.accept) return std::nullopt;
  return Interval{assignment.roll_in, assignment.roll_out};
}

Assignment make_accepted(const AircraftSpec& spec, double x, double y,
                         double roll_in, double roll_out) {
  Assignment a;
  a.aircraft_id = spec.id;
  a.accept = true;
  a.x = x;
  a.y = y;
  a.roll_in = roll_in;
  a.roll_out = roll_out;
  a.d_arr = spec.is_future() ? std::max(0.0, roll_in - spec.eta) : 0.0;
  a.d_dep = std::max(0.0, roll_out - spec.etd);
  return a;
}

Assignment make_rejected(const AircraftSpec& spec) {
  Assignment a;
  a.aircraft_id = spec.id;
  return a;
}

double separation_shortfall(const Rect& a, const Rect& b, double buffer) {
  const double need_right = b.x + b.w + buffer - a.x;
  const double need_left = a.x + a.w + buffer - b.x;
  const double need_above = b.y + b.l + buffer - a.y;
  const double need_below = a.y + a.l + buffer - b.y;
  const double shortfall =
      std::min({need_right, need_left, need_above, need_below});
  return std::max(0.0, shortfall);
}

std::string_view to_string(AircraftKind kind) noexcept {
  return kind == AircraftKind::Current ? "Current" : "Future";
}

std::string_view to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::Heuristic: return "Heuristic";
    case Provenance::Oracle: return "Oracle";
    case Provenance::Imported: return "Imported";
    case Provenance::Manual: return "Manual";
  }
  return "Manual";
}

std::optional<AircraftKind> parse_aircraft_kind(std::string_view text) noexcept {
  if (text == "Current") return AircraftKind::Current;
  if (text == "Future") return AircraftKind::Future;
  return std::nullopt;
}

std::optional<Provenance> parse_provenance(std::string_view text) noexcept {
  if (text == "Heuristic") return Provenance::Heuristic;
  if (text == "Oracle") return Provenance::Oracle;
  if (text == "Imported") return Provenance::Imported;
  if (text == "Manual") return Provenance::Manual;
  return std::nullopt;
}

}  // namespace hangar
