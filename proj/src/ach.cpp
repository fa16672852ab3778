#include "hangar/ach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hangar::ach {

PriorityKey PriorityKey::of(const AircraftSpec& spec) {
  return PriorityKey{spec.rejection_penalty(), spec.eta, spec.service, spec.id};
}

bool PriorityKey::precedes(const PriorityKey& other) const {
  if (p_rej != other.p_rej) return p_rej > other.p_rej;
  if (eta != other.eta) return eta < other.eta;
  if (serv != other.serv) return serv < other.serv;
  return id < other.id;
}

std::vector<std::string> prioritize(const Instance& instance) {
  std::vector<PriorityKey> keys;
  keys.reserve(instance.future.size());
  for (const auto& f : instance.future) keys.push_back(PriorityKey::of(f));
  std::sort(keys.begin(), keys.end(),
            [](const PriorityKey& a, const PriorityKey& b) { return a.precedes(b); });
  std::vector<std::string> order;
  order.reserve(keys.size());
  for (auto& k : keys) order.push_back(std::move(k.id));
  return order;
}

double max_admissible_time(const AircraftSpec& spec) {
  const double p_arr = spec.arrival_penalty();
  if (!(p_arr > 0)) return std::numeric_limits<double>::infinity();
  return spec.eta + spec.rejection_penalty() / p_arr;
}

void Schedule::commit(const AircraftSpec& spec, double x, double y,
                      double roll_in, double roll_out) {
  entries_.push_back(Committed{&spec, footprint(spec, x, y), {roll_in, roll_out}});
  if (spec.is_future()) {
    events_.insert(std::upper_bound(events_.begin(), events_.end(), roll_in), roll_in);
  }
  events_.insert(std::upper_bound(events_.begin(), events_.end(), roll_out), roll_out);
}

double Schedule::last_event() const noexcept {
  return events_.empty() ? -std::numeric_limits<double>::infinity() : events_.back();
}

bool Schedule::clear_of_events(double t) const {
  const double gap = hangar_.eps_t - kTolerance;
  auto it = std::upper_bound(events_.begin(), events_.end(), t - gap);
  return it == events_.end() || *it >= t + gap;
}

Schedule initial_schedule(const Instance& instance, const HangarConfig& hangar) {
  Schedule schedule(hangar);
  std::vector<const AircraftSpec*> order;
  for (const auto& c : instance.current) order.push_back(&c);
  // Front-most first: an aircraft only ever waits for aircraft nearer the exit.
  std::stable_sort(order.begin(), order.end(),
                   [](const AircraftSpec* a, const AircraftSpec* b) {
                     if (*a->y_init != *b->y_init) return *a->y_init > *b->y_init;
                     return a->id < b->id;
                   });
  for (const AircraftSpec* c : order) {
    const Rect rc = footprint(*c, *c->x_init, *c->y_init);
    double earliest = c->service;
    for (const auto& e : schedule.entries()) {
      if (blocks_path(e.rect, rc, hangar.buffer)) {
        earliest = std::max(earliest, e.stay.end + hangar.eps_t);
      }
    }
    double t = earliest;
    for (long k = 1; !schedule.clear_of_events(t); ++k) {
      t = earliest + static_cast<double>(k) * hangar.eps_t;
    }
    schedule.commit(*c, *c->x_init, *c->y_init, 0.0, t);
  }
  return schedule;
}

double resolve_roll_out(const AircraftSpec& spec, double t_in,
                        const Schedule& fixed, double eps_t) {
  const double base = t_in + spec.service;
  double t = base;
  for (long k = 1; !fixed.clear_of_events(t); ++k) {
    t = base + static_cast<double>(k) * eps_t;
  }
  return t;
}

bool times_admissible(const AircraftSpec& spec, double t_in, double t_out,
                      const Schedule& fixed) {
  const auto& h = fixed.hangar();
  if (t_in < -kTolerance) return false;
  if (spec.is_future() && t_in < spec.eta - kTolerance) return false;
  if (t_out - t_in < spec.service - kTolerance) return false;
  if (t_out - t_in < h.eps_t - kTolerance) return false;
  return fixed.clear_of_events(t_in) && fixed.clear_of_events(t_out);
}

namespace {

/// Spatial and blocking compatibility with one co-present committed aircraft.
bool compatible(const Rect& r, const Interval& stay, const Committed& e,
                double buffer) {
  if (!separated(r, e.rect, buffer)) return false;
  if (blocks_path(e.rect, r, buffer)) {
    if (present_at(e.stay, stay.end) || present_at(e.stay, stay.start)) {
      return false;
    }
  }
  if (blocks_path(r, e.rect, buffer)) {
    if (present_at(stay, e.stay.end)) return false;
    if (e.spec->is_future() && present_at(stay, e.stay.start)) return false;
  }
  return true;
}

std::vector<const Committed*> co_present(const Schedule& fixed,
                                         const Interval& stay) {
  std::vector<const Committed*> out;
  for (const auto& e : fixed.entries()) {
    if (overlaps(stay, e.stay)) out.push_back(&e);
  }
  return out;
}

long grid_count(double span, double step) {
  if (span < -kTolerance) return -1;
  return static_cast<long>(std::floor(std::max(0.0, span) / step + kTolerance));
}

}  // namespace

bool is_valid_placement(const AircraftSpec& spec, double x, double y,
                        double t_in, double t_out, const Schedule& fixed) {
  const auto& h = fixed.hangar();
  const Rect r = footprint(spec, x, y);
  if (!within_hangar(r, h)) return false;
  if (!times_admissible(spec, t_in, t_out, fixed)) return false;
  const Interval stay{t_in, t_out};
  for (const auto& e : fixed.entries()) {
    if (overlaps(stay, e.stay) && !compatible(r, stay, e, h.buffer)) return false;
  }
  return true;
}

bool is_valid_spot(const AircraftSpec& spec, double x, double y, double t_in,
                   const Schedule& fixed, const Instance& /*instance*/) {
  const double t_out = resolve_roll_out(spec, t_in, fixed, fixed.hangar().eps_t);
  return is_valid_placement(spec, x, y, t_in, t_out, fixed);
}

std::optional<PlacementCandidate> find_best_placement(
    const AircraftSpec& spec, double t_in, const Schedule& fixed,
    const Instance& /*instance*/) {
  const auto& h = fixed.hangar();
  const double t_out = resolve_roll_out(spec, t_in, fixed, h.eps_t);
  if (!times_admissible(spec, t_in, t_out, fixed)) return std::nullopt;
  const long nx = grid_count(h.hw - 2 * h.buffer - spec.width, h.grid_step);
  const long ny = grid_count(h.hl - 2 * h.buffer - spec.length, h.grid_step);
  if (nx < 0 || ny < 0) return std::nullopt;

  const Interval stay{t_in, t_out};
  const auto neighbours = co_present(fixed, stay);
  // Anti-diagonals hold equal x + y; walking each one by increasing y gives
  // the documented tie-break, so the first hit is the answer.
  for (long s = 0; s <= nx + ny; ++s) {
    for (long j = std::max(0L, s - nx); j <= std::min(s, ny); ++j) {
      const long i = s - j;
      const double x = h.buffer + static_cast<double>(i) * h.grid_step;
      const double y = h.buffer + static_cast<double>(j) * h.grid_step;
      const Rect r = footprint(spec, x, y);
      const bool ok = std::all_of(
          neighbours.begin(), neighbours.end(),
          [&](const Committed* e) { return compatible(r, stay, *e, h.buffer); });
      if (ok) return PlacementCandidate{x, y, t_in, t_out, x + y};
    }
  }
  return std::nullopt;
}

Solution solve(const Instance& instance, const Options& options) {
  HangarConfig hangar = instance.hangar;
  if (options.grid_step) hangar.grid_step = *options.grid_step;
  Schedule schedule = initial_schedule(instance, hangar);

  std::vector<Assignment> decided(instance.size());
  for (std::size_t i = 0; i < instance.current.size(); ++i) {
    const auto& e = schedule.entries()[i];
    decided[*instance.index_of(e.spec->id)] =
        make_accepted(*e.spec, e.rect.x, e.rect.y, e.stay.start, e.stay.end);
  }

  for (const auto& id : prioritize(instance)) {
    const std::size_t index = *instance.index_of(id);
    const AircraftSpec& spec = instance.at(index);
    const double max_delay = max_admissible_time(spec) - spec.eta;
    std::optional<PlacementCandidate> chosen;
    for (long k = 0;; ++k) {
      const double delay = static_cast<double>(k) * hangar.eps_t;
      if (delay > max_delay + 1e-9) break;
      const double t = spec.eta + delay;
      chosen = find_best_placement(spec, t, schedule, instance);
      if (chosen) break;
      // Past the last committed event the hangar no longer changes.
      if (t > schedule.last_event() + hangar.eps_t + kTolerance) break;
    }
    if (chosen) {
      schedule.commit(spec, chosen->x, chosen->y, chosen->t_in, chosen->t_out);
      decided[index] =
          make_accepted(spec, chosen->x, chosen->y, chosen->t_in, chosen->t_out);
    } else {
      decided[index] = make_rejected(spec);
    }
  }

  Solution solution;
  solution.instance_label = instance.label;
  solution.provenance = Provenance::Heuristic;
  solution.assignments = std::move(decided);
  return solution;
}

}  // namespace hangar::ach
