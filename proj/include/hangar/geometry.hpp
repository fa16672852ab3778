#ifndef HANGAR_GEOMETRY_HPP
#define HANGAR_GEOMETRY_HPP

#include "hangar/core.hpp"

namespace hangar {

/// Axis-aligned footprint; (x, y) is the corner nearest the origin.
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double l = 0.0;
};

inline Rect footprint(const AircraftSpec& spec, double x, double y) {
  return Rect{x, y, spec.width, spec.length};
}

inline Rect footprint(const AircraftSpec& spec, const Assignment& a) {
  return Rect{a.x, a.y, spec.width, spec.length};
}

/// `a` lies entirely to the right of `b` with at least `buffer` clearance.
inline bool right_of(const Rect& a, const Rect& b, double buffer) {
  return b.x + b.w + buffer <= a.x + kTolerance;
}

/// `a` lies entirely above (larger y) `b` with at least `buffer` clearance.
inline bool above(const Rect& a, const Rect& b, double buffer) {
  return b.y + b.l + buffer <= a.y + kTolerance;
}

/// Buffered x-intervals overlap: the two share a movement lane.
inline bool same_lane(const Rect& a, const Rect& b, double buffer) {
  return !right_of(a, b, buffer) && !right_of(b, a, buffer);
}

inline bool separated(const Rect& a, const Rect& b, double buffer) {
  return right_of(a, b, buffer) || right_of(b, a, buffer) ||
         above(a, b, buffer) || above(b, a, buffer);
}

/// Smallest shift that would separate the pair on some axis (0 when already
/// separated).
double separation_shortfall(const Rect& a, const Rect& b, double buffer);

/// `upper` sits in the lane of `lower` between `lower` and the open front.
inline bool blocks_path(const Rect& upper, const Rect& lower, double buffer) {
  return above(upper, lower, buffer) && same_lane(upper, lower, buffer);
}

/// Open intervals overlapping on a set of positive measure.
inline bool overlaps(const Interval& a, const Interval& b) {
  const double lo = a.start > b.start ? a.start : b.start;
  const double hi = a.end < b.end ? a.end : b.end;
  return lo < hi - kTolerance;
}

/// Strictly inside the open interval.
inline bool present_at(const Interval& i, double t) {
  return i.start < t - kTolerance && t < i.end - kTolerance;
}

inline bool within_hangar(const Rect& r, const HangarConfig& h) {
  return r.x >= h.buffer - kTolerance &&
         r.x + r.w <= h.hw - h.buffer + kTolerance &&
         r.y >= h.buffer - kTolerance &&
         r.y + r.l <= h.hl - h.buffer + kTolerance;
}

}  // namespace hangar

#endif  // HANGAR_GEOMETRY_HPP
