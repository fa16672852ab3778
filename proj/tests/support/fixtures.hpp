#ifndef HANGAR_TESTS_FIXTURES_HPP
#define HANGAR_TESTS_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hangar/core.hpp"
#include "hangar/instgen.hpp"

namespace hangar::testing {

inline AircraftSpec future(std::string id, double w, double l, double eta,
                           double service, double etd, double p_rej = 1000.0,
                           double p_arr = 10.0, double p_dep = 20.0) {
  AircraftSpec a;
  a.id = std::move(id);
  a.kind = AircraftKind::Future;
  a.width = w;
  a.length = l;
  a.eta = eta;
  a.service = service;
  a.etd = etd;
  a.p_rej = p_rej;
  a.p_arr = p_arr;
  a.p_dep = p_dep;
  return a;
}

inline AircraftSpec current(std::string id, double w, double l, double x, double y,
                            double service, double etd, double p_dep = 20.0) {
  AircraftSpec a;
  a.id = std::move(id);
  a.kind = AircraftKind::Current;
  a.width = w;
  a.length = l;
  a.eta = 0.0;
  a.service = service;
  a.etd = etd;
  a.p_dep = p_dep;
  a.x_init = x;
  a.y_init = y;
  return a;
}

inline Instance instance_of(std::vector<AircraftSpec> futures,
                            std::vector<AircraftSpec> currents = {},
                            HangarConfig hangar = {}, std::string label = "fixture") {
  Instance inst;
  inst.hangar = hangar;
  inst.future = std::move(futures);
  inst.current = std::move(currents);
  inst.label = std::move(label);
  return inst;
}

// Two 20x20 futures, b parked above a in the same lane. a: ETA 0, ETD 100,
// service 50. b: ETA 10, rolls out at 120.
inline Instance blocking_instance() {
  return instance_of({future("a", 20, 20, 0, 50, 100), future("b", 20, 20, 10, 100, 110)});
}

inline Solution blocking_solution(double roll_out_a) {
  const Instance inst = blocking_instance();
  Solution s;
  s.instance_label = inst.label;
  s.assignments.push_back(make_accepted(inst.future[0], 5, 5, 0, roll_out_a));
  s.assignments.push_back(make_accepted(inst.future[1], 5, 30, 10, 120));
  return s;
}

// Generated instance with a fallback: two currents sometimes cannot be
// placed, in which case one current is used instead.
inline Instance generated(std::size_t n, std::uint64_t seed, bool congested = false,
                          std::size_t n_current = 0) {
  instgen::GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  if (congested) cfg.congestion = 0.2;
  cfg.n_current = n_current;
  for (;;) {
    try {
      return instgen::generate(cfg);
    } catch (const instgen::PlacementImpossible&) {
      if (cfg.n_current == 0) throw;
      --cfg.n_current;
    }
  }
}

// The >=100-instance sweep: N in 1..15, seeds 1..7, every odd seed
// congested, every third seed with currents.
struct SweepCase {
  std::size_t n;
  std::uint64_t seed;
  bool congested;
  std::size_t n_current;
};

inline std::vector<SweepCase> sweep_cases() {
  std::vector<SweepCase> out;
  for (std::size_t n = 1; n <= 15; ++n) {
    for (std::uint64_t seed = 1; seed <= 7; ++seed) {
      out.push_back({n, seed, seed % 2 == 1, seed % 3 == 0 ? std::size_t{2} : std::size_t{0}});
    }
  }
  return out;
}

inline Instance generated(const SweepCase& c) {
  return generated(c.n, c.seed, c.congested, c.n_current);
}

}  // namespace hangar::testing

#endif  // HANGAR_TESTS_FIXTURES_HPP
