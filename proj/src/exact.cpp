#include "hangar/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "hangar/ach.hpp"
#include "hangar/geometry.hpp"
#include "hangar/validator.hpp"

namespace hangar::exact {

void OracleConfig::validate() const {
  if (grid_step && !(*grid_step > 0)) throw InvalidOracleConfig("grid_step must be > 0");
  if (!(time_step > 0)) throw InvalidOracleConfig("time_step must be > 0");
  if (node_budget == 0) throw InvalidOracleConfig("node_budget must be > 0");
  if (!(time_budget > 0)) throw InvalidOracleConfig("time_budget must be > 0");
}

std::string_view to_string(OracleStatus status) noexcept {
  switch (status) {
    case OracleStatus::ProvenOptimalOnGrid: return "ProvenOptimalOnGrid";
    case OracleStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  std::size_t idx = 0;  // index into A
  double in = 0.0;
  double out = 0.0;
};

/// k_to >= k_from + w on one axis.
struct Edge {
  std::size_t from;
  std::size_t to;
  long w;
};

struct Bounds {
  std::vector<long> lo_x, hi_x, lo_y, hi_y;
};

struct Option {
  enum Axis { X, Y } axis;
  // Either an edge between two futures or a bound on a single future.
  bool is_edge;
  Edge edge;
  std::size_t var;
  bool lower;  // bound is a lower bound
  long value;
};

class Search {
 public:
  Search(const Instance& instance, const OracleConfig& config)
      : inst_(instance), cfg_(config), h_(instance.hangar), base_(instance.hangar) {
    if (cfg_.grid_step) h_.grid_step = *cfg_.grid_step;
    step_ = h_.grid_step;
    nc_ = inst_.current.size();
    n_ = inst_.size();
    base_ = ach::initial_schedule(inst_, h_);
    for (const auto& e : base_.entries()) {
      const std::size_t i = *inst_.index_of(e.spec->id);
      current_out_[i] = e.stay.end;
      current_cost_ += e.spec->p_dep * std::max(0.0, e.stay.end - e.spec->etd);
      events_.push_back(e.stay.end);
      outs_.push_back(e.stay.end);
    }
    std::sort(events_.begin(), events_.end());
    std::sort(outs_.begin(), outs_.end());
    for (const auto& id : ach::prioritize(inst_)) order_.push_back(*inst_.index_of(id));

    kmax_x_.assign(n_, -1);
    kmax_y_.assign(n_, -1);
    for (std::size_t i = nc_; i < n_; ++i) {
      const auto& s = inst_.at(i);
      kmax_x_[i] = floor_k(h_.hw - 2 * h_.buffer - s.width);
      kmax_y_[i] = floor_k(h_.hl - 2 * h_.buffer - s.length);
    }

    ach::Options ach_options;
    ach_options.grid_step = step_;
    const Solution ach = ach::solve(inst_, ach_options);
    for (const auto& a : ach.assignments) {
      if (a.accept) ach_times_[*inst_.index_of(a.aircraft_id)] = {a.roll_in, a.roll_out};
    }
    best_ = ach;
    best_.provenance = Provenance::Oracle;
    best_cost_ = evaluate_cost(inst_, ach).total;
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(cfg_.time_budget));
  }

  OracleResult run() {
    std::vector<bool> accepted(n_, false);
    choose(0, accepted, 0.0, 0);
    OracleResult r;
    r.solution = best_;
    r.cost = evaluate_cost(inst_, best_);
    r.status = exhausted_ ? OracleStatus::BudgetExhausted : OracleStatus::ProvenOptimalOnGrid;
    r.nodes_explored = nodes_;
    r.rejected_leaves = rejected_leaves_;
    return r;
  }

 private:
  // -- lattice helpers ------------------------------------------------------

  long ceil_k(double distance) const {
    return static_cast<long>(std::ceil((distance - kTolerance) / step_ - 1e-12));
  }
  long floor_k(double distance) const {
    return static_cast<long>(std::floor((distance + kTolerance) / step_ + 1e-12));
  }

  bool tick() {
    ++nodes_;
    if (nodes_ >= cfg_.node_budget) exhausted_ = true;
    if ((nodes_ & 1023u) == 0 && Clock::now() > deadline_) exhausted_ = true;
    return !exhausted_;
  }

  bool can_prune(double lower_bound) const {
    return cfg_.prune && lower_bound >= best_cost_ - 1e-9;
  }

  double position_floor(std::size_t accepted_count) const {
    return h_.eps_p * 2.0 * h_.buffer * static_cast<double>(accepted_count);
  }

  // -- phase 1: acceptance --------------------------------------------------

  void choose(std::size_t k, std::vector<bool>& accepted, double rejected_cost,
              std::size_t count) {
    if (!tick()) return;
    if (k == order_.size()) {
      std::vector<std::size_t> set;
      for (std::size_t i : order_) {
        if (accepted[i]) set.push_back(i);
      }
      fixed_cost_ = rejected_cost + current_cost_;
      accepted_count_ = count;
      std::vector<Timed> committed;
      std::vector<bool> done(n_, false);
      sequence(set, done, committed, events_, outs_, 0.0);
      return;
    }
    const std::size_t i = order_[k];
    const auto& s = inst_.at(i);
    if (kmax_x_[i] >= 0 && kmax_y_[i] >= 0 &&
        !can_prune(rejected_cost + current_cost_ + position_floor(count + 1))) {
      accepted[i] = true;
      choose(k + 1, accepted, rejected_cost, count + 1);
      accepted[i] = false;
      if (exhausted_) return;
    }
    const double rejected = rejected_cost + s.rejection_penalty();
    if (!can_prune(rejected + current_cost_ + position_floor(count))) {
      choose(k + 1, accepted, rejected, count);
    }
  }

  // -- phase 2: timing ------------------------------------------------------

  bool clear(double t, const std::vector<double>& events) const {
    const double gap = h_.eps_t - kTolerance;
    auto it = std::upper_bound(events.begin(), events.end(), t - gap);
    return it == events.end() || *it >= t + gap;
  }

  double min_shift(double t, const std::vector<double>& events,
                   std::optional<double> extra = std::nullopt) const {
    double s = t;
    for (long k = 1;; ++k) {
      const bool own = !extra || std::abs(s - *extra) >= h_.eps_t - kTolerance;
      if (own && clear(s, events)) return s;
      s = t + static_cast<double>(k) * h_.eps_t;
    }
  }

  static void dedupe(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](double a, double b) { return std::abs(a - b) <= kTolerance; }),
            v.end());
  }

  std::vector<double> roll_in_candidates(std::size_t i,
                                         const std::vector<double>& events) const {
    const auto& s = inst_.at(i);
    const double t_max = ach::max_admissible_time(s);
    std::vector<double> raw;
    if (cfg_.time_candidates == TimeCandidates::EventDriven) {
      raw.push_back(min_shift(s.eta, events));
      for (double e : events) {
        if (e + h_.eps_t >= s.eta - kTolerance) raw.push_back(min_shift(e + h_.eps_t, events));
      }
    } else {
      const double horizon =
          std::min(t_max, s.eta + derive_big_m(inst_).m_t);
      for (long k = 0;; ++k) {
        const double t = s.eta + static_cast<double>(k) * cfg_.time_step;
        if (t > horizon + 1e-9) break;
        if (clear(t, events)) raw.push_back(t);
      }
    }
    if (auto it = ach_times_.find(i); it != ach_times_.end() && clear(it->second.start, events)) {
      raw.push_back(it->second.start);
    }
    std::vector<double> out;
    for (double t : raw) {
      if (t >= s.eta - kTolerance && t <= t_max + 1e-9) out.push_back(t);
    }
    dedupe(out);
    return out;
  }

  std::vector<double> roll_out_candidates(std::size_t i, double t_in,
                                          const std::vector<double>& events,
                                          const std::vector<double>& outs) const {
    const auto& s = inst_.at(i);
    const double base = t_in + std::max(s.service, h_.eps_t);
    std::vector<double> raw{min_shift(base, events, t_in)};
    for (double e : outs) {
      if (e + h_.eps_t > base + kTolerance) raw.push_back(min_shift(e + h_.eps_t, events, t_in));
    }
    if (auto it = ach_times_.find(i); it != ach_times_.end()) {
      const double t = it->second.end;
      if (t >= base - kTolerance && clear(t, events) &&
          std::abs(t - t_in) >= h_.eps_t - kTolerance) {
        raw.push_back(t);
      }
    }
    dedupe(raw);
    return raw;
  }

  static std::vector<double> with(const std::vector<double>& v, double t) {
    std::vector<double> out = v;
    out.insert(std::upper_bound(out.begin(), out.end(), t), t);
    return out;
  }

  /// `upper` may sit above `lower` in the same lane without blocking.
  bool stack_ok(const Interval& iu, std::size_t lower, const Interval& il) const {
    if (present_at(iu, il.end)) return false;
    if (inst_.at(lower).is_future() && present_at(iu, il.start)) return false;
    return true;
  }

  /// Options that separate the pair (future f, other g) on their own.
  std::vector<Option> pair_options(std::size_t f, std::size_t g, const Interval& inf,
                                   const Interval& ing) const {
    const auto& sf = inst_.at(f);
    const auto& sg = inst_.at(g);
    std::vector<Option> opts;
    const double buf = h_.buffer;
    if (g >= nc_) {
      // g right of f, f right of g, f above g, g above f.
      opts.push_back({Option::X, true, {f, g, ceil_k(sf.width + buf)}, 0, false, 0});
      opts.push_back({Option::X, true, {g, f, ceil_k(sg.width + buf)}, 0, false, 0});
      if (stack_ok(inf, g, ing)) {
        opts.push_back({Option::Y, true, {g, f, ceil_k(sg.length + buf)}, 0, false, 0});
      }
      if (stack_ok(ing, f, inf)) {
        opts.push_back({Option::Y, true, {f, g, ceil_k(sf.length + buf)}, 0, false, 0});
      }
      return opts;
    }
    const Rect rc = footprint(sg, *sg.x_init, *sg.y_init);
    opts.push_back({Option::X, false, {}, f, true, ceil_k(rc.x + rc.w + buf - h_.buffer)});
    opts.push_back({Option::X, false, {}, f, false, floor_k(rc.x - buf - sf.width - h_.buffer)});
    if (stack_ok(inf, g, ing)) {
      opts.push_back({Option::Y, false, {}, f, true, ceil_k(rc.y + rc.l + buf - h_.buffer)});
    }
    if (stack_ok(ing, f, inf)) {
      opts.push_back(
          {Option::Y, false, {}, f, false, floor_k(rc.y - buf - sf.length - h_.buffer)});
    }
    return opts;
  }

  bool option_possible(const Option& o) const {
    const auto& hi = o.axis == Option::X ? kmax_x_ : kmax_y_;
    if (o.is_edge) return o.edge.w <= hi[o.edge.to];
    return o.lower ? o.value <= hi[o.var] : o.value >= 0;
  }

  /// Quick necessary check for the newest aircraft against everything that
  /// shares time with it.
  bool pairwise_ok(const Timed& t, const std::vector<Timed>& committed) const {
    const Interval it{t.in, t.out};
    for (std::size_t c = 0; c < nc_; ++c) {
      const Interval ic{0.0, current_out_.at(c)};
      if (!overlaps(it, ic)) continue;
      const auto opts = pair_options(t.idx, c, it, ic);
      if (std::none_of(opts.begin(), opts.end(),
                       [&](const Option& o) { return option_possible(o); })) {
        return false;
      }
    }
    for (const auto& o : committed) {
      const Interval io{o.in, o.out};
      if (!overlaps(it, io)) continue;
      const auto opts = pair_options(t.idx, o.idx, it, io);
      if (std::none_of(opts.begin(), opts.end(),
                       [&](const Option& p) { return option_possible(p); })) {
        return false;
      }
    }
    return true;
  }

  void sequence(const std::vector<std::size_t>& set, std::vector<bool>& done,
                std::vector<Timed>& committed, const std::vector<double>& events,
                const std::vector<double>& outs, double time_cost) {
    if (!tick()) return;
    if (committed.size() == set.size()) {
      place(committed, time_cost);
      return;
    }
    for (std::size_t i : set) {
      if (done[i]) continue;
      const auto& s = inst_.at(i);
      for (double t_in : roll_in_candidates(i, events)) {
        const double arr = s.arrival_penalty() * std::max(0.0, t_in - s.eta);
        const auto ev_in = with(events, t_in);
        for (double t_out : roll_out_candidates(i, t_in, ev_in, outs)) {
          const double cost =
              time_cost + arr + s.p_dep * std::max(0.0, t_out - s.etd);
          if (can_prune(fixed_cost_ + cost + position_floor(accepted_count_))) continue;
          const Timed t{i, t_in, t_out};
          if (!pairwise_ok(t, committed)) continue;
          done[i] = true;
          committed.push_back(t);
          sequence(set, done, committed, with(ev_in, t_out), with(outs, t_out), cost);
          committed.pop_back();
          done[i] = false;
          if (exhausted_) return;
        }
      }
    }
  }

  // -- positions ------------------------------------------------------------

  static bool propagate(std::vector<long>& lo, const std::vector<long>& hi,
                        const std::vector<Edge>& edges) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& e : edges) {
        if (lo[e.to] < lo[e.from] + e.w) {
          lo[e.to] = lo[e.from] + e.w;
          if (lo[e.to] > hi[e.to]) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  struct Layout {
    Bounds b;
    std::vector<Edge> ex, ey;
  };

  double layout_floor(const Layout& l, const std::vector<Timed>& committed) const {
    double sum = 0.0;
    for (const auto& t : committed) {
      sum += 2 * h_.buffer + step_ * static_cast<double>(l.b.lo_x[t.idx] + l.b.lo_y[t.idx]);
    }
    return h_.eps_p * sum;
  }

  void place(const std::vector<Timed>& committed, double time_cost) {
    Layout layout;
    layout.b.lo_x.assign(n_, 0);
    layout.b.lo_y.assign(n_, 0);
    layout.b.hi_x = kmax_x_;
    layout.b.hi_y = kmax_y_;

    std::vector<std::vector<Option>> pairs;
    for (std::size_t a = 0; a < committed.size(); ++a) {
      const Interval ia{committed[a].in, committed[a].out};
      for (std::size_t c = 0; c < nc_; ++c) {
        const Interval ic{0.0, current_out_.at(c)};
        if (overlaps(ia, ic)) pairs.push_back(pair_options(committed[a].idx, c, ia, ic));
      }
      for (std::size_t b = a + 1; b < committed.size(); ++b) {
        const Interval ib{committed[b].in, committed[b].out};
        if (overlaps(ia, ib)) {
          pairs.push_back(pair_options(committed[a].idx, committed[b].idx, ia, ib));
        }
      }
    }
    // Most constrained pairs first.
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    assign(pairs, 0, layout, committed, time_cost);
  }

  void assign(const std::vector<std::vector<Option>>& pairs, std::size_t p,
              const Layout& layout, const std::vector<Timed>& committed, double time_cost) {
    if (!tick()) return;
    if (p == pairs.size()) {
      leaf(layout, committed);
      return;
    }
    for (const auto& o : pairs[p]) {
      Layout next = layout;
      bool ok = true;
      auto& lo = o.axis == Option::X ? next.b.lo_x : next.b.lo_y;
      auto& hi = o.axis == Option::X ? next.b.hi_x : next.b.hi_y;
      auto& edges = o.axis == Option::X ? next.ex : next.ey;
      if (o.is_edge) {
        edges.push_back(o.edge);
      } else if (o.lower) {
        lo[o.var] = std::max(lo[o.var], o.value);
      } else {
        hi[o.var] = std::min(hi[o.var], o.value);
      }
      for (const auto& t : committed) {
        if (lo[t.idx] > hi[t.idx]) ok = false;
      }
      ok = ok && propagate(lo, hi, edges);
      if (!ok) continue;
      if (can_prune(fixed_cost_ + time_cost + layout_floor(next, committed))) continue;
      assign(pairs, p + 1, next, committed, time_cost);
      if (exhausted_) return;
    }
  }

  void leaf(const Layout& layout, const std::vector<Timed>& committed) {
    Solution sol;
    sol.instance_label = inst_.label;
    sol.provenance = Provenance::Oracle;
    std::unordered_map<std::size_t, const Timed*> by_idx;
    for (const auto& t : committed) by_idx[t.idx] = &t;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& s = inst_.at(i);
      if (i < nc_) {
        sol.assignments.push_back(
            make_accepted(s, *s.x_init, *s.y_init, 0.0, current_out_.at(i)));
      } else if (auto it = by_idx.find(i); it != by_idx.end()) {
        const double x = h_.buffer + step_ * static_cast<double>(layout.b.lo_x[i]);
        const double y = h_.buffer + step_ * static_cast<double>(layout.b.lo_y[i]);
        sol.assignments.push_back(make_accepted(s, x, y, it->second->in, it->second->out));
      } else {
        sol.assignments.push_back(make_rejected(s));
      }
    }
    const double cost = evaluate_cost(inst_, sol).total;
    if (cost >= best_cost_ - 1e-9) return;
    if (!validator::validate(inst_, sol).feasible) {
      ++rejected_leaves_;
      return;
    }
    best_cost_ = cost;
    best_ = std::move(sol);
  }

  const Instance& inst_;
  OracleConfig cfg_;
  HangarConfig h_;
  double step_ = 1.0;
  std::size_t nc_ = 0;
  std::size_t n_ = 0;
  ach::Schedule base_;
  std::unordered_map<std::size_t, double> current_out_;
  double current_cost_ = 0.0;
  std::vector<double> events_;
  std::vector<double> outs_;
  std::vector<std::size_t> order_;
  std::vector<long> kmax_x_, kmax_y_;
  std::unordered_map<std::size_t, Interval> ach_times_;

  Solution best_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  double fixed_cost_ = 0.0;
  std::size_t accepted_count_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::uint64_t rejected_leaves_ = 0;
  Clock::time_point deadline_;
};

}  // namespace

OracleResult solve_exact(const Instance& instance, const OracleConfig& config) {
  config.validate();
  validate_instance(instance);
  if (instance.future.size() > config.max_future) {
    throw InstanceTooLarge("instance has " + std::to_string(instance.future.size()) +
                           " future aircraft; the exact search is limited to " +
                           std::to_string(config.max_future));
  }
  Search search(instance, config);
  return search.run();
}

}  // namespace hangar::exact
