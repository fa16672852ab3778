// One PASS/FAIL/SKIP line per acceptance criterion. Exit status 1 on any FAIL.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "brute_force.hpp"
#include "directed.hpp"
#include "fixtures.hpp"
#include "hangar/ach.hpp"
#include "hangar/exact.hpp"
#include "hangar/instgen.hpp"
#include "hangar/io.hpp"
#include "hangar/milp.hpp"
#include "hangar/validator.hpp"

namespace fs = std::filesystem;
using namespace hangar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  enum { Pass, Fail, Skip } state = Pass;
  std::string detail;
};

Outcome pass(std::string d) { return {Outcome::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Outcome::Fail, std::move(d)}; }

std::size_t accepted_count(const Solution& s) {
  std::size_t k = 0;
  for (const auto& a : s.assignments) k += a.accept;
  return k;
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli(const std::string& args) {
  return std::string("\"") + HANGAR_CLI + "\" " + args + " > /dev/null 2>&1";
}

// Sweep shared by criteria 1, 2, 4 and 6.
struct SweepItem {
  Instance instance;
  Solution solution;
};

std::vector<SweepItem>& sweep() {
  static std::vector<SweepItem> items;
  return items;
}

Outcome criterion1() {
  const auto start = Clock::now();
  std::size_t infeasible = 0, congested = 0;
  std::string first;
  for (const auto& c : testing::sweep_cases()) {
    auto inst = testing::generated(c);
    auto sol = ach::solve(inst);
    congested += c.congested;
    const auto report = validator::validate(inst, sol);
    if (!report.feasible) {
      ++infeasible;
      if (first.empty()) first = inst.label + ": " + validator::explain(report);
    }
    sweep().push_back({std::move(inst), std::move(sol)});
  }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << sweep().size() << " instances (" << congested << " congested), " << infeasible
    << " infeasible, " << secs << " s";
  if (infeasible > 0) return fail(d.str() + "; " + first);
  if (sweep().size() < 100 || secs >= 300) return fail(d.str());
  return pass(d.str());
}

Outcome criterion2() {
  std::size_t unsatisfied = 0;
  std::string first;
  for (const auto& [inst, sol] : sweep()) {
    const auto m = milp::build_model(inst);
    const auto v = milp::check_satisfaction(m, milp::derive_binaries(m, inst, sol));
    if (!v.empty()) {
      ++unsatisfied;
      if (first.empty()) first = inst.label + " violates " + v.front().name;
    }
  }
  std::size_t matched = 0;
  std::string missed;
  const auto fixtures = testing::directed_fixtures();
  for (const auto& f : fixtures) {
    const auto m = milp::build_model(f.instance);
    const auto v = milp::check_satisfaction(m, milp::derive_binaries(m, f.instance, f.solution));
    const auto report = validator::validate(f.instance, f.solution);
    bool kind_seen = false;
    for (const auto& x : report.violations) kind_seen = kind_seen || x.kind == f.kind;
    bool family_seen = false;
    for (const auto& r : v) family_seen = family_seen || f.families.count(milp::family_of(r.name));
    if (kind_seen && family_seen) {
      ++matched;
    } else if (missed.empty()) {
      missed = std::string(validator::to_string(f.kind));
    }
  }
  std::ostringstream d;
  d << sweep().size() - unsatisfied << "/" << sweep().size() << " sweep points satisfy all rows; "
    << matched << "/" << fixtures.size() << " directed fixtures hit their family";
  if (unsatisfied > 0) return fail(d.str() + "; " + first);
  if (matched != fixtures.size()) return fail(d.str() + "; missed " + missed);
  return pass(d.str());
}

Outcome criterion3() {
  const auto start = Clock::now();
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (int seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 1 + static_cast<std::size_t>(seed % 3);
    const auto inst = testing::generated(n, seed, seed % 2 == 0, seed % 5 == 0 ? 1 : 0);
    const auto r = exact::solve_exact(inst);
    const double ach_cost = evaluate_cost(inst, ach::solve(inst)).total;
    ++checked;
    if (r.status != exact::OracleStatus::ProvenOptimalOnGrid || r.cost.total > ach_cost + 1e-6 ||
        !validator::validate(inst, r.solution).feasible) {
      ++bad;
      if (first.empty()) first = inst.label;
    }
  }
  std::size_t lattice = 0, mismatched = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = testing::lattice_instance(seed, seed % 3 == 0 ? 1 : 2);
    const auto pruned = exact::solve_exact(inst);
    exact::OracleConfig open;
    open.prune = false;
    const auto unpruned = exact::solve_exact(inst, open);
    const auto brute = testing::brute_force(inst);
    ++lattice;
    if (std::abs(pruned.cost.total - brute.cost) > 1e-6 ||
        std::abs(pruned.cost.total - unpruned.cost.total) > 1e-6) {
      ++mismatched;
      if (first.empty()) first = inst.label;
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << checked - bad << "/" << checked << " oracle runs proven and <= ACH; " << lattice - mismatched
    << "/" << lattice << " lattice fixtures match brute force; " << secs << " s";
  if (bad > 0 || mismatched > 0) return fail(d.str() + "; first failure " + first);
  if (secs >= 600) return fail(d.str());
  return pass(d.str());
}

Outcome criterion4() {
  std::size_t accepted = 0, over = 0;
  std::string first;
  for (const auto& [inst, sol] : sweep()) {
    for (const auto& f : inst.future) {
      const auto* a = sol.find(f.id);
      if (!a->accept) continue;
      ++accepted;
      if (f.arrival_penalty() * (a->roll_in - f.eta) > f.rejection_penalty() + 1e-6) {
        ++over;
        if (first.empty()) first = inst.label + "/" + f.id;
      }
    }
  }
  std::ostringstream d;
  d << accepted << " accepted future aircraft, " << over << " past break-even";
  return over == 0 ? pass(d.str()) : fail(d.str() + "; " + first);
}

Outcome criterion5() {
  const auto inst = testing::blocking_instance();
  const auto m = milp::build_model(inst);
  auto eq17_violated = [&](const Solution& s) {
    for (const auto& v : milp::check_satisfaction(m, milp::derive_binaries(m, inst, s))) {
      if (milp::family_of(v.name) == "eq17") return true;
    }
    return false;
  };
  const double eps = inst.hangar.eps_t;
  const auto blocked = testing::blocking_solution(100);
  const auto report = validator::validate(inst, blocked);
  const bool a = !report.feasible && report.violations.front().kind == validator::ViolationKind::ExitBlocked;
  bool b = true, c = eq17_violated(blocked);
  for (double out : {120.0 + eps, 121.0, 150.0, 400.0}) {
    const auto s = testing::blocking_solution(out);
    b = b && validator::validate(inst, s).feasible;
    c = c && !eq17_violated(s);
  }
  // Between the two: still blocked in both views.
  for (double out : {100.5, 110.0, 119.95}) {
    const auto s = testing::blocking_solution(out);
    const bool validator_blocked = !validator::validate(inst, s).feasible;
    c = c && validator_blocked == eq17_violated(s);
  }
  std::ostringstream d;
  d << "(a) " << (a ? "ExitBlocked" : "not flagged") << ", (b) " << (b ? "feasible" : "infeasible")
    << " from 120+eps_t, (c) eq17 split " << (c ? "identical" : "differs");
  return a && b && c ? pass(d.str()) : fail(d.str());
}

Outcome criterion6() {
  double worst = 0.0;
  std::string at;
  for (const auto& [inst, sol] : sweep()) {
    const auto m = milp::build_model(inst);
    const double gap = std::abs(milp::objective_value(m, milp::derive_binaries(m, inst, sol)) -
                                evaluate_cost(inst, sol).total);
    if (gap > worst) {
      worst = gap;
      at = inst.label;
    }
  }
  std::ostringstream d;
  d << "max |objective - cost| = " << worst << " over " << sweep().size() << " instances";
  return worst <= 1e-6 ? pass(d.str()) : fail(d.str() + " at " + at);
}

Outcome criterion7() {
  instgen::GeneratorConfig g;
  g.n = 500;
  g.seed = 2024;
  const auto inst = instgen::generate(g);
  int vip = 0;
  bool serv_ok = true, slack_ok = true, eta_ok = true;
  for (const auto& f : inst.future) {
    vip += f.vip;
    serv_ok = serv_ok && f.service >= 100.0 && f.service <= 400.0;
    const double slack = f.etd - f.eta - f.service;
    slack_ok = slack_ok && slack >= 24.0 - 1e-9 && slack <= 72.0 + 1e-9;
    eta_ok = eta_ok && f.eta <= 500.0 * 80.0;
  }
  const auto [lo, hi] = testing::binomial_interval(500, 0.2, 0.999);
  const bool vip_ok = vip >= lo && vip <= hi;
  std::ostringstream d;
  d << "VIP " << vip << "/500 within [" << lo << "," << hi << "]: " << (vip_ok ? "yes" : "no")
    << "; service " << (serv_ok ? "ok" : "out of range") << "; slack "
    << (slack_ok ? "ok" : "out of range") << "; ETA " << (eta_ok ? "ok" : "beyond horizon");
  return vip_ok && serv_ok && slack_ok && eta_ok ? pass(d.str()) : fail(d.str());
}

Outcome criterion8() {
  std::size_t n_inst = 0, congestion_breaks = 0, penalty_breaks = 0;
  std::size_t base_rej = 0, comp_rej = 0, heavy_rej = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    instgen::GeneratorConfig g;
    g.n = 3;
    g.seed = seed;
    const auto base = instgen::generate(g);
    g.congestion = 0.2;
    const auto compressed = instgen::generate(g);
    auto heavy = compressed;
    for (auto& f : heavy.future) f.p_rej = 10.0 * *f.p_rej;
    const auto rb = exact::solve_exact(base);
    const auto rc = exact::solve_exact(compressed);
    const auto rh = exact::solve_exact(heavy);
    ++n_inst;
    const std::size_t nb = 3 - accepted_count(rb.solution);
    const std::size_t nc = 3 - accepted_count(rc.solution);
    const std::size_t nh = 3 - accepted_count(rh.solution);
    base_rej += nb;
    comp_rej += nc;
    heavy_rej += nh;
    if (nc < nb) {
      ++congestion_breaks;
      if (first.empty()) first = compressed.label + " rejects fewer than its baseline";
    }
    if (nh > nc) {
      ++penalty_breaks;
      if (first.empty()) first = compressed.label + " accepts fewer with x10 P^Rej";
    }
  }
  std::ostringstream d;
  d << n_inst << " seeds, rejections baseline/compressed/x10 = " << base_rej << "/" << comp_rej
    << "/" << heavy_rej << "; " << congestion_breaks << " compressed below baseline, "
    << penalty_breaks << " x10 with fewer acceptances";
  return congestion_breaks == 0 && penalty_breaks == 0 ? pass(d.str()) : fail(d.str() + "; " + first);
}

std::map<std::string, std::string> tree_bytes(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = io::read_file(e.path().string());
  }
  return out;
}

Outcome criterion9() {
  const auto base = fs::temp_directory_path() / "hangar_acceptance_c9";
  fs::remove_all(base);
  for (const char* run_dir : {"a", "b"}) {
    const auto d = base / run_dir;
    fs::create_directories(d);
    const std::string i = (d / "instance.json").string();
    const std::string s = (d / "solution.json").string();
    if (run(cli("gen --n 12 --seed 9 --congestion 0.2 --n-current 1 -o " + i)) != 0 ||
        run(cli("solve-ach -i " + i + " -o " + s)) != 0 ||
        run(cli("render --html -i " + i + " -s " + s + " -o " + (d / "render").string())) != 0) {
      return fail(std::string("pipeline failed in run ") + run_dir);
    }
  }
  const auto a = tree_bytes(base / "a");
  const auto b = tree_bytes(base / "b");
  fs::remove_all(base);
  std::ostringstream d;
  d << a.size() << " files per run, " << (a == b ? "byte-identical" : "differ");
  return a == b && a.size() > 3 ? pass(d.str()) : fail(d.str());
}

Outcome criterion10() {
  if (run("python3 -c \"import highspy\" > /dev/null 2>&1") != 0) {
    return {Outcome::Skip, "highspy not importable"};
  }
  const auto dir = fs::temp_directory_path() / "hangar_acceptance_c10";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string script = std::string(HANGAR_SOURCE_DIR) + "/tools/highs_solve.py";
  std::size_t solved = 0;
  std::string first;
  double best_gain = 0.0;
  const int n_seeds = 6;
  for (int seed = 1; seed <= n_seeds; ++seed) {
    const auto inst = testing::generated(3, seed, seed % 2 == 0, seed % 3 == 0 ? 1 : 0);
    const std::string i = (dir / "i.json").string(), lp = (dir / "m.lp").string(),
                      pt = (dir / "p.txt").string(), s = (dir / "s.json").string();
    io::save_instance(inst, i);
    if (run(cli("export-milp -i " + i + " -o " + lp)) != 0 ||
        run("python3 \"" + script + "\" " + lp + " " + pt + " > /dev/null 2>&1") != 0 ||
        run(cli("import -i " + i + " -m " + lp + " -p " + pt + " -o " + s)) != 0) {
      if (first.empty()) first = inst.label + ": export/solve/import failed";
      continue;
    }
    const auto sol = io::load_solution(s);
    const double ach_cost = evaluate_cost(inst, ach::solve(inst)).total;
    const double milp_cost = evaluate_cost(inst, sol).total;
    if (!validator::validate(inst, sol).feasible || milp_cost > ach_cost + 1e-6) {
      if (first.empty()) first = inst.label + ": MILP point infeasible or above ACH";
      continue;
    }
    best_gain = std::max(best_gain, ach_cost - milp_cost);
    ++solved;
  }
  fs::remove_all(dir);
  std::ostringstream d;
  d << solved << "/" << n_seeds << " HiGHS solutions imported, feasible and <= ACH (largest gain "
    << best_gain << ")";
  return solved == static_cast<std::size_t>(n_seeds) ? pass(d.str()) : fail(d.str() + "; " + first);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"ACH feasibility closure", criterion1},
      {"validator and MILP rows agree", criterion2},
      {"oracle dominance", criterion3},
      {"economic break-even", criterion4},
      {"blocking fixture", criterion5},
      {"objective agreement", criterion6},
      {"generator statistics", criterion7},
      {"congestion behavior", criterion8},
      {"pipeline determinism", criterion9},
      {"external MILP solve", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.state == Outcome::Pass ? "PASS" : o.state == Outcome::Fail ? "FAIL" : "SKIP";
    failures += o.state == Outcome::Fail;
    std::printf("%s criterion %zu: %s -- %s\n", tag, k + 1, criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
