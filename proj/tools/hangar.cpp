// Command-line front end: gen, solve-ach, solve-exact, export-milp, import,
// validate, render, compare.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hangar/ach.hpp"
#include "hangar/compare.hpp"
#include "hangar/exact.hpp"
#include "hangar/instgen.hpp"
#include "hangar/io.hpp"
#include "hangar/milp.hpp"
#include "hangar/report.hpp"
#include "hangar/validator.hpp"
#include "json.hpp"

namespace {

using namespace hangar;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;

int fail(const std::string& kind, const std::string& message, int code) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  std::cerr << j.dump() << std::endl;
  return code;
}

struct GenArgs {
  instgen::GeneratorConfig config;
  HangarConfig hangar;
  std::optional<double> congestion;
  std::string out;
};

struct Paths {
  std::string instance;
  std::string solution;
  std::string output;
  std::string model;
  std::string point;
  bool json = false;
  bool html = false;
};

struct ExactArgs {
  exact::OracleConfig config;
  std::optional<double> grid_step;
  std::optional<double> time_grid;
  bool no_prune = false;
};

void print_cost(const CostBreakdown& c) {
  std::printf("rejection %.6f\narrival_delay %.6f\ndeparture_delay %.6f\npositioning %.6f\n"
              "total %.6f\n",
              c.rejection, c.arrival_delay, c.departure_delay, c.positioning, c.total);
}

exact::OracleConfig oracle_config(const ExactArgs& a) {
  exact::OracleConfig c = a.config;
  c.grid_step = a.grid_step;
  if (a.time_grid) {
    c.time_candidates = exact::TimeCandidates::Grid;
    c.time_step = *a.time_grid;
  }
  c.prune = !a.no_prune;
  return c;
}

void add_exact_flags(CLI::App* cmd, ExactArgs& a) {
  cmd->add_option("--node-budget", a.config.node_budget, "Search node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-budget", a.config.time_budget, "Search time budget in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--grid-step", a.grid_step, "Position grid step in meters")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-grid", a.time_grid,
                  "Use a uniform roll-in grid with this step (hours)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-prune", a.no_prune, "Disable cost-bound pruning");
  cmd->add_option("--max-future", a.config.max_future,
                  "Largest number of future aircraft accepted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aircraft hangar scheduling and layout toolkit"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  GenArgs gen;
  Paths paths;
  ExactArgs ex;
  std::optional<double> ach_grid;
  std::vector<std::string> compare_inputs;
  std::string compare_out;
  std::size_t compare_gen_n = 0;
  std::size_t compare_seeds = 0;

  auto* cmd_gen = app.add_subcommand("gen", "Generate a random instance");
  cmd_gen->add_option("--n", gen.config.n, "Number of future aircraft")->required();
  cmd_gen->add_option("--seed", gen.config.seed, "Master seed")->required();
  cmd_gen->add_option("--congestion", gen.congestion,
                      "Compress inter-arrival gaps by this factor in (0,1]");
  cmd_gen->add_flag("--high-rejection", gen.config.high_rejection,
                    "Multiply every rejection penalty");
  cmd_gen->add_option("--high-rejection-factor", gen.config.high_rejection_factor,
                      "Multiplier used by --high-rejection");
  cmd_gen->add_option("--n-current", gen.config.n_current, "Pre-placed aircraft");
  cmd_gen->add_option("--time-horizon-factor", gen.config.time_horizon_factor,
                      "Hours of ETA range per future aircraft");
  cmd_gen->add_option("--vip-prob", gen.config.vip_prob, "VIP probability");
  cmd_gen->add_option("--hw", gen.hangar.hw, "Hangar width (m)");
  cmd_gen->add_option("--hl", gen.hangar.hl, "Hangar length (m)");
  cmd_gen->add_option("--buffer", gen.hangar.buffer, "Safety buffer (m)");
  cmd_gen->add_option("--eps-t", gen.hangar.eps_t, "Movement separation (h)");
  cmd_gen->add_option("--eps-p", gen.hangar.eps_p, "Positioning weight");
  cmd_gen->add_option("--grid-step", gen.hangar.grid_step, "Placement grid step (m)");
  cmd_gen->add_option("-o,--output", gen.out, "Instance file")->required();

  auto* cmd_ach = app.add_subcommand("solve-ach", "Solve with the constructive heuristic");
  cmd_ach->add_option("-i,--instance", paths.instance, "Instance file")->required();
  cmd_ach->add_option("-o,--output", paths.output, "Solution file")->required();
  cmd_ach->add_option("--grid-step", ach_grid, "Placement grid step (m)")
      ->check(CLI::PositiveNumber);

  auto* cmd_exact = app.add_subcommand("solve-exact", "Solve with the exact grid oracle");
  cmd_exact->add_option("-i,--instance", paths.instance, "Instance file")->required();
  cmd_exact->add_option("-o,--output", paths.output, "Solution file")->required();
  add_exact_flags(cmd_exact, ex);

  auto* cmd_export = app.add_subcommand("export-milp", "Write the MILP as an LP file");
  cmd_export->add_option("-i,--instance", paths.instance, "Instance file")->required();
  cmd_export->add_option("-o,--output", paths.output, "LP file")->required();

  auto* cmd_import = app.add_subcommand("import", "Import a solver point listing");
  cmd_import->add_option("-i,--instance", paths.instance, "Instance file")->required();
  cmd_import->add_option("-m,--model", paths.model, "LP file the point belongs to");
  cmd_import->add_option("-p,--point", paths.point, "`name value` listing")->required();
  cmd_import->add_option("-o,--output", paths.output, "Solution file")->required();

  auto* cmd_validate = app.add_subcommand("validate", "Check a solution");
  cmd_validate->add_option("-i,--instance", paths.instance, "Instance file")->required();
  cmd_validate->add_option("-s,--solution", paths.solution, "Solution file")->required();
  cmd_validate->add_flag("--json", paths.json, "Machine-readable report");

  auto* cmd_render = app.add_subcommand("render", "Draw frames and an HTML report");
  cmd_render->add_option("-i,--instance", paths.instance, "Instance file")->required();
  cmd_render->add_option("-s,--solution", paths.solution, "Solution file")->required();
  cmd_render->add_option("-o,--output", paths.output, "Output directory")->required();
  cmd_render->add_flag("--html", paths.html, "Also write report.html");

  auto* cmd_compare = app.add_subcommand("compare", "ACH against the exact oracle");
  cmd_compare->add_option("-i,--instances", compare_inputs, "Instance files");
  cmd_compare->add_option("--gen-n", compare_gen_n,
                          "Also generate instances with this many future aircraft");
  cmd_compare->add_option("--gen-seeds", compare_seeds, "Seeds 1..K for --gen-n");
  cmd_compare->add_option("-o,--output", compare_out, "CSV (or JSON) output file");
  cmd_compare->add_flag("--json", paths.json, "Write JSON instead of CSV");
  add_exact_flags(cmd_compare, ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), kExitOther);
  }

  try {
    if (cmd_gen->parsed()) {
      gen.config.congestion = gen.congestion;
      const Instance inst = instgen::generate(gen.config, gen.hangar);
      io::save_instance(inst, gen.out);
      std::printf("%s: %zu future, %zu current\n", inst.label.c_str(), inst.future.size(),
                  inst.current.size());
      return kExitOk;
    }
    if (cmd_ach->parsed()) {
      const Instance inst = io::load_instance(paths.instance);
      ach::Options options;
      options.grid_step = ach_grid;
      const Solution sol = ach::solve(inst, options);
      io::save_solution(sol, paths.output);
      print_cost(evaluate_cost(inst, sol));
      return kExitOk;
    }
    if (cmd_exact->parsed()) {
      const Instance inst = io::load_instance(paths.instance);
      const auto result = exact::solve_exact(inst, oracle_config(ex));
      io::save_solution(result.solution, paths.output);
      std::printf("status %s\nnodes %llu\n",
                  std::string(exact::to_string(result.status)).c_str(),
                  static_cast<unsigned long long>(result.nodes_explored));
      print_cost(result.cost);
      if (result.status == exact::OracleStatus::BudgetExhausted) {
        return fail("BudgetExhausted", "search stopped before proving optimality",
                    kExitBudget);
      }
      return kExitOk;
    }
    if (cmd_export->parsed()) {
      const Instance inst = io::load_instance(paths.instance);
      const auto model = milp::build_model(inst);
      io::write_file(paths.output, milp::export_lp(model));
      std::printf("variables %zu\nrows %zu\n", model.variables.size(), model.rows.size());
      return kExitOk;
    }
    if (cmd_import->parsed()) {
      const Instance inst = io::load_instance(paths.instance);
      const auto model = milp::build_model(inst);
      if (!paths.model.empty()) {
        const auto lp = milp::parse_lp(io::read_file(paths.model));
        bool same = lp.rows.size() == model.rows.size();
        for (std::size_t k = 0; same && k < lp.rows.size(); ++k) {
          same = lp.rows[k].name == model.rows[k].name;
        }
        if (!same) throw ParseError("model file " + paths.model + " does not match the instance");
      }
      try {
        const Solution sol = milp::import_solution(model, inst, io::read_file(paths.point));
        io::save_solution(sol, paths.output);
        print_cost(evaluate_cost(inst, sol));
        return kExitOk;
      } catch (const milp::InfeasibleImport& e) {
        std::cout << validator::explain(e.report());
        return fail(e.kind(), e.what(), kExitInfeasible);
      }
    }
    if (cmd_validate->parsed()) {
      const Instance inst = io::load_instance(paths.instance);
      const Solution sol = io::load_solution(paths.solution);
      const auto report = validator::validate(inst, sol);
      if (paths.json) {
        std::cout << validator::report_to_json(report);
      } else {
        std::cout << validator::explain(report);
        print_cost(report.cost);
      }
      return report.feasible ? kExitOk : kExitInfeasible;
    }
    if (cmd_render->parsed()) {
      const Instance inst = io::load_instance(paths.instance);
      const Solution sol = io::load_solution(paths.solution);
      const auto files = report::render_frames(inst, sol, paths.output);
      if (paths.html) {
        report::render_report(inst, sol, evaluate_cost(inst, sol),
                              std::filesystem::path(paths.output) / "report.html");
      }
      std::printf("frames %zu\n", files.size());
      return kExitOk;
    }
    if (cmd_compare->parsed()) {
      std::vector<Instance> instances;
      for (const auto& path : compare_inputs) instances.push_back(io::load_instance(path));
      for (std::size_t seed = 1; compare_gen_n > 0 && seed <= compare_seeds; ++seed) {
        instgen::GeneratorConfig g;
        g.n = compare_gen_n;
        g.seed = seed;
        instances.push_back(instgen::generate(g));
      }
      std::vector<compare::CompareRow> rows;
      for (const auto& inst : instances) {
        rows.push_back(compare::compare_instance(inst, oracle_config(ex)));
      }
      const std::string text =
          paths.json ? compare::rows_to_json(rows) : compare::rows_to_csv(rows);
      if (compare_out.empty()) {
        std::cout << text;
      } else {
        io::write_file(compare_out, text);
      }
      return kExitOk;
    }
  } catch (const report::InfeasibleSolution& e) {
    return fail(e.kind(), e.what(), kExitInfeasible);
  } catch (const ParseError& e) {
    std::string message = e.what();
    if (e.line() > 0) message += " (line " + std::to_string(e.line()) + ")";
    if (!e.field().empty()) message += " (field " + e.field() + ")";
    return fail(e.kind(), message, kExitParse);
  } catch (const InvalidInstance& e) {
    return fail(e.kind(), e.what(), kExitParse);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), kExitOther);
  } catch (const std::exception& e) {
    return fail("Error", e.what(), kExitOther);
  }
  return kExitOther;
}
