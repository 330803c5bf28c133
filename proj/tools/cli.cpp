#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "svrpll/batch.hpp"
#include "svrpll/bnc.hpp"
#include "svrpll/errors.hpp"
#include "svrpll/instance.hpp"
#include "svrpll/io.hpp"
#include "svrpll/model.hpp"
#include "svrpll/scenario.hpp"
#include "svrpll/svg.hpp"

namespace svrpll::cli {
namespace {

struct GenArgs {
  int targets = 0;
  std::int64_t seed = 0;
  std::string out;
  double grid = 100.0;
  int site_factor = 5;
  double range = 35.0;
  double landmark_cost = 1.0;
  std::string cost_file;
};

struct SolveArgs {
  std::string instance;
  std::string out;
  double time_limit = 0.0;
  double lm_weight = 1.0;
};

struct SimArgs {
  std::string instance;
  std::string solution;
  std::string out_prefix = "sim";
  double gain = 2.0;
  double min_dist = 1.0;
  double range = 35.0;
  int steps = 3000;
  std::uint64_t seed = 0;
  double dt = SimConfig{}.dt;
  double sigma_bearing_deg = 0.5;
  double filter_sigma_deg = 0.0;
  double q = 1e-4;
  double lm_weight = 1.0;
  int ellipse_every = 100;
};

struct BatchArgs {
  std::vector<int> sizes{15, 20, 25, 30};
  int per_size = 20;
  std::int64_t seed_base = 0;
  int jobs = 1;
  double time_limit = 0.0;
  std::string out_json;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GenerateOptions opts;
  opts.num_targets = a.targets;
  opts.seed = a.seed;
  opts.grid_side = a.grid;
  opts.site_factor = a.site_factor;
  opts.sensing_range = a.range;
  Instance inst = generate_instance(opts);
  if (!a.cost_file.empty()) {
    inst.landmark_cost = costs_from_json(read_file(a.cost_file));
  } else {
    std::fill(inst.landmark_cost.begin(), inst.landmark_cost.end(),
              a.landmark_cost);
  }
  check_instance(inst);
  write_file(a.out, instance_to_json(inst));

  const ValidationReport rep = validate_instance(inst, compute_cover_sets(inst));
  out << "targets=" << inst.num_targets() << " sites=" << inst.num_sites()
      << " range=" << inst.sensing_range << " seed=" << inst.seed << '\n';
  out << "deficient_targets=";
  for (size_t i = 0; i < rep.deficient_targets.size(); ++i) {
    out << (i ? "," : "") << rep.deficient_targets[i];
  }
  out << "\ninfeasible_certain=" << (rep.infeasible_certain ? "true" : "false")
      << '\n';
  return kExitOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = instance_from_json(read_file(a.instance));
  SolveParams params;
  params.time_limit = a.time_limit;
  params.landmark_weight = a.lm_weight;
  if (log_level() >= 2) params.progress = &err;
  const SolveResult res = solve(inst, params);
  if (res.solution) write_file(a.out, solution_to_json(*res.solution));
  if (log_level() >= 1) {
    out << std::setprecision(10) << "status=" << to_string(res.status);
    if (res.solution) {
      out << " objective=" << res.solution->objective
          << " travel=" << res.solution->travel_cost
          << " landmarks=" << res.solution->placed_sites.size();
    }
    out << " nodes=" << res.stats.nodes << " secs=" << res.stats.sec_rows
        << " bound=" << res.stats.best_bound
        << " time=" << res.stats.wall_seconds << '\n';
  }
  switch (res.status) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kLimitReached:
      return kExitLimit;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
  }
  return kExitInfeasible;
}

int cmd_sim(const SimArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = instance_from_json(read_file(a.instance));
  const Solution sol = solution_from_json(read_file(a.solution));
  const CoverSets cov = compute_cover_sets(inst);
  const MilpModel model =
      build_model(inst, cov, compute_edge_costs(inst), {a.lm_weight});
  const FeasibilityVerdict verdict = check_feasible(model, sol, cov);
  if (!verdict.feasible) {
    err << "refusing to simulate: solution is infeasible for this instance\n";
    for (const std::string& v : verdict.violations) err << "  " << v << '\n';
    return kExitInfeasible;
  }

  constexpr double kDeg = kPi / 180.0;
  SimConfig cfg;
  cfg.controller_gain = a.gain;
  cfg.min_wp_distance = a.min_dist;
  cfg.sensing_range = a.range;
  cfg.n_steps = a.steps;
  cfg.rng_seed = a.seed;
  cfg.dt = a.dt;
  cfg.bearing_noise_std = a.sigma_bearing_deg * kDeg;
  // A noiseless sensor still needs a positive filter noise model.
  cfg.filter_bearing_std =
      a.filter_sigma_deg > 0.0 ? a.filter_sigma_deg * kDeg
      : a.sigma_bearing_deg > 0.0 ? 0.0
                                  : 0.5 * kDeg;
  if (!(a.q >= 0.0)) throw ParameterError("--q must be >= 0");
  cfg.process_noise = Eigen::Vector2d(a.q, a.q).asDiagonal();

  const Trace trace = run_scenario(sol, inst, cfg);
  const ErrorReport rep = error_stats(trace);
  {
    std::ostringstream csv;
    write_trace_csv(csv, trace);
    write_file(a.out_prefix + "_trace.csv", csv.str());
  }
  write_file(a.out_prefix + "_summary.json", summary_json(trace, rep));
  write_file(a.out_prefix + "_trajectory.svg",
             trajectory_svg(trace, a.ellipse_every));
  write_file(a.out_prefix + "_errors.svg", error_svg(trace, rep));
  if (log_level() >= 1) {
    out << std::setprecision(6) << "steps=" << trace.steps.size()
        << " completed=" << (trace.completed ? "true" : "false")
        << " diverged=" << (trace.diverged ? "true" : "false")
        << " position_rmse=" << rep.position_rmse
        << " containment=" << rep.containment[0] << ',' << rep.containment[1]
        << ',' << rep.containment[2]
        << " two_visible=" << rep.two_visible_fraction << '\n';
  }
  return kExitOk;
}

int cmd_batch(const BatchArgs& a, std::ostream& out, std::ostream& err) {
  BatchOptions opts;
  opts.sizes = a.sizes;
  opts.per_size = a.per_size;
  opts.seed_base = a.seed_base;
  opts.jobs = a.jobs;
  opts.time_limit = a.time_limit;
  const BatchReport report = run_batch(opts);
  if (!a.out_json.empty()) write_file(a.out_json, batch_json(report));
  out << batch_table(report);
  for (const BatchRecord& r : report.records) {
    if (r.status == "error" || (!r.error.empty() && log_level() >= 1)) {
      err << "instance n=" << r.num_targets << " seed=" << r.seed << ": "
          << r.status << ' ' << r.error << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int log_level() {
  const char* env = std::getenv("SVRPLL_LOG");
  if (env == nullptr) return 1;
  const std::string v(env);
  if (v == "0" || v == "quiet") return 0;
  if (v == "2" || v == "debug") return 2;
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tour and landmark placement solver with closed-loop simulation",
               "svrpll"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--targets", gen.targets, "Number of targets")
      ->required()
      ->check(CLI::Range(2, 100000));
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Instance JSON path")->required();
  gen_cmd->add_option("--grid", gen.grid, "Grid side length")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--site-factor", gen.site_factor,
                      "Candidate sites per target")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--range", gen.range, "Sensing range")
      ->check(CLI::PositiveNumber);
  auto* cost_opt =
      gen_cmd->add_option("--landmark-cost", gen.landmark_cost,
                          "Uniform landmark cost")
          ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--cost-file", gen.cost_file,
                      "JSON array with one landmark cost per site")
      ->excludes(cost_opt);

  SolveArgs slv;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--instance", slv.instance)->required();
  solve_cmd->add_option("--out", slv.out, "Solution JSON path")->required();
  solve_cmd->add_option("--time-limit", slv.time_limit, "Seconds, 0 = none")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--lm-weight", slv.lm_weight,
                        "Weight on the landmark cost term")
      ->check(CLI::NonNegativeNumber);

  SimArgs sim;
  CLI::App* sim_cmd = app.add_subcommand("sim", "Simulate a solved route");
  sim_cmd->add_option("--instance", sim.instance)->required();
  sim_cmd->add_option("--solution", sim.solution)->required();
  sim_cmd->add_option("--out-prefix", sim.out_prefix,
                      "Writes PREFIX_trace.csv, PREFIX_summary.json, "
                      "PREFIX_trajectory.svg, PREFIX_errors.svg");
  sim_cmd->add_option("--gain", sim.gain)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--min-dist", sim.min_dist)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--range", sim.range)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--steps", sim.steps)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim.seed);
  sim_cmd->add_option("--dt", sim.dt)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--sigma-bearing", sim.sigma_bearing_deg,
                      "Bearing noise std, degrees")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--filter-sigma", sim.filter_sigma_deg,
                      "Filter bearing std, degrees; 0 = sensor value")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--q", sim.q, "Process noise variance per input")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--lm-weight", sim.lm_weight,
                      "Landmark weight the solution was priced with")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--ellipse-every", sim.ellipse_every,
                      "Steps between 3-sigma ellipses")
      ->check(CLI::NonNegativeNumber);

  BatchArgs bat;
  CLI::App* batch_cmd = app.add_subcommand("batch", "Generate and solve a batch");
  batch_cmd->add_option("--sizes", bat.sizes)->delimiter(',');
  batch_cmd->add_option("--per-size", bat.per_size)->check(CLI::PositiveNumber);
  batch_cmd->add_option("--seed-base", bat.seed_base);
  batch_cmd->add_option("--jobs", bat.jobs)->check(CLI::PositiveNumber);
  batch_cmd->add_option("--time-limit", bat.time_limit)
      ->check(CLI::NonNegativeNumber);
  batch_cmd->add_option("--out", bat.out_json, "Report JSON path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*solve_cmd) return cmd_solve(slv, out, err);
    if (*sim_cmd) return cmd_sim(sim, out, err);
    if (*batch_cmd) {
      for (int n : bat.sizes) {
        if (n < 2) throw ParameterError("--sizes entries must be >= 2");
      }
      return cmd_batch(bat, out, err);
    }
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace svrpll::cli
