// Acceptance suite.  One PASS/FAIL line per criterion; exit status is the
// number of failures.  `--criterion N` runs a single criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "svrpll/batch.hpp"
#include "svrpll/bnc.hpp"
#include "svrpll/eif.hpp"
#include "svrpll/scenario.hpp"

namespace svrpll {
namespace {

// Tolerances and sample sizes pinned from the acceptance criteria.
constexpr double kOptimalityTol = 1e-6;
constexpr double kMinCutTol = 1e-9;
constexpr double kLpTol = 1e-6;
constexpr double kJacobianTol = 1e-5;
constexpr double kRuntimeLimitSeconds = 60.0;
constexpr double kContainmentMin = 0.95;
constexpr int kPairedWinsMin = 45;
constexpr int kMonteCarloSeeds = 50;
constexpr double kLandmarkMeanLo = 6.0;
constexpr double kLandmarkMeanHi = 12.0;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

int jobs() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

const BatchReport& reference_batch() {
  static const BatchReport report = [] {
    BatchOptions opts;
    opts.sizes = {15, 20, 25, 30};
    opts.per_size = 20;
    opts.seed_base = 0;
    opts.jobs = jobs();
    opts.time_limit = kRuntimeLimitSeconds;
    return run_batch(opts);
  }();
  return report;
}

struct CaseOne {
  Instance inst;
  Solution sol;
};

const CaseOne& case_one() {
  static const CaseOne c = [] {
    GenerateOptions g;
    g.num_targets = 15;
    g.seed = 0;
    CaseOne out{generate_instance(g), {}};
    const SolveResult res = solve(out.inst);
    if (!res.solution) {
      std::fprintf(stderr, "case-1 instance has no solution\n");
      std::exit(2);
    }
    out.sol = *res.solution;
    return out;
  }();
  return c;
}

SimConfig scenario_config(double range, std::uint64_t seed) {
  SimConfig cfg;
  cfg.controller_gain = 2.0;
  cfg.min_wp_distance = 1.0;
  cfg.sensing_range = range;
  cfg.n_steps = 3000;
  cfg.rng_seed = seed;
  return cfg;
}

Verdict exact_optimality() {
  int feasible = 0;
  int mismatches = 0;
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + t % 4;
    const Instance inst = oracle::small_instance(n, 8, 7000 + t, 50.0, 35.0);
    const auto brute = oracle::svrpll_by_enumeration(inst);
    const SolveResult res = solve(inst);
    if (brute.has_value() != res.solution.has_value() ||
        (brute && res.status != SolveStatus::kOptimal)) {
      ++mismatches;
      continue;
    }
    if (!brute) continue;
    ++feasible;
    const double diff = std::abs(brute->objective - res.solution->objective);
    worst = std::max(worst, diff);
    if (diff > kOptimalityTol) ++mismatches;
  }
  return {mismatches == 0,
          fmt("30 instances (%d feasible), mismatches=%d, max |diff|=%.3g",
              feasible, mismatches, worst)};
}

Verdict feasibility_invariants() {
  const BatchReport& b = reference_batch();
  int solved = 0;
  int violations = 0;
  int errors = 0;
  for (const BatchRecord& r : b.records) {
    if (r.status == "error") ++errors;
    if (r.has_solution) {
      ++solved;
      if (!r.feasible) ++violations;
    }
  }
  return {violations == 0 && errors == 0,
          fmt("%zu instances, %d solved, %d violations, %d errors",
              b.records.size(), solved, violations, errors)};
}

Verdict runtime() {
  const BatchReport& b = reference_batch();
  std::vector<double> walls;
  int unresolved = 0;
  int infeasible = 0;
  double worst = 0.0;
  for (const BatchRecord& r : b.records) {
    if (r.status == "infeasible") ++infeasible;
    if (r.status != "optimal" && r.status != "infeasible") ++unresolved;
    walls.push_back(r.wall_seconds);
    worst = std::max(worst, r.wall_seconds);
  }
  std::sort(walls.begin(), walls.end());
  const double median = walls.empty() ? 0.0
                        : walls.size() % 2 ? walls[walls.size() / 2]
                                           : 0.5 * (walls[walls.size() / 2 - 1] +
                                                    walls[walls.size() / 2]);
  return {unresolved == 0 && worst < kRuntimeLimitSeconds,
          fmt("median=%.4fs max=%.3fs limit=%.0fs unresolved=%d proven-infeasible=%d",
              median, worst, kRuntimeLimitSeconds, unresolved, infeasible)};
}

Verdict batch_trends() {
  const BatchReport& b = reference_batch();
  bool ok = true;
  std::string detail = "mean landmarks";
  double secs15 = -1.0;
  double secs30 = -1.0;
  for (const BatchBucket& k : b.buckets) {
    detail += fmt(" n%d=%.2f", k.num_targets, k.mean_landmarks);
    ok = ok && k.completed > 0 && k.mean_landmarks >= kLandmarkMeanLo &&
         k.mean_landmarks <= kLandmarkMeanHi;
    if (k.num_targets == 15) secs15 = k.mean_sec_rows;
    if (k.num_targets == 30) secs30 = k.mean_sec_rows;
  }
  ok = ok && secs15 >= 0.0 && secs30 > secs15;
  detail += fmt("; mean SEC rows n15=%.2f n30=%.2f", secs15, secs30);
  return {ok, detail};
}

Verdict min_cut_oracle() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> size(2, 12);
  int mismatches = 0;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const SupportGraph g = oracle::random_connected_graph(rng, size(rng));
    const CutResult cut = global_min_cut(g);
    const double brute = oracle::min_cut_by_enumeration(g);
    const double diff = std::max(std::abs(cut.value - brute),
                                 std::abs(oracle::cut_weight(g, cut.side) - cut.value));
    worst = std::max(worst, diff);
    if (diff > kMinCutTol) ++mismatches;
  }
  return {mismatches == 0,
          fmt("200 graphs, mismatches=%d, max |diff|=%.3g", mismatches, worst)};
}

Verdict lp_oracle() {
  std::mt19937_64 rng(777);
  int mismatches = 0;
  int infeasible = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const LpProblem p = oracle::random_lp(rng, 8, 6);
    const auto brute = oracle::lp_by_vertices(p);
    const LpSolution s = solve_lp(p);
    const bool opt = s.status == LpStatus::kOptimal;
    if (opt != brute.has_value()) {
      ++mismatches;
      continue;
    }
    if (!opt) {
      ++infeasible;
      continue;
    }
    const double diff = std::abs(s.objective - *brute);
    worst = std::max(worst, diff);
    if (diff > kLpTol) ++mismatches;
  }
  return {mismatches == 0,
          fmt("100 problems (%d infeasible), mismatches=%d, max |diff|=%.3g",
              infeasible, mismatches, worst)};
}

Verdict filter_consistency() {
  const CaseOne& c = case_one();
  std::array<double, 3> mean{};
  int completed = 0;
  for (int s = 0; s < kMonteCarloSeeds; ++s) {
    const Trace tr = run_scenario(c.sol, c.inst, scenario_config(35.0, s));
    const ErrorReport r = error_stats(tr);
    if (tr.completed) ++completed;
    for (int a = 0; a < 3; ++a) mean[a] += r.containment[a] / kMonteCarloSeeds;
  }
  const bool ok = std::all_of(mean.begin(), mean.end(),
                              [](double m) { return m >= kContainmentMin; });
  return {ok, fmt("mean 3-sigma containment x=%.4f y=%.4f psi=%.4f (min %.2f), "
                  "%d/%d runs completed",
                  mean[0], mean[1], mean[2], kContainmentMin, completed,
                  kMonteCarloSeeds)};
}

Verdict degraded_sensing() {
  const CaseOne& c = case_one();
  int wins = 0;
  int lower_visibility = 0;
  for (int s = 0; s < kMonteCarloSeeds; ++s) {
    const ErrorReport r35 =
        error_stats(run_scenario(c.sol, c.inst, scenario_config(35.0, s)));
    const ErrorReport r20 =
        error_stats(run_scenario(c.sol, c.inst, scenario_config(20.0, s)));
    if (r20.position_rmse > r35.position_rmse) ++wins;
    if (r20.two_visible_fraction < r35.two_visible_fraction) ++lower_visibility;
  }
  return {wins >= kPairedWinsMin && lower_visibility == kMonteCarloSeeds,
          fmt("range 20 RMSE larger in %d/%d seeds (need %d); lower 2-visible "
              "fraction in %d/%d",
              wins, kMonteCarloSeeds, kPairedWinsMin, lower_visibility,
              kMonteCarloSeeds)};
}

Verdict jacobians() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pos(-50.0, 50.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> vel(0.0, 2.0);
  std::uniform_real_distribution<double> rate(-2.0, 2.0);
  std::uniform_real_distribution<double> step(0.01, 0.5);
  double worst_f = 0.0;
  double worst_g = 0.0;
  double worst_h = 0.0;
  for (int t = 0; t < 100; ++t) {
    const VehicleState s{pos(rng), pos(rng), ang(rng)};
    const ControlInput u{vel(rng), rate(rng)};
    const double dt = step(rng);
    worst_f = std::max(worst_f, (dynamics_jacobian_state(s, u, dt) -
                                 oracle::fd_jacobian_state(s, u, dt))
                                    .cwiseAbs()
                                    .maxCoeff());
    worst_g = std::max(worst_g, (dynamics_jacobian_input(s, dt) -
                                 oracle::fd_jacobian_input(s, u, dt))
                                    .cwiseAbs()
                                    .maxCoeff());
    Point2 lm{pos(rng), pos(rng)};
    while (distance(lm, s.position()) < 1.0) lm = {pos(rng), pos(rng)};
    worst_h = std::max(worst_h, (bearing_jacobian(s, lm) -
                                 oracle::fd_bearing_jacobian(s, lm))
                                    .cwiseAbs()
                                    .maxCoeff());
  }
  return {worst_f <= kJacobianTol && worst_g <= kJacobianTol &&
              worst_h <= kJacobianTol,
          fmt("max |diff| F=%.3g G=%.3g H=%.3g (tol %.0e)", worst_f, worst_g,
              worst_h, kJacobianTol)};
}

Verdict observability() {
  const CaseOne& c = case_one();
  // Clause 1: between consecutive recorded steps that both see fewer than two
  // landmarks, trace(P) may not decrease.  Clause 2: an update with two or
  // more landmarks may not increase the position-block trace.
  int windows = 0;
  int window_pairs = 0;
  int decreases = 0;
  double worst_rel = 0.0;
  int updates = 0;
  int increases = 0;
  for (int s = 0; s < kMonteCarloSeeds; ++s) {
    const Trace tr = run_scenario(c.sol, c.inst, scenario_config(20.0, s));
    bool in_window = false;
    for (size_t k = 0; k < tr.steps.size(); ++k) {
      const TraceStep& st = tr.steps[k];
      if (st.n_visible >= 2) {
        ++updates;
        const double prior = st.prior_cov_diag[0] + st.prior_cov_diag[1];
        const double post = st.cov_diag[0] + st.cov_diag[1];
        if (post > prior * (1.0 + 1e-12)) ++increases;
        in_window = false;
        continue;
      }
      if (!in_window) ++windows;
      in_window = true;
      if (k == 0 || tr.steps[k - 1].n_visible >= 2) continue;
      ++window_pairs;
      const double before = tr.steps[k - 1].cov_diag.sum();
      const double after = st.cov_diag.sum();
      if (after < before * (1.0 - 1e-12)) {
        ++decreases;
        worst_rel = std::max(worst_rel, (before - after) / before);
      }
    }
  }
  return {decreases == 0 && increases == 0,
          fmt("range 20, %d seeds: %d sub-2 windows, trace(P) decreased in "
              "%d/%d in-window steps (worst %.3g relative); position trace "
              "increased in %d/%d 2+-landmark updates",
              kMonteCarloSeeds, windows, decreases, window_pairs, worst_rel,
              increases, updates)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace svrpll

int main(int argc, char** argv) {
  using svrpll::Criterion;
  const std::vector<Criterion> all = {
      {1, "exact optimality vs brute force", svrpll::exact_optimality},
      {2, "feasibility invariants on 80-instance batch",
       svrpll::feasibility_invariants},
      {3, "runtime per instance", svrpll::runtime},
      {4, "batch landmark and SEC trends", svrpll::batch_trends},
      {5, "min cut vs enumeration", svrpll::min_cut_oracle},
      {6, "LP vs vertex enumeration", svrpll::lp_oracle},
      {7, "filter 3-sigma consistency", svrpll::filter_consistency},
      {8, "degraded sensing effect", svrpll::degraded_sensing},
      {9, "Jacobians vs finite differences", svrpll::jacobians},
      {10, "observability at covariance level", svrpll::observability},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 64;
    }
  }
  int failures = 0;
  int ran = 0;
  for (const Criterion& c : all) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    svrpll::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", c.id,
                c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 64;
  }
  return failures;
}
