#include "svrpll/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <thread>

#include "json.hpp"
#include "svrpll/errors.hpp"

namespace svrpll {

std::int64_t batch_instance_seed(std::int64_t seed_base, int n, int i) {
  return seed_base + 1000 * static_cast<std::int64_t>(n) + i;
}

BatchRecord run_batch_instance(const BatchOptions& opts, int n, int i) {
  BatchRecord rec;
  rec.num_targets = n;
  rec.index = i;
  rec.seed = batch_instance_seed(opts.seed_base, n, i);
  try {
    GenerateOptions gen;
    gen.num_targets = n;
    gen.seed = rec.seed;
    gen.grid_side = opts.grid_side;
    gen.site_factor = opts.site_factor;
    gen.sensing_range = opts.sensing_range;
    const Instance inst = generate_instance(gen);

    SolveParams params;
    params.time_limit = opts.time_limit;
    params.landmark_weight = opts.landmark_weight;
    const SolveResult res = solve(inst, params);
    rec.status = to_string(res.status);
    rec.sec_rows = res.stats.sec_rows;
    rec.nodes = res.stats.nodes;
    rec.wall_seconds = res.stats.wall_seconds;
    if (res.solution) {
      const Solution& sol = *res.solution;
      rec.has_solution = true;
      const CoverSets cov = compute_cover_sets(inst);
      const MilpModel model = build_model(inst, cov, compute_edge_costs(inst),
                                          {opts.landmark_weight});
      const FeasibilityVerdict verdict = check_feasible(model, sol, cov);
      rec.feasible = verdict.feasible;
      if (!verdict.feasible) rec.error = verdict.violations.front();
      rec.objective = sol.objective;
      rec.travel_cost = sol.travel_cost;
      rec.landmarks = static_cast<int>(sol.placed_sites.size());
    }
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

std::vector<BatchBucket> aggregate(const std::vector<BatchRecord>& records) {
  std::map<int, std::vector<const BatchRecord*>> by_size;
  for (const BatchRecord& r : records) by_size[r.num_targets].push_back(&r);
  std::vector<BatchBucket> out;
  for (const auto& [n, recs] : by_size) {
    BatchBucket b;
    b.num_targets = n;
    b.count = static_cast<int>(recs.size());
    std::vector<double> walls;
    for (const BatchRecord* r : recs) {
      if (!r->completed()) continue;
      ++b.completed;
      b.mean_sec_rows += static_cast<double>(r->sec_rows);
      b.mean_landmarks += r->landmarks;
      b.mean_wall_seconds += r->wall_seconds;
      b.mean_objective += r->objective;
      walls.push_back(r->wall_seconds);
    }
    if (b.completed > 0) {
      const double c = b.completed;
      b.mean_sec_rows /= c;
      b.mean_landmarks /= c;
      b.mean_wall_seconds /= c;
      b.mean_objective /= c;
      std::sort(walls.begin(), walls.end());
      const size_t m = walls.size();
      b.median_wall_seconds =
          m % 2 == 1 ? walls[m / 2] : 0.5 * (walls[m / 2 - 1] + walls[m / 2]);
      b.max_wall_seconds = walls.back();
    }
    out.push_back(b);
  }
  return out;
}

BatchReport run_batch(const BatchOptions& opts) {
  if (opts.per_size < 1) throw ParameterError("run_batch: per_size must be >= 1");
  if (opts.sizes.empty()) throw ParameterError("run_batch: no sizes");
  std::vector<std::pair<int, int>> jobs;
  for (int n : opts.sizes) {
    for (int i = 0; i < opts.per_size; ++i) jobs.emplace_back(n, i);
  }
  BatchReport report;
  report.records.resize(jobs.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t k = next++; k < jobs.size(); k = next++) {
      report.records[k] = run_batch_instance(opts, jobs[k].first, jobs[k].second);
    }
  };
  const int n_threads =
      std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  report.buckets = aggregate(report.records);
  return report;
}

std::string batch_json(const BatchReport& report) {
  using nlohmann::ordered_json;
  ordered_json records = ordered_json::array();
  for (const BatchRecord& r : report.records) {
    records.push_back({{"n", r.num_targets},
                       {"index", r.index},
                       {"seed", r.seed},
                       {"status", r.status},
                       {"has_solution", r.has_solution},
                       {"feasible", r.feasible},
                       {"objective", r.objective},
                       {"travel_cost", r.travel_cost},
                       {"landmarks", r.landmarks},
                       {"sec_rows", r.sec_rows},
                       {"nodes", r.nodes},
                       {"wall_seconds", r.wall_seconds},
                       {"error", r.error}});
  }
  ordered_json buckets = ordered_json::array();
  for (const BatchBucket& b : report.buckets) {
    buckets.push_back({{"n", b.num_targets},
                       {"count", b.count},
                       {"completed", b.completed},
                       {"mean_sec_rows", b.mean_sec_rows},
                       {"mean_landmarks", b.mean_landmarks},
                       {"mean_wall_seconds", b.mean_wall_seconds},
                       {"median_wall_seconds", b.median_wall_seconds},
                       {"max_wall_seconds", b.max_wall_seconds},
                       {"mean_objective", b.mean_objective}});
  }
  ordered_json j;
  j["buckets"] = std::move(buckets);
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

std::string batch_table(const BatchReport& report) {
  std::string out =
      "   n  count  done  mean_secs  mean_lms  mean_wall  median_wall  "
      "mean_objective\n";
  char line[160];
  for (const BatchBucket& b : report.buckets) {
    std::snprintf(line, sizeof(line),
                  "%4d  %5d  %4d  %9.2f  %8.2f  %9.4f  %11.4f  %14.4f\n",
                  b.num_targets, b.count, b.completed, b.mean_sec_rows,
                  b.mean_landmarks, b.mean_wall_seconds, b.median_wall_seconds,
                  b.mean_objective);
    out += line;
  }
  return out;
}

}  // namespace svrpll
