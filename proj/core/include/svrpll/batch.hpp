#ifndef SVRPLL_BATCH_HPP_
#define SVRPLL_BATCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "svrpll/bnc.hpp"

namespace svrpll {

struct BatchOptions {
  std::vector<int> sizes{15, 20, 25, 30};
  int per_size = 20;
  std::int64_t seed_base = 0;
  int jobs = 1;
  double time_limit = 0.0;  // per instance, 0 = unlimited
  double grid_side = 100.0;
  int site_factor = 5;
  double sensing_range = 35.0;
  double landmark_weight = 1.0;
};

// Seed of the i-th instance with n targets.
std::int64_t batch_instance_seed(std::int64_t seed_base, int n, int i);

struct BatchRecord {
  int num_targets = 0;
  int index = 0;
  std::int64_t seed = 0;
  std::string status;  // optimal, limit, infeasible or error
  bool has_solution = false;
  bool feasible = false;  // solution passed check_feasible
  double objective = 0.0;
  double travel_cost = 0.0;
  int landmarks = 0;
  std::int64_t sec_rows = 0;
  std::int64_t nodes = 0;
  double wall_seconds = 0.0;
  std::string error;

  // Optimal with a verified solution; only these enter the bucket means.
  bool completed() const { return status == "optimal" && feasible; }
};

struct BatchBucket {
  int num_targets = 0;
  int count = 0;
  int completed = 0;
  double mean_sec_rows = 0.0;
  double mean_landmarks = 0.0;
  double mean_wall_seconds = 0.0;
  double median_wall_seconds = 0.0;
  double max_wall_seconds = 0.0;
  double mean_objective = 0.0;
};

struct BatchReport {
  std::vector<BatchRecord> records;  // ordered by (size, index)
  std::vector<BatchBucket> buckets;  // ordered by size
};

// Generate, solve and verify one instance.  Never throws; failures are
// recorded in the status and error fields.
BatchRecord run_batch_instance(const BatchOptions& opts, int n, int i);

// Buckets from records alone.
std::vector<BatchBucket> aggregate(const std::vector<BatchRecord>& records);

// Runs instances on up to opts.jobs threads.
BatchReport run_batch(const BatchOptions& opts);

std::string batch_json(const BatchReport& report);
std::string batch_table(const BatchReport& report);

}  // namespace svrpll

#endif  // SVRPLL_BATCH_HPP_
