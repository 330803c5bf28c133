#include "svrpll/instance.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "svrpll/errors.hpp"
#include "svrpll/random.hpp"

namespace svrpll {

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void check_instance(const Instance& inst) {
  if (inst.targets.size() < 2) {
    throw ParameterError("instance needs at least two targets");
  }
  if (!(inst.sensing_range > 0.0) || !std::isfinite(inst.sensing_range)) {
    throw ParameterError("sensing range must be positive and finite");
  }
  if (inst.landmark_cost.size() != inst.candidate_sites.size()) {
    throw ParameterError("landmark_cost must have one entry per site");
  }
  auto finite = [](const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
  };
  if (!std::all_of(inst.targets.begin(), inst.targets.end(), finite) ||
      !std::all_of(inst.candidate_sites.begin(), inst.candidate_sites.end(),
                   finite)) {
    throw ParameterError("coordinates must be finite");
  }
  for (double d : inst.landmark_cost) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw ParameterError("landmark costs must be finite and nonnegative");
    }
  }
}

EdgeIndex::EdgeIndex(int num_targets) : n_(num_targets) {
  edges_.reserve(static_cast<size_t>(num_edges()));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) edges_.push_back({i, j});
  }
}

int EdgeIndex::ordinal(int i, int j) const {
  if (i > j) std::swap(i, j);
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

Instance generate_instance(const GenerateOptions& opts) {
  if (opts.num_targets < 2) {
    throw ParameterError("need at least 2 targets, got " +
                         std::to_string(opts.num_targets));
  }
  if (!(opts.grid_side > 0.0)) throw ParameterError("grid side must be > 0");
  if (!(opts.sensing_range > 0.0)) {
    throw ParameterError("sensing range must be > 0");
  }
  if (opts.site_factor < 0) throw ParameterError("site factor must be >= 0");

  const auto master = static_cast<std::uint64_t>(opts.seed);
  Instance inst;
  inst.seed = opts.seed;
  inst.sensing_range = opts.sensing_range;

  Rng target_rng(derive_seed(master, "targets"));
  inst.targets.reserve(static_cast<size_t>(opts.num_targets));
  for (int i = 0; i < opts.num_targets; ++i) {
    const double x = target_rng.uniform(0.0, opts.grid_side);
    const double y = target_rng.uniform(0.0, opts.grid_side);
    inst.targets.push_back({x, y});
  }

  const int num_sites = opts.site_factor * opts.num_targets;
  Rng site_rng(derive_seed(master, "sites"));
  inst.candidate_sites.reserve(static_cast<size_t>(num_sites));
  for (int k = 0; k < num_sites; ++k) {
    const double x = site_rng.uniform(0.0, opts.grid_side);
    const double y = site_rng.uniform(0.0, opts.grid_side);
    inst.candidate_sites.push_back({x, y});
  }
  inst.landmark_cost.assign(static_cast<size_t>(num_sites), 1.0);
  return inst;
}

CoverSets compute_cover_sets(const Instance& inst) {
  CoverSets cov;
  const int n = inst.num_targets();
  cov.per_target.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < inst.num_sites(); ++k) {
      if (distance(inst.targets[v], inst.candidate_sites[k]) <
          inst.sensing_range) {
        cov.per_target[v].push_back(k);
      }
    }
  }
  const EdgeIndex index(n);
  cov.per_edge.resize(static_cast<size_t>(index.num_edges()));
  for (const EdgeId& e : index.edges()) {
    const auto& a = cov.per_target[e.i];
    const auto& b = cov.per_target[e.j];
    auto& out = cov.per_edge[index.ordinal(e)];
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
  }
  return cov;
}

EdgeCosts compute_edge_costs(const Instance& inst) {
  const EdgeIndex index(inst.num_targets());
  EdgeCosts costs;
  costs.cost.reserve(static_cast<size_t>(index.num_edges()));
  for (const EdgeId& e : index.edges()) {
    costs.cost.push_back(distance(inst.targets[e.i], inst.targets[e.j]));
  }
  return costs;
}

ValidationReport validate_instance(const Instance& inst, const CoverSets& cov) {
  const int n = inst.num_targets();
  const EdgeIndex index(n);
  ValidationReport report;
  report.coverable_degree.assign(static_cast<size_t>(n), 0);
  for (const EdgeId& e : index.edges()) {
    if (cov.per_edge[index.ordinal(e)].size() >= 2) {
      ++report.coverable_degree[e.i];
      ++report.coverable_degree[e.j];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (report.coverable_degree[v] < 2) report.deficient_targets.push_back(v);
  }
  report.infeasible_certain = !report.deficient_targets.empty();
  return report;
}

}  // namespace svrpll
