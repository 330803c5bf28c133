#include "svrpll/bnc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "svrpll/errors.hpp"
#include "svrpll/separation.hpp"

namespace svrpll {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Side of the SEC that excludes the depot; S and V \ S give the same row.
std::vector<int> canonical_side(const std::vector<int>& side, int n) {
  if (std::find(side.begin(), side.end(), 0) == side.end()) return side;
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (int v : side) in[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

bool is_integral(double v, double tol) {
  return std::abs(v - std::round(v)) <= tol;
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kLimitReached:
      return "limit";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

SearchState::SearchState(MilpModel model, CoverSets cov, SolveParams params)
    : model_(std::move(model)), cov_(std::move(cov)), params_(params) {}

double SearchState::upper_bound() const {
  return incumbent_ ? incumbent_->objective : kInf;
}

bool SearchState::worse(const OpenEntry& a, const OpenEntry& b) {
  if (a.bound != b.bound) return a.bound > b.bound;
  if (a.depth != b.depth) return a.depth < b.depth;
  return a.seq < b.seq;
}

void SearchState::push(Node node) {
  OpenEntry entry{node.parent_objective, node.depth, seq_++, std::move(node)};
  open_.push_back(std::move(entry));
  std::push_heap(open_.begin(), open_.end(), worse);
}

Node SearchState::pop() {
  std::pop_heap(open_.begin(), open_.end(), worse);
  Node node = std::move(open_.back().node);
  open_.pop_back();
  return node;
}

double SearchState::open_bound() const {
  return open_.empty() ? kInf : open_.front().bound;
}

bool SearchState::add_sec(Row row) {
  auto key = canonical_side(row.sec_set, model_.num_targets);
  if (!pooled_sets_.insert(std::move(key)).second) return false;
  model_.dynamic_rows.push_back(std::move(row));
  ++stats_.sec_rows;
  return true;
}

bool SearchState::offer(const Solution& sol) {
  if (incumbent_ && sol.objective >= incumbent_->objective) return false;
  incumbent_ = sol;
  ++stats_.incumbents;
  return true;
}

VarId pick_branch_var(const MilpModel& model, const std::vector<double>& values,
                      double tol) {
  int best = -1;
  double best_dist = kInf;
  // Columns are ordered edges first, so scanning upward with a strict
  // comparison implements "edge before site, then lowest index".
  for (int c = 0; c < static_cast<int>(values.size()); ++c) {
    if (is_integral(values[c], tol)) continue;
    const double dist = std::abs(values[c] - 0.5);
    if (dist < best_dist - 1e-12) {
      best_dist = dist;
      best = c;
    }
  }
  if (best < 0) {
    throw PreconditionError("pick_branch_var: all values are integral");
  }
  return model.var(best);
}

NodeOutcome evaluate_node(Node& node, SearchState& state) {
  const MilpModel& model = state.model();
  const SolveParams& params = state.params();
  SearchStats& stats = state.stats();

  std::vector<VarBounds> bounds = model.bounds;
  for (const BranchBound& b : node.extra_bounds) {
    VarBounds& vb = bounds[model.column(b.var)];
    vb.lo = std::max(vb.lo, b.lo);
    vb.hi = std::min(vb.hi, b.hi);
  }
  NodeOutcome out;
  for (const VarBounds& vb : bounds) {
    if (vb.lo > vb.hi) return out;  // contradictory fixings
  }

  const LpProblem lp = relaxation(model, {}, bounds);
  const LpSolution sol =
      node.basis.empty() ? solve_lp(lp) : warm_start(lp, node.basis);
  ++stats.lp_solves;
  stats.lp_iterations += sol.iterations;
  if (sol.status != LpStatus::kOptimal) return out;

  out.lp_objective = sol.objective;
  node.basis = sol.basis;
  const double ub = state.upper_bound();
  if (ub < kInf && sol.objective >= ub - 1e-9 * std::max(1.0, std::abs(ub))) {
    return out;
  }

  const std::vector<double> edge_values(sol.values.begin(),
                                        sol.values.begin() + model.num_edges);
  for (Row& row : separate_secs(edge_values, model.num_targets,
                                params.cut_violation_tol)) {
    if (state.add_sec(std::move(row))) ++out.rows_added;
  }
  if (out.rows_added > 0) {
    out.kind = NodeOutcomeKind::kCutsAdded;
    return out;
  }

  const bool integral =
      std::all_of(sol.values.begin(), sol.values.end(),
                  [&](double v) { return is_integral(v, params.integrality_tol); });
  if (integral) {
    const EdgeIndex index(model.num_targets);
    std::vector<EdgeId> edges;
    for (int e = 0; e < model.num_edges; ++e) {
      if (sol.values[e] > 0.5) edges.push_back(index.edge(e));
    }
    std::vector<int> sites;
    for (int k = 0; k < model.num_sites; ++k) {
      if (sol.values[model.num_edges + k] > 0.5) sites.push_back(k);
    }
    const std::vector<int> order = order_from_edges(model.num_targets, edges);
    if (order.empty()) {
      throw LpInternalError(
          "integral LP point passed separation but is not a single tour");
    }
    Solution candidate = make_solution(model, order, std::move(sites));
    const FeasibilityVerdict verdict =
        check_feasible(model, candidate, state.cover_sets());
    if (!verdict.feasible) {
      throw LpInternalError("integral LP point failed feasibility: " +
                            verdict.violations.front());
    }
    state.offer(candidate);
    out.kind = NodeOutcomeKind::kIntegerFeasible;
    return out;
  }

  const VarId var = pick_branch_var(model, sol.values, params.integrality_tol);
  for (double fix : {0.0, 1.0}) {
    Node child;
    child.extra_bounds = node.extra_bounds;
    child.extra_bounds.push_back({var, fix, fix});
    child.parent_objective = sol.objective;
    child.depth = node.depth + 1;
    child.basis = node.basis;
    out.children.push_back(std::move(child));
  }
  out.kind = NodeOutcomeKind::kBranched;
  return out;
}

SolveResult solve(const Instance& inst, const SolveParams& params) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto elapsed = [&start] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  check_instance(inst);
  CoverSets cov = compute_cover_sets(inst);
  MilpModel model = build_model(inst, cov, compute_edge_costs(inst),
                                {params.landmark_weight});
  SearchState state(std::move(model), std::move(cov), params);
  SearchStats& stats = state.stats();

  const auto log = [&](const char* event) {
    if (params.progress == nullptr) return;
    const double ub = state.upper_bound();
    const double lb = std::min(state.open_bound(), ub);
    std::ostream& os = *params.progress;
    os << "svrpll-bnc event=" << event << " nodes=" << stats.nodes
       << " open=" << state.open_size() << std::setprecision(10)
       << " bound=" << lb << " incumbent=" << ub << " gap=";
    if (ub < kInf && lb < kInf) {
      os << (ub - lb) / std::max(1e-12, std::abs(ub));
    } else {
      os << "inf";
    }
    os << " secs=" << stats.sec_rows << " time=" << elapsed() << '\n';
  };

  state.push(Node{});
  bool limit_hit = false;
  bool root = true;
  while (!state.empty()) {
    if ((params.node_limit > 0 && stats.nodes >= params.node_limit) ||
        (params.time_limit > 0 && elapsed() >= params.time_limit)) {
      limit_hit = true;
      break;
    }
    Node node = state.pop();
    if (node.parent_objective >=
        state.upper_bound() - 1e-9 * std::max(1.0, std::abs(state.upper_bound()))) {
      continue;  // dominated since it was queued
    }
    ++stats.nodes;
    stats.selected_bounds.push_back(node.parent_objective);

    NodeOutcome outcome = evaluate_node(node, state);
    while (outcome.kind == NodeOutcomeKind::kCutsAdded) {
      if (params.time_limit > 0 && elapsed() >= params.time_limit) break;
      outcome = evaluate_node(node, state);
    }
    if (root) {
      stats.root_bound = outcome.lp_objective;
      root = false;
    }
    switch (outcome.kind) {
      case NodeOutcomeKind::kIntegerFeasible:
        log("incumbent");
        break;
      case NodeOutcomeKind::kBranched:
        for (Node& child : outcome.children) state.push(std::move(child));
        break;
      case NodeOutcomeKind::kCutsAdded:
        // Time ran out inside the cut loop; keep the node for the bound.
        state.push(std::move(node));
        limit_hit = true;
        break;
      case NodeOutcomeKind::kPruned:
        break;
    }
    if (limit_hit) break;
    if (stats.nodes % 1000 == 0) log("progress");
  }

  SolveResult result;
  result.stats = stats;
  result.sec_pool = state.sec_pool();
  result.solution = state.incumbent();
  if (limit_hit) {
    result.status = SolveStatus::kLimitReached;
    result.stats.best_bound =
        std::min(state.open_bound(), state.upper_bound());
  } else if (state.incumbent()) {
    result.status = SolveStatus::kOptimal;
    result.stats.best_bound = state.upper_bound();
  } else {
    result.status = SolveStatus::kInfeasible;
    result.stats.best_bound = kInf;
  }
  result.stats.wall_seconds = elapsed();
  log("done");
  return result;
}

}  // namespace svrpll
