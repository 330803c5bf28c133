#include "svrpll/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "svrpll/errors.hpp"

namespace svrpll {

MilpModel build_model(const Instance& inst, const CoverSets& cov,
                      const EdgeCosts& costs, const ModelOptions& opts) {
  const int n = inst.num_targets();
  const EdgeIndex index(n);
  MilpModel m;
  m.num_targets = n;
  m.num_edges = index.num_edges();
  m.num_sites = inst.num_sites();
  m.landmark_weight = opts.landmark_weight;
  m.objective.reserve(static_cast<size_t>(m.num_vars()));
  m.objective.insert(m.objective.end(), costs.cost.begin(), costs.cost.end());
  for (double d : inst.landmark_cost) {
    m.objective.push_back(opts.landmark_weight * d);
  }
  m.bounds.assign(static_cast<size_t>(m.num_vars()), VarBounds{0.0, 1.0});

  for (int v = 0; v < n; ++v) {
    Row row;
    row.sense = Sense::kEqual;
    row.rhs = 2.0;
    row.tag = RowTag::kDegree;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      row.terms.push_back({{VarKind::kEdge, index.ordinal(u, v)}, 1.0});
    }
    m.static_rows.push_back(std::move(row));
  }

  // sum_{k in K_e} y_k - 2 x_e >= 0; edges that can never be covered are
  // fixed to zero instead.
  for (int e = 0; e < m.num_edges; ++e) {
    const auto& sites = cov.per_edge[e];
    if (sites.size() < 2) {
      m.bounds[e].hi = 0.0;
      continue;
    }
    Row row;
    row.sense = Sense::kGreaterEqual;
    row.rhs = 0.0;
    row.tag = RowTag::kCoverage;
    row.terms.push_back({{VarKind::kEdge, e}, -2.0});
    for (int k : sites) row.terms.push_back({{VarKind::kSite, k}, 1.0});
    m.static_rows.push_back(std::move(row));
  }
  return m;
}

Row make_sec_row(const std::vector<int>& subset, int num_targets) {
  const int size = static_cast<int>(subset.size());
  if (size < 2 || size > num_targets - 2) {
    throw PreconditionError("SEC subset size " + std::to_string(size) +
                            " outside [2, n-2] for n=" +
                            std::to_string(num_targets));
  }
  std::vector<char> inside(static_cast<size_t>(num_targets), 0);
  for (int v : subset) {
    if (v < 0 || v >= num_targets || inside[v]) {
      throw PreconditionError("SEC subset has invalid or repeated target");
    }
    inside[v] = 1;
  }
  const EdgeIndex index(num_targets);
  Row row;
  row.sense = Sense::kGreaterEqual;
  row.rhs = 2.0;
  row.tag = RowTag::kSec;
  row.sec_set = subset;
  std::sort(row.sec_set.begin(), row.sec_set.end());
  for (const EdgeId& e : index.edges()) {
    if (inside[e.i] != inside[e.j]) {
      row.terms.push_back({{VarKind::kEdge, index.ordinal(e)}, 1.0});
    }
  }
  return row;
}

Solution make_solution(const MilpModel& model, const std::vector<int>& order,
                       std::vector<int> placed_sites) {
  const EdgeIndex index(model.num_targets);
  Solution sol;
  sol.visit_order = order;
  for (size_t t = 0; t + 1 < order.size(); ++t) {
    const int a = order[t];
    const int b = order[t + 1];
    const EdgeId e{std::min(a, b), std::max(a, b)};
    sol.tour_edges.push_back(e);
    sol.travel_cost += model.objective[index.ordinal(e)];
  }
  std::sort(sol.tour_edges.begin(), sol.tour_edges.end());
  std::sort(placed_sites.begin(), placed_sites.end());
  for (int k : placed_sites) {
    sol.landmark_cost += model.objective[model.column({VarKind::kSite, k})];
  }
  sol.placed_sites = std::move(placed_sites);
  sol.objective = sol.travel_cost + sol.landmark_cost;
  return sol;
}

std::vector<int> order_from_edges(int num_targets,
                                  const std::vector<EdgeId>& edges) {
  if (num_targets < 3 || static_cast<int>(edges.size()) != num_targets) {
    return {};
  }
  std::vector<std::vector<int>> adj(static_cast<size_t>(num_targets));
  for (const EdgeId& e : edges) {
    if (e.i < 0 || e.j >= num_targets || e.i >= e.j) return {};
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return {};
  }
  std::vector<int> order{0};
  int prev = -1;
  int cur = 0;
  for (int step = 0; step < num_targets; ++step) {
    const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
    order.push_back(cur);
    if (cur == 0) break;
  }
  if (static_cast<int>(order.size()) != num_targets + 1 || order.back() != 0) {
    return {};
  }
  return order;
}

namespace {

LpRow to_lp_row(const MilpModel& model, const Row& row) {
  LpRow out;
  out.sense = row.sense;
  out.rhs = row.rhs;
  out.index.reserve(row.terms.size());
  out.value.reserve(row.terms.size());
  for (const Term& t : row.terms) {
    out.index.push_back(model.column(t.var));
    out.value.push_back(t.coef);
  }
  return out;
}

}  // namespace

LpProblem relaxation(const MilpModel& model, const std::vector<Row>& extra,
                     const std::vector<VarBounds>& bounds) {
  LpProblem p;
  p.objective = model.objective;
  const auto& b = bounds.empty() ? model.bounds : bounds;
  p.lower.reserve(b.size());
  p.upper.reserve(b.size());
  for (const VarBounds& vb : b) {
    p.lower.push_back(vb.lo);
    p.upper.push_back(vb.hi);
  }
  p.rows.reserve(model.static_rows.size() + model.dynamic_rows.size() +
                 extra.size());
  for (const Row& r : model.static_rows) p.rows.push_back(to_lp_row(model, r));
  for (const Row& r : model.dynamic_rows) p.rows.push_back(to_lp_row(model, r));
  for (const Row& r : extra) p.rows.push_back(to_lp_row(model, r));
  return p;
}

FeasibilityVerdict check_feasible(const MilpModel& model, const Solution& sol,
                                  const CoverSets& cov) {
  const int n = model.num_targets;
  const EdgeIndex index(n);
  FeasibilityVerdict verdict;
  auto violation = [&verdict](const std::string& what) {
    verdict.violations.push_back(what);
  };

  std::set<EdgeId> edges;
  for (const EdgeId& e : sol.tour_edges) {
    if (e.i < 0 || e.j >= n || e.i >= e.j) {
      violation("malformed edge");
      return verdict;
    }
    if (!edges.insert(e).second) violation("duplicate edge");
  }

  std::vector<int> degree(static_cast<size_t>(n), 0);
  for (const EdgeId& e : edges) {
    ++degree[e.i];
    ++degree[e.j];
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 2) {
      violation("degree: target " + std::to_string(v) + " has degree " +
                std::to_string(degree[v]));
    }
  }

  const std::vector<EdgeId> edge_list(edges.begin(), edges.end());
  const std::vector<int> walk = order_from_edges(n, edge_list);
  if (walk.empty()) violation("connectivity: tour edges are not one spanning cycle");

  // Visiting order must traverse exactly the tour edges and see each target once.
  {
    const auto& order = sol.visit_order;
    bool ok = order.size() == static_cast<size_t>(n) + 1 && !order.empty() &&
              order.front() == 0 && order.back() == 0;
    if (ok) {
      std::vector<char> seen(static_cast<size_t>(n), 0);
      std::set<EdgeId> walked;
      for (size_t t = 0; t + 1 < order.size() && ok; ++t) {
        const int a = order[t];
        const int b = order[t + 1];
        if (a < 0 || a >= n || b < 0 || b >= n || a == b || seen[a]) {
          ok = false;
          break;
        }
        seen[a] = 1;
        walked.insert({std::min(a, b), std::max(a, b)});
      }
      ok = ok && walked == edges;
    }
    if (!ok) violation("order: visit order inconsistent with tour edges");
  }

  std::set<int> placed;
  for (int k : sol.placed_sites) {
    if (k < 0 || k >= model.num_sites) {
      violation("sites: index out of range");
      return verdict;
    }
    placed.insert(k);
  }
  for (const EdgeId& e : edges) {
    const int col = index.ordinal(e);
    if (model.bounds[col].hi < 0.5) {
      violation("bounds: edge (" + std::to_string(e.i) + "," +
                std::to_string(e.j) + ") cannot be traversed");
    }
    int covered = 0;
    for (int k : cov.per_edge[col]) covered += placed.count(k) ? 1 : 0;
    if (covered < 2) {
      violation("coverage: edge (" + std::to_string(e.i) + "," +
                std::to_string(e.j) + ") covered by " +
                std::to_string(covered) + " landmark(s)");
    }
  }

  double travel = 0.0;
  for (const EdgeId& e : edges) travel += model.objective[index.ordinal(e)];
  double landmarks = 0.0;
  for (int k : placed) {
    landmarks += model.objective[model.column({VarKind::kSite, k})];
  }
  const auto near = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  };
  if (!near(sol.travel_cost, travel) || !near(sol.landmark_cost, landmarks) ||
      !near(sol.objective, sol.travel_cost + sol.landmark_cost)) {
    std::ostringstream os;
    os << "objective: reported " << sol.travel_cost << " + "
       << sol.landmark_cost << " = " << sol.objective << ", recomputed "
       << travel << " + " << landmarks;
    violation(os.str());
  }

  verdict.feasible = verdict.violations.empty();
  return verdict;
}

}  // namespace svrpll
