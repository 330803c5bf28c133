#ifndef SVRPLL_MODEL_HPP_
#define SVRPLL_MODEL_HPP_

#include <string>
#include <vector>

#include "svrpll/instance.hpp"
#include "svrpll/lp.hpp"

namespace svrpll {

enum class VarKind { kEdge, kSite };

// x_e (kEdge, index = EdgeIndex ordinal) or y_k (kSite, index = site index).
struct VarId {
  VarKind kind = VarKind::kEdge;
  int index = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

enum class RowTag { kDegree, kCoverage, kSec, kBranch };

struct Term {
  VarId var;
  double coef = 0.0;
};

struct Row {
  std::vector<Term> terms;
  Sense sense = Sense::kGreaterEqual;
  double rhs = 0.0;
  RowTag tag = RowTag::kDegree;
  std::vector<int> sec_set;  // generating target set S, kSec rows only
};

struct VarBounds {
  double lo = 0.0;
  double hi = 1.0;
};

struct ModelOptions {
  double landmark_weight = 1.0;  // multiplies every d_k in the objective
};

// The mixed-integer model.  Columns are laid out edges first (by EdgeIndex
// ordinal), then candidate sites.  Every variable is binary.
struct MilpModel {
  int num_targets = 0;
  int num_edges = 0;
  int num_sites = 0;
  double landmark_weight = 1.0;
  std::vector<double> objective;     // per column
  std::vector<VarBounds> bounds;     // per column
  std::vector<Row> static_rows;      // degree rows, then coverage rows
  std::vector<Row> dynamic_rows;     // subtour elimination rows

  int num_vars() const { return num_edges + num_sites; }
  int column(VarId v) const {
    return v.kind == VarKind::kEdge ? v.index : num_edges + v.index;
  }
  VarId var(int column) const {
    return column < num_edges ? VarId{VarKind::kEdge, column}
                              : VarId{VarKind::kSite, column - num_edges};
  }
};

MilpModel build_model(const Instance& inst, const CoverSets& cov,
                      const EdgeCosts& costs, const ModelOptions& opts = {});

// x(delta(S)) >= 2.  Requires 2 <= |S| <= n - 2 and distinct members in
// [0, n); throws PreconditionError otherwise.
Row make_sec_row(const std::vector<int>& subset, int num_targets);

struct Solution {
  std::vector<EdgeId> tour_edges;
  std::vector<int> visit_order;  // starts and ends at the depot (target 0)
  std::vector<int> placed_sites;
  double travel_cost = 0.0;
  double landmark_cost = 0.0;
  double objective = 0.0;
};

// Builds a solution from a closed visiting order (first == last == 0),
// pricing edges and sites with the model objective.
Solution make_solution(const MilpModel& model, const std::vector<int>& order,
                       std::vector<int> placed_sites);

// Walks the tour edges from the depot.  Returns an empty vector when the
// edges do not form a single cycle through every target.
std::vector<int> order_from_edges(int num_targets,
                                  const std::vector<EdgeId>& edges);

struct FeasibilityVerdict {
  bool feasible = false;
  std::vector<std::string> violations;
};

// LP relaxation of the model plus `extra` rows, with optional per-column
// bound overrides (empty = model bounds).
LpProblem relaxation(const MilpModel& model, const std::vector<Row>& extra = {},
                     const std::vector<VarBounds>& bounds = {});

FeasibilityVerdict check_feasible(const MilpModel& model, const Solution& sol,
                                  const CoverSets& cov);

}  // namespace svrpll

#endif  // SVRPLL_MODEL_HPP_
