#ifndef SVRPLL_BNC_HPP_
#define SVRPLL_BNC_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "svrpll/instance.hpp"
#include "svrpll/lp.hpp"
#include "svrpll/model.hpp"

namespace svrpll {

struct SolveParams {
  double integrality_tol = 1e-6;
  double cut_violation_tol = 1e-6;
  double time_limit = 0.0;      // seconds, 0 = unlimited
  std::int64_t node_limit = 0;  // 0 = unlimited
  double landmark_weight = 1.0;
  // One line per new incumbent and per 1000 nodes.
  std::ostream* progress = nullptr;
};

enum class SolveStatus { kOptimal, kLimitReached, kInfeasible };

const char* to_string(SolveStatus s);

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t lp_solves = 0;
  std::int64_t lp_iterations = 0;
  std::int64_t sec_rows = 0;
  std::int64_t incumbents = 0;
  double root_bound = 0.0;
  double best_bound = 0.0;
  double wall_seconds = 0.0;
  // Parent bound of every node taken off the open list, in selection order.
  std::vector<double> selected_bounds;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Solution> solution;
  SearchStats stats;
  std::vector<Row> sec_pool;
};

// Branching fixing of one variable.
struct BranchBound {
  VarId var;
  double lo = 0.0;
  double hi = 1.0;
};

struct Node {
  std::vector<BranchBound> extra_bounds;
  double parent_objective = 0.0;
  int depth = 0;
  BasisState basis;  // warm start from the parent's final LP
};

// Open list plus incumbent and the globally valid cut pool.  The pool lives
// in the model's dynamic rows, so every node's LP sees every SEC.
class SearchState {
 public:
  SearchState(MilpModel model, CoverSets cov, SolveParams params);

  const MilpModel& model() const { return model_; }
  const CoverSets& cover_sets() const { return cov_; }
  const SolveParams& params() const { return params_; }
  const std::optional<Solution>& incumbent() const { return incumbent_; }
  double upper_bound() const;  // incumbent objective or +inf
  const std::vector<Row>& sec_pool() const { return model_.dynamic_rows; }
  SearchStats& stats() { return stats_; }
  const SearchStats& stats() const { return stats_; }

  void push(Node node);
  bool empty() const { return open_.empty(); }
  std::size_t open_size() const { return open_.size(); }
  Node pop();                 // smallest parent bound, deeper first on ties
  double open_bound() const;  // +inf when empty

  // Adds the row unless the same SEC is already pooled.
  bool add_sec(Row row);
  // Installs `sol` when it improves on the incumbent.
  bool offer(const Solution& sol);

 private:
  struct OpenEntry {
    double bound;
    int depth;
    std::int64_t seq;
    Node node;
  };
  static bool worse(const OpenEntry& a, const OpenEntry& b);

  MilpModel model_;
  CoverSets cov_;
  SolveParams params_;
  std::optional<Solution> incumbent_;
  std::vector<OpenEntry> open_;  // binary heap under worse()
  std::set<std::vector<int>> pooled_sets_;
  std::int64_t seq_ = 0;
  SearchStats stats_;
};

enum class NodeOutcomeKind { kPruned, kCutsAdded, kIntegerFeasible, kBranched };

struct NodeOutcome {
  NodeOutcomeKind kind = NodeOutcomeKind::kPruned;
  double lp_objective = 0.0;
  int rows_added = 0;
  std::vector<Node> children;
};

// One pass of the cut loop at `node`: solve the LP (warm from node.basis,
// which is updated), prune on bound, separate SECs, then either record an
// integer solution or branch.  kCutsAdded means the caller re-evaluates the
// same node.
NodeOutcome evaluate_node(Node& node, SearchState& state);

// Most fractional variable (closest to 0.5); ties prefer edge variables, then
// the lowest index.  PreconditionError when every value is within `tol` of
// an integer.
VarId pick_branch_var(const MilpModel& model, const std::vector<double>& values,
                      double tol);

SolveResult solve(const Instance& inst, const SolveParams& params = {});

}  // namespace svrpll

#endif  // SVRPLL_BNC_HPP_
