#ifndef SVRPLL_LP_HPP_
#define SVRPLL_LP_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace svrpll {

enum class Sense { kGreaterEqual, kLessEqual, kEqual };

struct LpRow {
  std::vector<int> index;
  std::vector<double> value;
  Sense sense = Sense::kGreaterEqual;
  double rhs = 0.0;
};

// min c^T x  s.t.  rows, lower <= x <= upper.  All column bounds are finite.
struct LpProblem {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { kOptimal, kInfeasible };

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Simplex basis: one status per column and one per row (the row's logical
// variable).  A basis for a parent problem can seed a problem with more rows;
// the logicals of the extra rows start basic.
struct BasisState {
  std::vector<VarStatus> columns;
  std::vector<VarStatus> rows;

  bool empty() const { return columns.empty() && rows.empty(); }
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;
  std::vector<double> duals;           // one per row
  std::vector<double> reduced_costs;   // one per column
  BasisState basis;
  int iterations = 0;
  bool warm_started = false;           // false when warm_start fell back
};

struct LpOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Consecutive degenerate pivots before Bland's rule takes over.
  int degenerate_streak = 50;
  int refactor_interval = 100;
  int max_iterations = 0;  // 0: 20 * (rows + columns) + 10000
  // Per-iteration trace; the full tableau is printed for tiny problems.
  std::ostream* debug = nullptr;
};

// Cold solve: bounded-variable primal simplex with a composite phase 1.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& opts = {});

// Re-solve from a parent basis.  A dual-feasible basis (the case after adding
// rows or tightening bounds) runs the dual simplex; anything else runs the
// primal simplex from that basis.  A basis that does not fit the problem or
// is singular falls back to solve_lp.
LpSolution warm_start(const LpProblem& problem, const BasisState& basis,
                      const LpOptions& opts = {});

}  // namespace svrpll

#endif  // SVRPLL_LP_HPP_
