#include "svrpll/lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "svrpll/errors.hpp"

namespace svrpll {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Columns 0..n-1 are structurals; column n+i is the logical of row i, defined
// by  a_i x - s_i = 0  with bounds taken from the row sense.  The logical's
// column in [A  -I] is therefore -e_i.
class Simplex {
 public:
  Simplex(const LpProblem& p, const LpOptions& opts)
      : opts_(opts), n_(p.num_vars()), m_(p.num_rows()) {
    const int total = n_ + m_;
    lo_.resize(total);
    hi_.resize(total);
    cost_.assign(total, 0.0);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = p.lower[j];
      hi_[j] = p.upper[j];
      cost_[j] = p.objective[j];
    }
    col_rows_.resize(n_);
    col_vals_.resize(n_);
    row_cols_.resize(m_);
    row_vals_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const LpRow& row = p.rows[i];
      for (size_t t = 0; t < row.index.size(); ++t) {
        const int j = row.index[t];
        const double a = row.value[t];
        if (a == 0.0) continue;
        col_rows_[j].push_back(i);
        col_vals_[j].push_back(a);
        row_cols_[i].push_back(j);
        row_vals_[i].push_back(a);
      }
      switch (row.sense) {
        case Sense::kGreaterEqual:
          lo_[n_ + i] = row.rhs;
          hi_[n_ + i] = kInf;
          break;
        case Sense::kLessEqual:
          lo_[n_ + i] = -kInf;
          hi_[n_ + i] = row.rhs;
          break;
        case Sense::kEqual:
          lo_[n_ + i] = row.rhs;
          hi_[n_ + i] = row.rhs;
          break;
      }
    }
    status_.assign(total, VarStatus::kAtLower);
    x_.assign(total, 0.0);
    head_.assign(m_, -1);
    pos_.assign(total, -1);
    max_iterations_ = opts.max_iterations > 0 ? opts.max_iterations
                                              : 20 * total + 10000;
  }

  void slack_basis() {
    for (int j = 0; j < n_; ++j) status_[j] = VarStatus::kAtLower;
    for (int i = 0; i < m_; ++i) status_[n_ + i] = VarStatus::kBasic;
    place_nonbasics();
  }

  // Returns false when the basis does not fit this problem.
  bool load_basis(const BasisState& b) {
    if (static_cast<int>(b.columns.size()) != n_ ||
        static_cast<int>(b.rows.size()) > m_) {
      return false;
    }
    for (int j = 0; j < n_; ++j) status_[j] = b.columns[j];
    for (int i = 0; i < m_; ++i) {
      status_[n_ + i] = i < static_cast<int>(b.rows.size())
                            ? b.rows[i]
                            : VarStatus::kBasic;
    }
    int basic = 0;
    for (VarStatus s : status_) basic += s == VarStatus::kBasic ? 1 : 0;
    if (basic != m_) return false;
    place_nonbasics();
    return true;
  }

  bool factorize() {
    int k = 0;
    std::fill(pos_.begin(), pos_.end(), -1);
    for (int v = 0; v < n_ + m_; ++v) {
      if (status_[v] == VarStatus::kBasic) {
        head_[k] = v;
        pos_[v] = k;
        ++k;
      }
    }
    // Basic structurals J against the rows R whose logical is nonbasic.  With
    // M = A[R, J], the solution of B z = r is z_J = M^{-1} r_R and, for basic
    // logicals s, z_s = A[s, J] z_J - r_s.
    std::vector<int> basic_cols;
    std::vector<int> col_slot(n_, -1);
    for (int j = 0; j < n_; ++j) {
      if (status_[j] == VarStatus::kBasic) {
        col_slot[j] = static_cast<int>(basic_cols.size());
        basic_cols.push_back(j);
      }
    }
    std::vector<int> free_rows;
    std::vector<int> row_slot(m_, -1);
    for (int i = 0; i < m_; ++i) {
      if (status_[n_ + i] != VarStatus::kBasic) {
        row_slot[i] = static_cast<int>(free_rows.size());
        free_rows.push_back(i);
      }
    }
    const int p = static_cast<int>(basic_cols.size());
    if (static_cast<int>(free_rows.size()) != p) return false;

    binv_.setZero(m_, m_);
    Eigen::MatrixXd minv;
    if (p > 0) {
      Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(p, p);
      for (int u = 0; u < p; ++u) {
        const int j = basic_cols[u];
        for (size_t t = 0; t < col_rows_[j].size(); ++t) {
          const int slot = row_slot[col_rows_[j][t]];
          if (slot >= 0) mat(slot, u) = col_vals_[j][t];
        }
      }
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(mat);
      const auto diag = lu.matrixLU().diagonal().cwiseAbs();
      if (diag.minCoeff() < 1e-11 * std::max(1.0, diag.maxCoeff())) {
        return false;
      }
      minv = lu.inverse();
      for (int u = 0; u < p; ++u) {
        const int kpos = pos_[basic_cols[u]];
        for (int t = 0; t < p; ++t) binv_(kpos, free_rows[t]) = minv(u, t);
      }
    }
    for (int i = 0; i < m_; ++i) {
      if (status_[n_ + i] != VarStatus::kBasic) continue;
      const int kpos = pos_[n_ + i];
      binv_(kpos, i) = -1.0;
      for (size_t t = 0; t < row_cols_[i].size(); ++t) {
        const int u = col_slot[row_cols_[i][t]];
        if (u < 0) continue;
        const double a = row_vals_[i][t];
        for (int s = 0; s < p; ++s) binv_(kpos, free_rows[s]) += a * minv(u, s);
      }
    }
    since_refactor_ = 0;
    compute_basics();
    return true;
  }

  // Composite primal simplex: minimizes the sum of bound violations of the
  // basics until none remain, then the true objective.  Returns false when
  // phase 1 stalls with a positive infeasibility.
  bool primal() {
    Eigen::VectorXd cb(m_);
    Eigen::VectorXd w(m_);
    int streak = 0;
    while (true) {
      maybe_refactor();
      bool phase1 = false;
      for (int k = 0; k < m_; ++k) {
        const int v = head_[k];
        if (x_[v] < lo_[v] - opts_.feasibility_tol) {
          cb[k] = -1.0;
          phase1 = true;
        } else if (x_[v] > hi_[v] + opts_.feasibility_tol) {
          cb[k] = 1.0;
          phase1 = true;
        } else {
          cb[k] = 0.0;
        }
      }
      if (!phase1) {
        for (int k = 0; k < m_; ++k) cb[k] = cost_[head_[k]];
      }
      const Eigen::VectorXd y = binv_.transpose() * cb;
      const bool bland = streak >= opts_.degenerate_streak;

      int enter = -1;
      int dir = 0;
      double best = 0.0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
        const double d = (phase1 ? 0.0 : cost_[j]) - dot_column(y, j);
        int jdir = 0;
        if (status_[j] == VarStatus::kAtLower && d < -opts_.optimality_tol) {
          jdir = 1;
        } else if (status_[j] == VarStatus::kAtUpper &&
                   d > opts_.optimality_tol) {
          jdir = -1;
        }
        if (jdir == 0) continue;
        if (bland) {
          enter = j;
          dir = jdir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          enter = j;
          dir = jdir;
        }
      }
      if (enter < 0) return !phase1;

      ftran(enter, w);
      double step = hi_[enter] - lo_[enter];
      int leave = -1;
      double leave_target = 0.0;
      double leave_pivot = 0.0;
      for (int k = 0; k < m_; ++k) {
        if (std::abs(w[k]) < opts_.pivot_tol) continue;
        const double rate = -dir * w[k];
        const int v = head_[k];
        const double xv = x_[v];
        double limit = kInf;
        double target = 0.0;
        if (rate < 0.0) {
          if (xv > hi_[v] + opts_.feasibility_tol) {
            target = hi_[v];
            limit = (xv - hi_[v]) / -rate;
          } else if (xv >= lo_[v] - opts_.feasibility_tol &&
                     lo_[v] > -kInf) {
            target = lo_[v];
            limit = std::max(0.0, xv - lo_[v]) / -rate;
          }
        } else {
          if (xv < lo_[v] - opts_.feasibility_tol) {
            target = lo_[v];
            limit = (lo_[v] - xv) / rate;
          } else if (xv <= hi_[v] + opts_.feasibility_tol && hi_[v] < kInf) {
            target = hi_[v];
            limit = std::max(0.0, hi_[v] - xv) / rate;
          }
        }
        if (limit == kInf) continue;
        bool take = false;
        if (limit < step - 1e-12) {
          take = true;
        } else if (limit <= step + 1e-12 && leave >= 0) {
          take = bland ? v < head_[leave]
                       : std::abs(w[k]) > std::abs(leave_pivot);
        }
        if (take) {
          step = limit;
          leave = k;
          leave_target = target;
          leave_pivot = w[k];
        }
      }
      if (step == kInf) {
        throw LpInternalError("primal simplex: unbounded ray on a bounded LP");
      }

      x_[enter] += dir * step;
      for (int k = 0; k < m_; ++k) x_[head_[k]] -= dir * step * w[k];
      if (leave < 0) {
        status_[enter] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[enter] = dir > 0 ? hi_[enter] : lo_[enter];
      } else {
        const int out = head_[leave];
        x_[out] = leave_target;
        status_[out] = leave_target == lo_[out] ? VarStatus::kAtLower
                                                : VarStatus::kAtUpper;
        pivot(leave, enter, w);
      }
      streak = step <= 1e-12 ? streak + 1 : 0;
      trace("primal", phase1, enter, leave);
      count_iteration();
    }
  }

  // Bounded dual simplex.  Requires a dual-feasible basis; returns false when
  // a row proves primal infeasibility.
  bool dual() {
    Eigen::VectorXd cb(m_);
    Eigen::VectorXd w(m_);
    Eigen::VectorXd rho(m_);
    int streak = 0;
    while (true) {
      maybe_refactor();
      const bool bland = streak >= opts_.degenerate_streak;
      int r = -1;
      double worst = 0.0;
      for (int k = 0; k < m_; ++k) {
        const int v = head_[k];
        const double viol = std::max(lo_[v] - x_[v], x_[v] - hi_[v]);
        if (viol <= opts_.feasibility_tol) continue;
        if (bland) {
          if (r < 0 || v < head_[r]) r = k;
        } else if (viol > worst) {
          worst = viol;
          r = k;
        }
      }
      if (r < 0) return true;

      const int out = head_[r];
      const bool raise = x_[out] < lo_[out];
      const double target = raise ? lo_[out] : hi_[out];
      for (int k = 0; k < m_; ++k) cb[k] = cost_[head_[k]];
      const Eigen::VectorXd y = binv_.transpose() * cb;
      rho = binv_.row(r).transpose();

      int enter = -1;
      double best_ratio = kInf;
      double best_alpha = 0.0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
        const double alpha = dot_column(rho, j);
        if (std::abs(alpha) < opts_.pivot_tol) continue;
        const bool at_lower = status_[j] == VarStatus::kAtLower;
        // Increasing x_j moves x_out by -alpha.
        const bool eligible =
            raise ? (at_lower ? alpha < 0.0 : alpha > 0.0)
                  : (at_lower ? alpha > 0.0 : alpha < 0.0);
        if (!eligible) continue;
        const double d = cost_[j] - dot_column(y, j);
        const double ratio =
            (at_lower ? std::max(0.0, d) : std::max(0.0, -d)) / std::abs(alpha);
        bool take = false;
        if (ratio < best_ratio - 1e-12) {
          take = true;
        } else if (ratio <= best_ratio + 1e-12) {
          take = bland ? j < enter : std::abs(alpha) > std::abs(best_alpha);
        }
        if (take) {
          best_ratio = ratio;
          best_alpha = alpha;
          enter = j;
        }
      }
      if (enter < 0) return false;

      ftran(enter, w);
      const double t = (x_[out] - target) / w[r];
      x_[enter] += t;
      for (int k = 0; k < m_; ++k) x_[head_[k]] -= t * w[k];
      x_[out] = target;
      status_[out] = raise ? VarStatus::kAtLower : VarStatus::kAtUpper;
      pivot(r, enter, w);
      streak = best_ratio <= 1e-12 ? streak + 1 : 0;
      trace("dual", false, enter, r);
      count_iteration();
    }
  }

  bool primal_feasible(double tol) const {
    for (int k = 0; k < m_; ++k) {
      const int v = head_[k];
      if (x_[v] < lo_[v] - tol || x_[v] > hi_[v] + tol) return false;
    }
    return true;
  }

  bool dual_feasible(double tol) const {
    const Eigen::VectorXd y = duals();
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
      const double d = cost_[j] - dot_column(y, j);
      if (status_[j] == VarStatus::kAtLower && d < -tol) return false;
      if (status_[j] == VarStatus::kAtUpper && d > tol) return false;
    }
    return true;
  }

  LpSolution result(LpStatus status) const {
    LpSolution sol;
    sol.status = status;
    sol.iterations = iterations_;
    sol.basis.columns.assign(status_.begin(), status_.begin() + n_);
    sol.basis.rows.assign(status_.begin() + n_, status_.end());
    if (status != LpStatus::kOptimal) return sol;
    sol.values.resize(n_);
    sol.objective = 0.0;
    for (int j = 0; j < n_; ++j) {
      sol.values[j] = std::clamp(x_[j], lo_[j], hi_[j]);
      sol.objective += cost_[j] * sol.values[j];
    }
    const Eigen::VectorXd y = duals();
    sol.duals.assign(y.data(), y.data() + m_);
    sol.reduced_costs.resize(n_);
    for (int j = 0; j < n_; ++j) {
      sol.reduced_costs[j] = status_[j] == VarStatus::kBasic
                                 ? 0.0
                                 : cost_[j] - dot_column(y, j);
    }
    return sol;
  }

  int iterations() const { return iterations_; }

 private:
  void place_nonbasics() {
    for (int v = 0; v < n_ + m_; ++v) {
      if (status_[v] == VarStatus::kBasic) continue;
      if (status_[v] == VarStatus::kAtUpper && hi_[v] == kInf) {
        status_[v] = VarStatus::kAtLower;
      }
      if (status_[v] == VarStatus::kAtLower && lo_[v] == -kInf) {
        status_[v] = VarStatus::kAtUpper;
      }
      x_[v] = status_[v] == VarStatus::kAtLower ? lo_[v] : hi_[v];
    }
  }

  double dot_column(const Eigen::VectorXd& y, int j) const {
    if (j >= n_) return -y[j - n_];
    double s = 0.0;
    const auto& rows = col_rows_[j];
    const auto& vals = col_vals_[j];
    for (size_t t = 0; t < rows.size(); ++t) s += y[rows[t]] * vals[t];
    return s;
  }

  void ftran(int j, Eigen::VectorXd& w) const {
    if (j >= n_) {
      w = -binv_.col(j - n_);
      return;
    }
    w.setZero(m_);
    const auto& rows = col_rows_[j];
    const auto& vals = col_vals_[j];
    for (size_t t = 0; t < rows.size(); ++t) w += vals[t] * binv_.col(rows[t]);
  }

  Eigen::VectorXd duals() const {
    Eigen::VectorXd cb(m_);
    for (int k = 0; k < m_; ++k) cb[k] = cost_[head_[k]];
    return binv_.transpose() * cb;
  }

  void compute_basics() {
    // B x_B = -N x_N over the system [A -I](x; s) = 0.
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    for (int v = 0; v < n_ + m_; ++v) {
      if (status_[v] == VarStatus::kBasic || x_[v] == 0.0) continue;
      if (v >= n_) {
        rhs[v - n_] += x_[v];
      } else {
        for (size_t t = 0; t < col_rows_[v].size(); ++t) {
          rhs[col_rows_[v][t]] -= col_vals_[v][t] * x_[v];
        }
      }
    }
    const Eigen::VectorXd xb = binv_ * rhs;
    for (int k = 0; k < m_; ++k) x_[head_[k]] = xb[k];
  }

  void pivot(int r, int enter, const Eigen::VectorXd& w) {
    const int out = head_[r];
    const double piv = w[r];
    const Eigen::RowVectorXd pivot_row = binv_.row(r) / piv;
    Eigen::VectorXd eta = w;
    eta[r] = 0.0;
    binv_.noalias() -= eta * pivot_row;
    binv_.row(r) = pivot_row;
    head_[r] = enter;
    pos_[enter] = r;
    pos_[out] = -1;
    status_[enter] = VarStatus::kBasic;
    ++since_refactor_;
  }

  void maybe_refactor() {
    if (since_refactor_ < opts_.refactor_interval) return;
    if (!factorize()) {
      throw LpInternalError("simplex: basis became singular on refactor");
    }
  }

  void count_iteration() {
    if (++iterations_ > max_iterations_) {
      throw LpInternalError("simplex: iteration limit " +
                            std::to_string(max_iterations_) +
                            " reached (cycling guard)");
    }
  }

  void trace(const char* method, bool phase1, int enter, int leave_pos) {
    if (opts_.debug == nullptr) return;
    std::ostream& os = *opts_.debug;
    os << "[lp] it=" << iterations_ << ' ' << method
       << (phase1 ? " phase1" : "") << " enter=" << enter
       << " leave_pos=" << leave_pos << '\n';
    if (n_ + m_ > 24) return;
    // Tableau rows B^{-1}[A -I] with the basic values.
    Eigen::VectorXd unit(m_);
    for (int k = 0; k < m_; ++k) {
      os << "  x" << head_[k] << " = " << std::setw(10) << x_[head_[k]]
         << " |";
      unit = binv_.row(k).transpose();
      for (int j = 0; j < n_ + m_; ++j) {
        os << ' ' << std::setw(8) << std::setprecision(4) << dot_column(unit, j);
      }
      os << '\n';
    }
  }

  LpOptions opts_;
  int n_;
  int m_;
  std::vector<double> lo_, hi_, cost_;
  std::vector<std::vector<int>> col_rows_, row_cols_;
  std::vector<std::vector<double>> col_vals_, row_vals_;
  std::vector<VarStatus> status_;
  std::vector<double> x_;
  std::vector<int> head_;
  std::vector<int> pos_;
  Eigen::MatrixXd binv_;
  int since_refactor_ = 0;
  int iterations_ = 0;
  int max_iterations_ = 0;
};

void check_problem(const LpProblem& p) {
  const int n = p.num_vars();
  if (static_cast<int>(p.lower.size()) != n ||
      static_cast<int>(p.upper.size()) != n) {
    throw PreconditionError("LP bounds must have one entry per column");
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(p.lower[j]) || !std::isfinite(p.upper[j]) ||
        p.lower[j] > p.upper[j]) {
      throw PreconditionError("LP column " + std::to_string(j) +
                              " has invalid bounds");
    }
  }
  for (const LpRow& row : p.rows) {
    if (row.index.size() != row.value.size()) {
      throw PreconditionError("LP row index/value length mismatch");
    }
    for (int j : row.index) {
      if (j < 0 || j >= n) throw PreconditionError("LP row column out of range");
    }
  }
}

// Alternates methods until the refactored basis is primal and dual feasible.
LpSolution finish(Simplex& s, bool use_dual, const LpOptions& opts) {
  constexpr double kCheckTol = 1e-7;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const bool ok = use_dual ? s.dual() : s.primal();
    if (!ok) return s.result(LpStatus::kInfeasible);
    if (!s.factorize()) {
      throw LpInternalError("simplex: final basis is singular");
    }
    const bool pf = s.primal_feasible(kCheckTol);
    const bool df = s.dual_feasible(kCheckTol);
    if (pf && df) return s.result(LpStatus::kOptimal);
    use_dual = df;
  }
  (void)opts;
  throw LpInternalError("simplex: could not certify optimality");
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const LpOptions& opts) {
  check_problem(problem);
  Simplex s(problem, opts);
  s.slack_basis();
  if (!s.factorize()) throw LpInternalError("simplex: slack basis singular");
  return finish(s, false, opts);
}

LpSolution warm_start(const LpProblem& problem, const BasisState& basis,
                      const LpOptions& opts) {
  check_problem(problem);
  Simplex s(problem, opts);
  if (!s.load_basis(basis) || !s.factorize()) return solve_lp(problem, opts);
  const bool dual_ok = s.dual_feasible(opts.optimality_tol);
  LpSolution sol = finish(s, dual_ok, opts);
  sol.warm_started = true;
  return sol;
}

}  // namespace svrpll
