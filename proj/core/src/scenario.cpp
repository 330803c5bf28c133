#include "svrpll/scenario.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "svrpll/errors.hpp"
#include "svrpll/random.hpp"

namespace svrpll {

void check_config(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw ParameterError("dt must be > 0");
  if (cfg.n_steps < 1) throw ParameterError("steps must be >= 1");
  if (!(cfg.v_nominal >= 0.0)) throw ParameterError("speed must be >= 0");
  if (!(cfg.sensing_range > 0.0)) {
    throw ParameterError("sensing range must be > 0");
  }
  if (!(cfg.omega_max > 0.0)) throw ParameterError("omega_max must be > 0");
  if (!(cfg.min_wp_distance > 0.0)) {
    throw ParameterError("minimum waypoint distance must be > 0");
  }
  if (!(cfg.bearing_noise_std >= 0.0)) {
    throw ParameterError("bearing noise must be >= 0");
  }
  const double filter_std = cfg.filter_bearing_std > 0.0
                                ? cfg.filter_bearing_std
                                : cfg.bearing_noise_std;
  if (!(filter_std > 0.0)) {
    throw ParameterError("filter bearing std must be > 0");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cfg.process_noise);
  if (eig.eigenvalues().minCoeff() < -1e-15) {
    throw ParameterError("process noise must be positive semidefinite");
  }
}

Trace run_scenario(const Solution& sol, const Instance& inst,
                   const SimConfig& cfg) {
  check_config(cfg);
  if (sol.visit_order.size() < 2) {
    throw PreconditionError("run_scenario: solution has no route");
  }
  Trace trace;
  for (int v : sol.visit_order) trace.waypoints.push_back(inst.targets.at(v));
  for (int k : sol.placed_sites) {
    trace.landmarks.push_back({k, inst.candidate_sites.at(k)});
  }
  const double filter_std = cfg.filter_bearing_std > 0.0
                                ? cfg.filter_bearing_std
                                : cfg.bearing_noise_std;

  // Process and sensor noise come from separate streams so that runs with
  // different sensing ranges see the same motion disturbances.
  std::mt19937_64 motion_rng(derive_seed(cfg.rng_seed, "sim.motion"));
  std::mt19937_64 sensor_rng(derive_seed(cfg.rng_seed, "sim.sensor"));
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Q = L L^T via a semidefinite-safe square root.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> qeig(cfg.process_noise);
  const Eigen::Matrix2d q_sqrt =
      qeig.eigenvectors() *
      qeig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

  VehicleState truth = cfg.start;
  truth.psi = wrap_angle(truth.psi);
  Belief belief = Belief::from_moments(truth, cfg.initial_cov);
  const int num_wp = static_cast<int>(trace.waypoints.size());
  int wp = 0;
  trace.steps.reserve(static_cast<size_t>(cfg.n_steps));

  for (int k = 0; k < cfg.n_steps; ++k) {
    TraceStep row;
    row.step = k;
    row.t = k * cfg.dt;
    row.truth = truth;

    const auto meas = measure_bearings(truth, trace.landmarks,
                                       cfg.sensing_range,
                                       cfg.bearing_noise_std, sensor_rng);
    row.n_visible = static_cast<int>(meas.size());
    row.prior_cov_diag = belief.covariance().diagonal();
    if (!trace.diverged) {
      try {
        UpdateStats us;
        belief = eif_update(belief, meas, trace.landmarks, filter_std, &us);
        trace.skipped_measurements += us.skipped;
      } catch (const FilterDivergence&) {
        trace.diverged = true;
      }
    }
    const Eigen::Matrix3d cov = belief.covariance();
    row.estimate = belief.mean;
    row.cov_diag = cov.diagonal();
    row.position_cov = cov.topLeftCorner<2, 2>();

    while (wp < num_wp &&
           distance(belief.mean.position(), trace.waypoints[wp]) <
               cfg.min_wp_distance) {
      ++wp;
    }
    trace.waypoints_reached = wp;
    row.waypoint = std::min(wp, num_wp - 1);
    if (wp == num_wp) {
      trace.completed = true;
      trace.steps.push_back(row);
      break;
    }

    const ControlInput u =
        waypoint_controller(belief.mean, trace.waypoints[wp],
                            cfg.controller_gain, cfg.v_nominal, cfg.omega_max);
    row.omega = u.omega;
    trace.steps.push_back(row);

    const Eigen::Vector2d noise =
        q_sqrt * Eigen::Vector2d(gauss(motion_rng), gauss(motion_rng));
    truth = step_dynamics(truth, u, cfg.dt, noise);
    try {
      belief = eif_predict(belief, u, cfg.dt, cfg.process_noise);
    } catch (const FilterDivergence&) {
      trace.diverged = true;
      break;
    }
  }
  return trace;
}

ErrorReport error_stats(const Trace& t) {
  if (t.steps.empty()) throw PreconditionError("error_stats: empty trace");
  ErrorReport r;
  const double count = static_cast<double>(t.steps.size());
  std::array<double, 3> sq{};
  std::array<int, 3> inside{};
  int two_visible = 0;
  for (const TraceStep& s : t.steps) {
    const std::array<double, 3> e{s.truth.x - s.estimate.x,
                                  s.truth.y - s.estimate.y,
                                  wrap_angle(s.truth.psi - s.estimate.psi)};
    for (int a = 0; a < 3; ++a) {
      const double bound = 3.0 * std::sqrt(std::max(0.0, s.cov_diag[a]));
      r.error[a].push_back(e[a]);
      r.three_sigma[a].push_back(bound);
      sq[a] += e[a] * e[a];
      inside[a] += std::abs(e[a]) <= bound ? 1 : 0;
    }
    two_visible += s.n_visible >= 2 ? 1 : 0;
  }
  for (int a = 0; a < 3; ++a) {
    r.rmse[a] = std::sqrt(sq[a] / count);
    r.containment[a] = inside[a] / count;
  }
  r.position_rmse = std::sqrt((sq[0] + sq[1]) / count);
  r.two_visible_fraction = two_visible / count;
  return r;
}

}  // namespace svrpll
