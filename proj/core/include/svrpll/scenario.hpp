#ifndef SVRPLL_SCENARIO_HPP_
#define SVRPLL_SCENARIO_HPP_

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "svrpll/eif.hpp"
#include "svrpll/instance.hpp"
#include "svrpll/model.hpp"
#include "svrpll/vehicle.hpp"

namespace svrpll {

struct SimConfig {
  double dt = 0.2;
  int n_steps = 3000;
  double v_nominal = 1.0;
  double controller_gain = 2.0;
  double min_wp_distance = 1.0;
  double sensing_range = 35.0;
  double omega_max = 2.0;
  Eigen::Matrix2d process_noise = Eigen::Vector2d(1e-4, 1e-4).asDiagonal();
  double bearing_noise_std = 0.5 * kPi / 180.0;  // sensor
  double filter_bearing_std = 0.0;  // filter's model; 0 = bearing_noise_std
  Eigen::Matrix3d initial_cov =
      Eigen::Vector3d(1.0, 1.0, std::pow(5.0 * kPi / 180.0, 2)).asDiagonal();
  VehicleState start{0.0, 35.0, 0.0};
  std::uint64_t rng_seed = 0;
};

// Throws ParameterError on nonpositive dt/steps/ranges or a non-PSD noise.
void check_config(const SimConfig& cfg);

struct TraceStep {
  int step = 0;
  double t = 0.0;
  VehicleState truth;
  VehicleState estimate;
  Eigen::Vector3d cov_diag = Eigen::Vector3d::Zero();        // posterior
  Eigen::Vector3d prior_cov_diag = Eigen::Vector3d::Zero();  // before update
  Eigen::Matrix2d position_cov = Eigen::Matrix2d::Zero();    // posterior
  int n_visible = 0;
  int waypoint = 0;
  double omega = 0.0;
};

struct Trace {
  std::vector<TraceStep> steps;
  std::vector<Point2> waypoints;
  std::vector<Landmark> landmarks;
  bool completed = false;
  bool diverged = false;
  int waypoints_reached = 0;
  int skipped_measurements = 0;
};

// Closed loop over the solution's visiting order (depot last again).  Each
// step: measure, EIF update, waypoint switch on the estimated distance,
// controller on the estimate, noisy true motion, EIF predict.  Stops after
// n_steps or when the final waypoint is reached.
Trace run_scenario(const Solution& sol, const Instance& inst,
                   const SimConfig& cfg);

struct ErrorReport {
  std::array<std::vector<double>, 3> error;        // truth - estimate
  std::array<std::vector<double>, 3> three_sigma;
  std::array<double, 3> containment{};  // fraction with |e| <= 3 sigma
  std::array<double, 3> rmse{};
  double position_rmse = 0.0;
  double two_visible_fraction = 0.0;  // steps with >= 2 landmarks in range
};

// Requires at least one step.
ErrorReport error_stats(const Trace& t);

}  // namespace svrpll

#endif  // SVRPLL_SCENARIO_HPP_
