#ifndef SVRPLL_VEHICLE_HPP_
#define SVRPLL_VEHICLE_HPP_

#include <Eigen/Core>
#include <optional>
#include <random>
#include <vector>

#include "svrpll/instance.hpp"

namespace svrpll {

inline constexpr double kPi = 3.14159265358979323846;

// Wraps to (-pi, pi].
double wrap_angle(double a);

// Planar unicycle pose; psi is kept in (-pi, pi].
struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;

  Eigen::Vector3d vec() const { return {x, y, psi}; }
  static VehicleState from(const Eigen::Vector3d& v) {
    return {v[0], v[1], wrap_angle(v[2])};
  }
  Point2 position() const { return {x, y}; }
};

struct ControlInput {
  double v = 0.0;      // forward speed, never negative
  double omega = 0.0;  // turn rate
};

// Explicit Euler step of (v cos psi, v sin psi, omega) with optional additive
// noise on (v, omega).
VehicleState step_dynamics(const VehicleState& s, const ControlInput& u,
                           double dt,
                           const std::optional<Eigen::Vector2d>& noise = {});

// d step / d state and d step / d (v, omega) at (s, u).
Eigen::Matrix3d dynamics_jacobian_state(const VehicleState& s,
                                        const ControlInput& u, double dt);
Eigen::Matrix<double, 3, 2> dynamics_jacobian_input(const VehicleState& s,
                                                    double dt);

struct Landmark {
  int site = 0;  // candidate-site index in the instance
  Point2 pos;
};

struct Measurement {
  int landmark = 0;  // index into the landmark list that produced it
  double bearing = 0.0;
};

// Bearing of a landmark relative to the vehicle heading.
double bearing_to(const VehicleState& s, const Point2& p);

// All landmarks strictly closer than `range`, 360 degree field of view.
// Gaussian noise with std `sigma` is added when sigma > 0.
std::vector<Measurement> measure_bearings(const VehicleState& s,
                                          const std::vector<Landmark>& landmarks,
                                          double range, double sigma,
                                          std::mt19937_64& rng);

// Proportional heading controller toward `wp`, saturated at omega_max.
ControlInput waypoint_controller(const VehicleState& est, const Point2& wp,
                                 double gain, double v_nominal,
                                 double omega_max);

}  // namespace svrpll

#endif  // SVRPLL_VEHICLE_HPP_
