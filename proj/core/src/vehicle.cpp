#include "svrpll/vehicle.hpp"

#include <algorithm>
#include <cmath>

#include "svrpll/errors.hpp"

namespace svrpll {

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

VehicleState step_dynamics(const VehicleState& s, const ControlInput& u,
                           double dt,
                           const std::optional<Eigen::Vector2d>& noise) {
  if (!(dt > 0.0)) throw PreconditionError("step_dynamics: dt must be > 0");
  double v = u.v;
  double omega = u.omega;
  if (noise) {
    v += (*noise)[0];
    omega += (*noise)[1];
  }
  return {s.x + v * std::cos(s.psi) * dt, s.y + v * std::sin(s.psi) * dt,
          wrap_angle(s.psi + omega * dt)};
}

Eigen::Matrix3d dynamics_jacobian_state(const VehicleState& s,
                                        const ControlInput& u, double dt) {
  Eigen::Matrix3d f = Eigen::Matrix3d::Identity();
  f(0, 2) = -u.v * std::sin(s.psi) * dt;
  f(1, 2) = u.v * std::cos(s.psi) * dt;
  return f;
}

Eigen::Matrix<double, 3, 2> dynamics_jacobian_input(const VehicleState& s,
                                                    double dt) {
  Eigen::Matrix<double, 3, 2> g = Eigen::Matrix<double, 3, 2>::Zero();
  g(0, 0) = std::cos(s.psi) * dt;
  g(1, 0) = std::sin(s.psi) * dt;
  g(2, 1) = dt;
  return g;
}

double bearing_to(const VehicleState& s, const Point2& p) {
  return wrap_angle(std::atan2(p.y - s.y, p.x - s.x) - s.psi);
}

std::vector<Measurement> measure_bearings(const VehicleState& s,
                                          const std::vector<Landmark>& landmarks,
                                          double range, double sigma,
                                          std::mt19937_64& rng) {
  std::vector<Measurement> out;
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int i = 0; i < static_cast<int>(landmarks.size()); ++i) {
    if (distance(s.position(), landmarks[i].pos) >= range) continue;
    double z = bearing_to(s, landmarks[i].pos);
    if (sigma > 0.0) z = wrap_angle(z + sigma * noise(rng));
    out.push_back({i, z});
  }
  return out;
}

ControlInput waypoint_controller(const VehicleState& est, const Point2& wp,
                                 double gain, double v_nominal,
                                 double omega_max) {
  const double err = bearing_to(est, wp);
  return {v_nominal, std::clamp(gain * err, -omega_max, omega_max)};
}

}  // namespace svrpll
