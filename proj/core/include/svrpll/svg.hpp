#ifndef SVRPLL_SVG_HPP_
#define SVRPLL_SVG_HPP_

#include <Eigen/Core>
#include <string>

#include "svrpll/scenario.hpp"

namespace svrpll {

struct Ellipse {
  double rx = 0.0;  // semi-axis along the major eigenvector
  double ry = 0.0;
  double angle = 0.0;  // radians, major axis from +x
};

// 3-sigma ellipse of a 2x2 position covariance.
Ellipse sigma_ellipse(const Eigen::Matrix2d& cov, double n_sigma = 3.0);

// Waypoints, landmarks, true and estimated paths, and 3-sigma ellipses every
// `ellipse_every` steps.
std::string trajectory_svg(const Trace& trace, int ellipse_every = 100);

// One panel per axis (x, y, psi): estimation error against +/- 3 sigma.
std::string error_svg(const Trace& trace, const ErrorReport& report);

}  // namespace svrpll

#endif  // SVRPLL_SVG_HPP_
