#ifndef SVRPLL_EIF_HPP_
#define SVRPLL_EIF_HPP_

#include <Eigen/Core>
#include <vector>

#include "svrpll/vehicle.hpp"

namespace svrpll {

// Information form of a Gaussian over (x, y, psi): info_matrix = P^{-1},
// info_vector = P^{-1} mean.  The mean is cached with psi wrapped.
struct Belief {
  Eigen::Vector3d info_vector = Eigen::Vector3d::Zero();
  Eigen::Matrix3d info_matrix = Eigen::Matrix3d::Identity();
  VehicleState mean;

  static Belief from_moments(const VehicleState& mean,
                             const Eigen::Matrix3d& cov);
  // Throws FilterDivergence when the information matrix is not PD.
  Eigen::Matrix3d covariance() const;
};

// Prediction through the unicycle step with noise covariance Q on (v, omega).
Belief eif_predict(const Belief& b, const ControlInput& u, double dt,
                   const Eigen::Matrix2d& q);

// Row Jacobian of the bearing to `lm` with respect to (x, y, psi).
Eigen::RowVector3d bearing_jacobian(const VehicleState& s, const Point2& lm);

struct UpdateStats {
  int used = 0;
  int skipped = 0;  // landmark coincident with the estimate
};

// Bearing-only update, all measurements linearized at the prior mean.
Belief eif_update(const Belief& b, const std::vector<Measurement>& meas,
                  const std::vector<Landmark>& landmarks, double sigma,
                  UpdateStats* stats = nullptr);

}  // namespace svrpll

#endif  // SVRPLL_EIF_HPP_
