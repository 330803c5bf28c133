#include "svrpll/eif.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "svrpll/errors.hpp"

namespace svrpll {
namespace {

Eigen::Matrix3d symmetrize(const Eigen::Matrix3d& m) {
  return 0.5 * (m + m.transpose());
}

Eigen::LLT<Eigen::Matrix3d> factor(const Eigen::Matrix3d& omega) {
  Eigen::LLT<Eigen::Matrix3d> llt(omega);
  if (llt.info() != Eigen::Success || !omega.allFinite()) {
    throw FilterDivergence("information matrix is not positive definite");
  }
  return llt;
}

}  // namespace

Belief Belief::from_moments(const VehicleState& mean,
                            const Eigen::Matrix3d& cov) {
  Eigen::LLT<Eigen::Matrix3d> llt(symmetrize(cov));
  if (llt.info() != Eigen::Success) {
    throw FilterDivergence("initial covariance is not positive definite");
  }
  Belief b;
  b.mean = VehicleState::from(mean.vec());
  b.info_matrix = symmetrize(llt.solve(Eigen::Matrix3d::Identity()));
  b.info_vector = b.info_matrix * b.mean.vec();
  return b;
}

Eigen::Matrix3d Belief::covariance() const {
  return symmetrize(factor(info_matrix).solve(Eigen::Matrix3d::Identity()));
}

Belief eif_predict(const Belief& b, const ControlInput& u, double dt,
                   const Eigen::Matrix2d& q) {
  const Eigen::Matrix3d p = b.covariance();
  const Eigen::Matrix3d f = dynamics_jacobian_state(b.mean, u, dt);
  const Eigen::Matrix<double, 3, 2> g = dynamics_jacobian_input(b.mean, dt);
  const Eigen::Matrix3d p_next =
      symmetrize(f * p * f.transpose() + g * q * g.transpose());
  Belief out;
  out.mean = step_dynamics(b.mean, u, dt);
  out.info_matrix =
      symmetrize(factor(p_next).solve(Eigen::Matrix3d::Identity()));
  out.info_vector = out.info_matrix * out.mean.vec();
  return out;
}

Eigen::RowVector3d bearing_jacobian(const VehicleState& s, const Point2& lm) {
  const double dx = lm.x - s.x;
  const double dy = lm.y - s.y;
  const double q = dx * dx + dy * dy;
  return {dy / q, -dx / q, -1.0};
}

Belief eif_update(const Belief& b, const std::vector<Measurement>& meas,
                  const std::vector<Landmark>& landmarks, double sigma,
                  UpdateStats* stats) {
  if (meas.empty()) return b;
  if (!(sigma > 0.0)) {
    throw PreconditionError("eif_update: bearing std must be > 0");
  }
  const double inv_r = 1.0 / (sigma * sigma);
  const VehicleState& mu = b.mean;
  const Eigen::Vector3d mu_vec = mu.vec();
  Eigen::Matrix3d omega = b.info_matrix;
  Eigen::Vector3d xi = b.info_vector;
  int used = 0;
  int skipped = 0;
  for (const Measurement& z : meas) {
    const Point2& lm = landmarks[z.landmark].pos;
    const double dx = lm.x - mu.x;
    const double dy = lm.y - mu.y;
    if (dx * dx + dy * dy < 1e-12) {
      ++skipped;
      continue;
    }
    const Eigen::RowVector3d h = bearing_jacobian(mu, lm);
    const double innovation = wrap_angle(z.bearing - bearing_to(mu, lm));
    omega += inv_r * h.transpose() * h;
    xi += inv_r * h.transpose() * (innovation + h.dot(mu_vec));
    ++used;
  }
  if (stats != nullptr) {
    stats->used += used;
    stats->skipped += skipped;
  }
  Belief out;
  out.info_matrix = symmetrize(omega);
  out.mean = VehicleState::from(factor(out.info_matrix).solve(xi));
  out.info_vector = out.info_matrix * out.mean.vec();
  return out;
}

}  // namespace svrpll
