#include "brachist/toc_single.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "brachist/numeric.hpp"
#include "brachist/propagator.hpp"
#include "brachist/toc_qbe.hpp"

namespace brachist {

namespace {

constexpr double kFidelityFloor = 0.9999;

double verify_by_propagation(const RotationTarget& target, double delta,
                             const ControlProtocol& protocol) {
  const RotatingFrameModel model = single_qubit_model(delta);
  return gate_fidelity(final_unitary(model, protocol), target.matrix());
}

}  // namespace

RotationTarget RotationTarget::z(double theta) { return {{0, 0, 1}, theta}; }
RotationTarget RotationTarget::x(double theta) { return {{1, 0, 0}, theta}; }

RotationTarget RotationTarget::from_angles(double gamma, double phi, double theta) {
  return {{std::sin(gamma) * std::cos(phi), std::sin(gamma) * std::sin(phi),
           std::cos(gamma)},
          theta};
}

cmat RotationTarget::matrix() const { return rotation_gate(axis, theta); }

void RotationTarget::validate() const {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("rotation target: axis must be a unit vector");
  if (theta < 0.0 || theta >= 2.0 * M_PI)
    throw std::invalid_argument("rotation target: theta must lie in [0, 2*pi)");
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::BelowThreshold: return "below-threshold";
    case Branch::AboveThreshold: return "above-threshold";
    default: return "numeric";
  }
}

TOCSolution solve_z_rotation(double theta, double delta, double nu1) {
  if (nu1 <= 0.0) throw std::invalid_argument("solve_z_rotation: nu1 must be positive");
  if (theta < 0.0 || theta >= 2.0 * M_PI)
    throw std::invalid_argument("solve_z_rotation: theta must lie in [0, 2*pi)");

  if (delta < 0.0) {
    // z -> -z conjugation maps (theta, delta) to (2*pi - theta, -delta) and
    // negates the drive phase
    if (theta == 0.0) return solve_z_rotation(0.0, -delta, nu1);
    TOCSolution mirrored = solve_z_rotation(2.0 * M_PI - theta, -delta, nu1);
    mirrored.eta = -mirrored.eta;
    mirrored.phi0 = -mirrored.phi0;
    mirrored.protocol = ControlProtocol::parametric(nu1, mirrored.eta, mirrored.phi0, mirrored.T);
    mirrored.achieved_fidelity =
        verify_by_propagation(RotationTarget::z(theta), delta, mirrored.protocol);
    return mirrored;
  }

  TOCSolution sol;
  if (theta == 0.0) {
    sol.protocol = ControlProtocol::parametric(nu1, 0.0, 0.0, 0.0);
    sol.branch = Branch::BelowThreshold;
    return sol;
  }

  const double x = theta / (2.0 * M_PI);
  const double den = nu1 * nu1 + delta * delta;
  const double threshold = M_PI * (1.0 + std::sqrt(3.0) * delta / nu1);
  if (theta < threshold) {
    sol.branch = Branch::BelowThreshold;
    sol.T = (delta * (x - 1.0) + std::sqrt(den - nu1 * nu1 * (x - 1.0) * (x - 1.0))) / den;
    sol.eta = -(2.0 * M_PI - theta) / (2.0 * M_PI * sol.T);
  } else {
    // on this branch the boundary equations fix eta = +theta/(2*pi*T); the
    // opposite sign fails the resonance condition sqrt(nu1^2+(delta-eta)^2)*T = k
    sol.branch = Branch::AboveThreshold;
    sol.T = (delta * x + std::sqrt(den - nu1 * nu1 * x * x)) / den;
    sol.eta = theta / (2.0 * M_PI * sol.T);
  }
  sol.phi0 = 0.0;
  sol.protocol = ControlProtocol::parametric(nu1, sol.eta, sol.phi0, sol.T);
  sol.achieved_fidelity =
      verify_by_propagation(RotationTarget::z(theta), delta, sol.protocol);
  return sol;
}

Eigen::Vector4d boundary_residual(double T, double eta, double phi0,
                                  const RotationTarget& target, double delta,
                                  double nu1, int sign) {
  const double om = std::sqrt(nu1 * nu1 + (delta - eta) * (delta - eta));
  const double c = std::cos(M_PI * eta * T), s = std::sin(M_PI * eta * T);
  const double C = std::cos(M_PI * om * T), S = std::sin(M_PI * om * T);
  const double kappa = (delta - eta) / om;
  const double g = target.gamma(), p = target.phi(), th = target.theta;
  Eigen::Vector4d r;
  r[0] = c * C - s * S * kappa - sign * std::cos(th / 2);
  r[1] = s * C + c * S * kappa - sign * std::cos(g) * std::sin(th / 2);
  r[2] = nu1 / om * std::cos(M_PI * eta * T + phi0) * S -
         sign * std::sin(g) * std::cos(p) * std::sin(th / 2);
  r[3] = nu1 / om * std::sin(M_PI * eta * T + phi0) * S -
         sign * std::sin(g) * std::sin(p) * std::sin(th / 2);
  return r;
}

TOCSolution solve_general(const RotationTarget& target, double delta, double nu1) {
  target.validate();
  if (nu1 <= 0.0) throw std::invalid_argument("solve_general: nu1 must be positive");
  if (target.is_identity())
    throw std::invalid_argument("solve_general: identity target");

  constexpr double kAcceptResidual = 1e-10;
  constexpr int kTimeSeeds = 40;
  constexpr int kEtaSeeds = 17;

  double bestT = -1.0, bestEta = 0.0, bestPhi0 = 0.0;
  double best_rejected = std::numeric_limits<double>::infinity();

  const double phi_tgt = target.phi();
  for (int sign : {+1, -1}) {
    for (int it = 1; it <= kTimeSeeds; ++it) {
      const double T0 = it * (2.0 / nu1) / kTimeSeeds;
      if (bestT > 0.0 && T0 > bestT + 0.25 / nu1) break;  // seeds beyond the best root
      for (int ie = 0; ie < kEtaSeeds; ++ie) {
        const double eta0 = -(nu1 + std::abs(delta)) +
                            2.0 * (nu1 + std::abs(delta)) * ie / (kEtaSeeds - 1);
        for (double dphi : {0.0, M_PI}) {
          Eigen::VectorXd x0(3);
          x0 << T0, eta0, phi_tgt - M_PI * eta0 * T0 + dphi;
          const auto residual = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
            return boundary_residual(x[0], x[1], x[2], target, delta, nu1, sign);
          };
          const LmResult r = least_squares_lm(residual, x0);
          if (r.residual_norm < kAcceptResidual && r.x[0] > 1e-5) {
            if (bestT < 0.0 || r.x[0] < bestT - 1e-12) {
              bestT = r.x[0];
              bestEta = r.x[1];
              bestPhi0 = r.x[2];
            }
          } else {
            best_rejected = std::min(best_rejected, r.residual_norm);
          }
        }
      }
    }
  }

  if (bestT < 0.0) {
    std::ostringstream msg;
    msg << "solve_general: no boundary-equation root in the search window"
        << " (best residual " << best_rejected << ")";
    throw SolverError(msg.str(), best_rejected);
  }

  TOCSolution sol;
  sol.T = bestT;
  sol.eta = bestEta;
  sol.phi0 = std::remainder(bestPhi0, 2.0 * M_PI);
  sol.branch = Branch::Numeric;
  sol.protocol = ControlProtocol::parametric(nu1, sol.eta, sol.phi0, sol.T);
  sol.achieved_fidelity = verify_by_propagation(target, delta, sol.protocol);
  if (sol.achieved_fidelity < kFidelityFloor) {
    std::ostringstream msg;
    msg << "solve_general: root at T=" << sol.T
        << " us failed propagation check (fidelity " << sol.achieved_fidelity << ")";
    throw SolverError(msg.str(), 1.0 - sol.achieved_fidelity);
  }
  return sol;
}

TOCSolution solve_with_z_control(const RotationTarget& target, double delta, double nu1) {
  target.validate();
  if (nu1 <= 0.0) throw std::invalid_argument("solve_with_z_control: nu1 must be positive");
  if (target.is_identity())
    throw std::invalid_argument("solve_with_z_control: identity target");
  return qbe_solve_full_span_single_qubit(target, delta, nu1);
}

TOCSolution euler_baseline(double theta, double nu1) {
  if (theta <= 0.0 || theta > M_PI)
    throw std::invalid_argument("euler_baseline: theta must lie in (0, pi]");
  if (nu1 <= 0.0) throw std::invalid_argument("euler_baseline: nu1 must be positive");

  const double T = (M_PI + theta) / (2.0 * M_PI * nu1);
  const double t1 = 1.0 / (4.0 * nu1);            // R(-x, pi/2), phase pi
  const double t2 = t1 + theta / (2.0 * M_PI * nu1);  // R(y, theta), phase pi/2

  const int n = std::max(1, static_cast<int>(std::ceil(T / 2e-4)));
  const double dt = T / n;
  std::vector<double> vx(n), vy(n);
  for (int k = 0; k < n; ++k) {
    const double tm = (k + 0.5) * dt;
    const double phi = tm < t1 ? M_PI : (tm < t2 ? M_PI / 2 : 0.0);
    vx[k] = nu1 * std::cos(phi);
    vy[k] = nu1 * std::sin(phi);
  }

  TOCSolution sol;
  sol.T = T;
  sol.branch = Branch::Numeric;
  sol.protocol = ControlProtocol::sampled(nu1, dt, std::move(vx), std::move(vy));
  sol.achieved_fidelity =
      verify_by_propagation(RotationTarget::z(theta), 0.0, sol.protocol);
  return sol;
}

Eigen::MatrixXd time_surface(const std::vector<double>& delta_over_nu1,
                             const std::vector<double>& thetas, double nu1) {
  if (delta_over_nu1.empty() || thetas.empty())
    throw std::invalid_argument("time_surface: empty grid");
  Eigen::MatrixXd out(delta_over_nu1.size(), thetas.size());
  for (std::size_t i = 0; i < delta_over_nu1.size(); ++i)
    for (std::size_t j = 0; j < thetas.size(); ++j)
      out(i, j) = solve_z_rotation(thetas[j], delta_over_nu1[i] * nu1, nu1).T;
  return out;
}

}  // namespace brachist
