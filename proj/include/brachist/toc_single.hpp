#pragma once

#include <string>
#include <vector>

#include "brachist/protocol.hpp"
#include "brachist/spin_ops.hpp"

namespace brachist {

// target R(n, theta), n = (sin(gamma)cos(phi), sin(gamma)sin(phi), cos(gamma))
struct RotationTarget {
  Eigen::Vector3d axis{0, 0, 1};
  double theta = 0.0;  // rad, in [0, 2*pi)

  static RotationTarget z(double theta);
  static RotationTarget x(double theta);
  static RotationTarget from_angles(double gamma, double phi, double theta);

  double gamma() const { return std::acos(std::clamp(axis.z(), -1.0, 1.0)); }
  double phi() const { return std::atan2(axis.y(), axis.x()); }
  bool is_identity(double tol = 1e-12) const { return std::abs(theta) < tol; }
  cmat matrix() const;  // exp(-i theta n.S)

  void validate() const;  // unit axis, theta range
};

enum class Branch { BelowThreshold, AboveThreshold, Numeric };

std::string branch_name(Branch b);

struct TOCSolution {
  ControlProtocol protocol;
  double T = 0.0;      // us
  double eta = 0.0;    // MHz (parametric solutions)
  double phi0 = 0.0;   // rad
  Branch branch = Branch::Numeric;
  double achieved_fidelity = 1.0;  // closed-system, from propagation
  // set when a numeric QBE solve reproduces the expected minimum time but the
  // integrated protocol deviates from the structural form it was checked
  // against (constant co-rotating direction, linear phase)
  bool shape_mismatch = false;
};

// Closed-form minimum-time z-rotation with detuning; the branch threshold is
// theta* = pi (1 + sqrt(3) delta/nu1), with theta >= theta* on the upper
// branch.  Negative delta is folded back by the z -> -z symmetry
// (theta -> 2*pi - theta, eta and phi0 negated).
TOCSolution solve_z_rotation(double theta, double delta, double nu1);

// general target via the boundary-value system of the linear-phase law:
// least-squares roots in (T, eta, phi0) over both global-phase signs,
// multistart on a deterministic seed grid, smallest feasible T returned.
// Throws SolverError (with best residuals) when no root is found.
TOCSolution solve_general(const RotationTarget& target, double delta, double nu1);

// minimum time with the control allowed anywhere on the |Hc| = 2 pi nu1
// sphere of span{Sx,Sy,Sz}.  The brachistochrone flow makes such controls
// co-rotate with the drift, U(T) = exp(-i H0 T) exp(-i Hc0 T); the boundary
// condition reduces to one scalar equation for T.  The result is re-derived
// through the generic QBE integrator and cross-checked (shape_mismatch).
TOCSolution solve_with_z_control(const RotationTarget& target, double delta, double nu1);

// three-segment resonant Euler decomposition R(x,pi/2) R(y,theta) R(-x,pi/2);
// total T = (pi + theta) / (2 pi nu1); the non-optimal comparator
TOCSolution euler_baseline(double theta, double nu1);

// minimum evolution time tabulated on a (delta/nu1, theta) grid
Eigen::MatrixXd time_surface(const std::vector<double>& delta_over_nu1,
                             const std::vector<double>& thetas, double nu1);

// residual of the four boundary equations at (T, eta, phi0); exposed for the
// solver and for tests
Eigen::Vector4d boundary_residual(double T, double eta, double phi0,
                                  const RotationTarget& target, double delta,
                                  double nu1, int sign);

}  // namespace brachist
