#include "brachist/spin_ops.hpp"

#include <stdexcept>

namespace brachist {

namespace {
const cplx I(0.0, 1.0);
}

SpinOps spin_half_operators() {
  SpinOps s;
  s.sx = cmat{{cplx(0), cplx(0.5)}, {cplx(0.5), cplx(0)}};
  s.sy = cmat{{cplx(0), cplx(0, -0.5)}, {cplx(0, 0.5), cplx(0)}};
  s.sz = cmat{{cplx(0.5), cplx(0)}, {cplx(0), cplx(-0.5)}};
  return s;
}

SpinOps spin_one_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  SpinOps s;
  s.sx = cmat::Zero(3, 3);
  s.sx(0, 1) = r; s.sx(1, 0) = r; s.sx(1, 2) = r; s.sx(2, 1) = r;
  s.sy = cmat::Zero(3, 3);
  s.sy(0, 1) = -I * r; s.sy(1, 0) = I * r; s.sy(1, 2) = -I * r; s.sy(2, 1) = I * r;
  s.sz = cmat::Zero(3, 3);
  s.sz(0, 0) = 1.0; s.sz(2, 2) = -1.0;
  return s;
}

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<cmat> two_qubit_basis() {
  const SpinOps s = spin_half_operators();
  const cmat id = cmat::Identity(2, 2);
  const cmat SX = kron(s.sx, id), SY = kron(s.sy, id), SZ = kron(s.sz, id);
  const cmat IX = kron(id, s.sx), IY = kron(id, s.sy), IZ = kron(id, s.sz);
  return {IX,      IY,      IZ,      SX * IX, SX * IY, SX * IZ, SY * IX,
          SY * IY, SY * IZ, SZ,      SZ * IX, SZ * IY, SZ * IZ};
}

std::vector<cmat> two_qubit_controls() {
  const SpinOps s = spin_half_operators();
  const cmat id = cmat::Identity(2, 2);
  return {kron(s.sx, id), kron(s.sy, id)};
}

bool is_hermitian(const cmat& a, double tol) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() < tol;
}

double unitarity_error(const cmat& u) {
  const cmat d = u.adjoint() * u - cmat::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

bool is_unitary(const cmat& u, double tol) {
  return u.rows() == u.cols() && unitarity_error(u) < tol;
}

cmat expm_skew(const cmat& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("expm_skew: matrix not square");
  if (!std::isfinite(t)) throw std::invalid_argument("expm_skew: non-finite time");
  if (!is_hermitian(h, 1e-9)) throw std::invalid_argument("expm_skew: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<cmat> es(h);
  const Eigen::VectorXd w = es.eigenvalues();
  cvec phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases[k] = std::exp(-I * w[k] * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double gate_fidelity(const cmat& u, const cmat& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("gate_fidelity: dimension mismatch");
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

cmat rotation_gate(const Eigen::Vector3d& axis, double theta) {
  const SpinOps s = spin_half_operators();
  const cmat ns = axis.x() * s.sx + axis.y() * s.sy + axis.z() * s.sz;
  return expm_skew(ns, theta);
}

cmat controlled_u_gate() {
  cmat u = cmat::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 3) = 1.0;
  u(2, 2) = 1.0;
  u(3, 1) = -1.0;
  return u;
}

}  // namespace brachist
