#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace brachist {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Unit conventions used throughout: hbar = 1, frequencies in MHz, times in
// microseconds.  Hamiltonians carry their 2*pi factor explicitly at
// construction and are therefore in rad/us.
//
// Effective qubits: |m_S=0> (|m_I=+1>) is the +1/2 eigenstate of Sz (Iz).
// Two-qubit basis order: {|0,1>, |0,0>, |-1,1>, |-1,0>}, electron factor
// first in tensor products.

struct SpinOps {
  cmat sx, sy, sz;
};

// spin-1/2 operators (sigma/2)
SpinOps spin_half_operators();

// spin-1 operators in the m = {+1, 0, -1} basis
SpinOps spin_one_operators();

cmat kron(const cmat& a, const cmat& b);

// the 13 forbidden control directions of the two-qubit problem, ordered
// {Ix, Iy, Iz, SxIx, SxIy, SxIz, SyIx, SyIy, SyIz, Sz, SzIx, SzIy, SzIz}
// (4x4, identity factors implicit)
std::vector<cmat> two_qubit_basis();

// allowed two-qubit control directions {Sx x I, Sy x I}
std::vector<cmat> two_qubit_controls();

bool is_hermitian(const cmat& a, double tol = 1e-12);
bool is_unitary(const cmat& u, double tol = 1e-10);
double unitarity_error(const cmat& u);  // max |U^dag U - I|

// exp(-i H t) for Hermitian H, via eigendecomposition (exact at these sizes)
cmat expm_skew(const cmat& h, double t);

// phase-insensitive unitary overlap |Tr(U^dag V)| / d
double gate_fidelity(const cmat& u, const cmat& v);

// R(n, theta) = exp(-i theta n.S) on the spin-1/2 space
cmat rotation_gate(const Eigen::Vector3d& axis, double theta);

// controlled-U: flips the electron qubit iff the nuclear qubit is |m_I=0>
cmat controlled_u_gate();

}  // namespace brachist
