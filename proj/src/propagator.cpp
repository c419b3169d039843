#include "brachist/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace brachist {

namespace {

constexpr double kParametricGrid = 1e-3;  // us; 1 ns default sample grid

cmat control_hamiltonian(const std::vector<cmat>& ops, double nx, double ny, double nz) {
  cmat h = 2.0 * M_PI * (nx * ops[0] + ny * ops[1]);
  if (nz != 0.0) h += 2.0 * M_PI * nz * ops[2];
  return h;
}

}  // namespace

Trajectory propagate(const RotatingFrameModel& model, const ControlProtocol& protocol,
                     int substeps_per_sample) {
  if (substeps_per_sample < 1)
    throw std::invalid_argument("propagate: substeps_per_sample must be >= 1");
  protocol.validate();

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.unitaries.push_back(cmat::Identity(model.dim, model.dim));
  if (protocol.duration() <= 0.0) return traj;

  const std::vector<cmat> ops = model.control_ops(true);

  if (protocol.kind == ProtocolKind::Sampled) {
    const double dt = protocol.dt;
    const double h = dt / substeps_per_sample;
    cmat u = traj.unitaries.back();
    for (std::size_t k = 0; k < protocol.sample_count(); ++k) {
      const double nz = protocol.has_z() ? protocol.nu_z[k] : 0.0;
      const cmat hk = model.H0 + control_hamiltonian(ops, protocol.nu_x[k], protocol.nu_y[k], nz);
      const cmat step = expm_skew(hk, h);
      for (int s = 0; s < substeps_per_sample; ++s) u = step * u;
      traj.times.push_back((k + 1) * dt);
      traj.unitaries.push_back(u);
    }
    return traj;
  }

  // parametric: uniform grid close to 1 ns, midpoint phase per substep
  const double T = protocol.T;
  const int samples = std::max(1, static_cast<int>(std::lround(T / kParametricGrid)));
  const double dt = T / samples;
  const double h = dt / substeps_per_sample;
  cmat u = traj.unitaries.back();
  for (int k = 0; k < samples; ++k) {
    for (int s = 0; s < substeps_per_sample; ++s) {
      const double tm = k * dt + (s + 0.5) * h;
      const double phi = protocol.phase_at(tm);
      const cmat hk = model.H0 + control_hamiltonian(ops, protocol.nu1 * std::cos(phi),
                                                     protocol.nu1 * std::sin(phi), 0.0);
      u = expm_skew(hk, h) * u;
    }
    traj.times.push_back((k + 1) * dt);
    traj.unitaries.push_back(u);
  }
  return traj;
}

cmat final_unitary(const RotatingFrameModel& model, const ControlProtocol& protocol,
                   int substeps_per_sample) {
  return propagate(model, protocol, substeps_per_sample).final_unitary();
}

ObservableSeries bloch_series(const Trajectory& traj, const cvec& initial) {
  if (traj.unitaries.empty()) throw std::invalid_argument("bloch_series: empty trajectory");
  const Eigen::Index dim = traj.unitaries.front().rows();
  if (initial.size() != dim)
    throw std::invalid_argument("bloch_series: initial state dimension mismatch");
  if (std::abs(initial.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("bloch_series: initial state not normalized");

  ObservableSeries out;
  out.times = traj.times;
  if (dim == 2) {
    const SpinOps s = spin_half_operators();
    out.names = {"sx", "sy", "sz"};
    out.columns.assign(3, {});
    for (const cmat& u : traj.unitaries) {
      const cvec psi = u * initial;
      out.columns[0].push_back(std::real(psi.dot(s.sx * psi)));
      out.columns[1].push_back(std::real(psi.dot(s.sy * psi)));
      out.columns[2].push_back(std::real(psi.dot(s.sz * psi)));
    }
  } else if (dim == 4) {
    out.names = {"P_0_1", "P_0_0", "P_m1_1", "P_m1_0"};
    out.columns.assign(4, {});
    for (const cmat& u : traj.unitaries) {
      const cvec psi = u * initial;
      for (int lvl = 0; lvl < 4; ++lvl)
        out.columns[lvl].push_back(std::norm(psi[lvl]));
    }
  } else {
    throw std::invalid_argument("bloch_series: unsupported dimension");
  }
  return out;
}

}  // namespace brachist
