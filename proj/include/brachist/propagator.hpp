#pragma once

#include <string>
#include <vector>

#include "brachist/nv_model.hpp"
#include "brachist/protocol.hpp"
#include "brachist/spin_ops.hpp"

namespace brachist {

struct Trajectory {
  std::vector<double> times;     // us, starts at 0
  std::vector<cmat> unitaries;   // U(t) on the grid, unitaries[0] = I

  const cmat& final_unitary() const { return unitaries.back(); }
  double duration() const { return times.empty() ? 0.0 : times.back(); }
};

// Integrates U' = -i H(t) U on the protocol's sample grid.  Each step applies
// the exact exponential of the locally constant Hamiltonian; parametric
// protocols are evaluated at the midpoint phase of each substep.
// substeps_per_sample subdivides every sample (or every 1 ns of a parametric
// protocol).  A zero-duration protocol yields the single-point trajectory.
Trajectory propagate(const RotatingFrameModel& model, const ControlProtocol& protocol,
                     int substeps_per_sample = 4);

// named observable time series (<Sx>,<Sy>,<Sz> for a single qubit; the four
// level populations for two qubits)
struct ObservableSeries {
  std::vector<std::string> names;
  std::vector<double> times;
  std::vector<std::vector<double>> columns;  // one vector per name
};

ObservableSeries bloch_series(const Trajectory& traj, const cvec& initial);

// propagate + final unitary, convenience for fidelity checks
cmat final_unitary(const RotatingFrameModel& model, const ControlProtocol& protocol,
                   int substeps_per_sample = 4);

}  // namespace brachist
