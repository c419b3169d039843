#pragma once

#include <string>
#include <vector>

namespace brachist {

enum class ProtocolKind { Parametric, Sampled };

// A control Hamiltonian trajectory Hc(t) = 2*pi*nu1*(cos(phi) Sx + sin(phi) Sy).
//
// Parametric protocols use the linear phase law phi(t) = 2*pi*eta*t + phi0.
// Sampled protocols are piecewise constant on a uniform grid; samples store
// the field components (nu_x, nu_y) in MHz.  nu_z is normally empty; it is
// populated only for synthesis in the full {Sx,Sy,Sz} control space.
struct ControlProtocol {
  ProtocolKind kind = ProtocolKind::Parametric;

  double nu1 = 0.0;   // MHz, field amplitude (f0 constraint)
  double eta = 0.0;   // MHz, phase sweep rate (parametric)
  double phi0 = 0.0;  // rad                    (parametric)
  double T = 0.0;     // us                     (parametric)

  double dt = 0.0;                // us per sample (sampled)
  std::vector<double> nu_x, nu_y, nu_z;

  static ControlProtocol parametric(double nu1, double eta, double phi0, double T);
  static ControlProtocol sampled(double nu1, double dt, std::vector<double> nu_x,
                                 std::vector<double> nu_y,
                                 std::vector<double> nu_z = {});

  double duration() const;
  bool empty() const { return duration() <= 0.0; }
  std::size_t sample_count() const { return nu_x.size(); }
  bool has_z() const { return !nu_z.empty(); }

  double phase_at(double t) const;  // parametric only

  // checks the constant-amplitude constraint (and grid consistency);
  // throws std::invalid_argument on violation
  void validate(double tol = 1e-9) const;

  // discretize a parametric protocol on a uniform grid (midpoint phase)
  ControlProtocol resampled(double dt) const;
};

}  // namespace brachist
