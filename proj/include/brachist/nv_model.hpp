#pragma once

#include <optional>
#include <string>

#include "brachist/spin_ops.hpp"

namespace brachist {

// NV center constants.  Gyromagnetic ratios are given as gamma/2pi in MHz/G;
// the electron value is negative.  Zeeman conventions: omega_S = -gamma_e B0 / 2pi,
// omega_I = +gamma_N B0 / 2pi (both in MHz).
struct NvParameters {
  double D = 2870.0;                  // zero-field splitting, MHz
  double P = -4.95;                   // nuclear quadrupolar splitting, MHz
  double A = -2.16;                   // hyperfine coupling, MHz
  double B0 = 500.0;                  // static field, gauss
  double gamma_e_over_2pi = -2.8025;  // MHz/G
  double gamma_n_over_2pi = 3.077e-4; // MHz/G (14N)
  std::optional<double> A_perp;       // transverse hyperfine; never used by the
                                      // secular model, carried for reference

  double omega_s() const { return -gamma_e_over_2pi * B0; }
  double omega_i() const { return gamma_n_over_2pi * B0; }

  // resonance frequencies of the effective qubits
  double f_mw_single() const { return D - omega_s() - A; }        // m_I=+1 electron line
  double f_mw_two_qubit() const { return D - omega_s() - A / 2; }
  double f_rf_two_qubit() const { return -P + omega_i() + A / 2; }

  // flat key=value config (keys: D_mhz, P_mhz, A_mhz, B0_gauss,
  // gamma_e_mhz_per_g, gamma_n_mhz_per_g)
  static NvParameters load(const std::string& path);
  void save(const std::string& path) const;
};

enum class DriftKind {
  SingleQubitDetuning,   // H0 = 2 pi delta Sz
  TwoQubitHyperfine,     // H0 = 2 pi A SzIz
  TwoQubitSelectiveFrame // H0 = 2 pi [A SzIz + (A/2) Sz], frame at the m_I=0 line
};

// effective model after the rotating-frame transformation and RWA; the control
// enters as 2 pi nu1 (cos(phi) Sx + sin(phi) Sy) with nu1 taken per protocol
struct RotatingFrameModel {
  int dim = 2;
  DriftKind drift = DriftKind::SingleQubitDetuning;
  cmat H0;                   // rad/us
  double delta0 = 0.0;       // MHz, single-qubit detuning
  double A = 0.0;            // MHz, two-qubit coupling
  double f_mw = 0.0, f_rf = 0.0;  // frame frequencies, MHz
  std::string control_form = "2*pi*nu1*(cos(phi)*Sx + sin(phi)*Sy)";

  // control direction operators for this dimension ({Sx,Sy} or {SxI,SyI}, plus
  // Sz / SzI as the optional third axis)
  std::vector<cmat> control_ops(bool include_z = false) const;
};

// full secular Hamiltonian of the NV ground state, spin-1 x spin-1 (9x9,
// diagonal), basis m_S in {+1,0,-1} x m_I in {+1,0,-1}, rad/us
cmat secular_hamiltonian(const NvParameters& p);

// effective electron-qubit model at m_I=+1, driven at f_mw:
// delta0 = f_mw - (D - omega_s - A)
RotatingFrameModel single_qubit_frame(const NvParameters& p, double f_mw);

RotatingFrameModel single_qubit_model(double delta0_mhz);  // detuning given directly

// two-qubit model: H0 = 2 pi A SzIz with the standard frame frequencies
RotatingFrameModel two_qubit_frame(const NvParameters& p);

RotatingFrameModel two_qubit_model(double a_mhz);

// frame co-rotating with the m_I=0 electron line (used by the selective-pulse
// baseline, where the conditional rotation closes exactly)
RotatingFrameModel two_qubit_selective_frame_model(double a_mhz);

}  // namespace brachist
