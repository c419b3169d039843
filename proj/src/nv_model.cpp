#include "brachist/nv_model.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace brachist {

NvParameters NvParameters::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  NvParameters p;
  std::map<std::string, double*> keys = {
      {"D_mhz", &p.D},
      {"P_mhz", &p.P},
      {"A_mhz", &p.A},
      {"B0_gauss", &p.B0},
      {"gamma_e_mhz_per_g", &p.gamma_e_over_2pi},
      {"gamma_n_mhz_per_g", &p.gamma_n_over_2pi},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, value;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r\n") != std::string::npos)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
      continue;
    }
    key = line.substr(0, eq);
    value = line.substr(eq + 1);
    const auto trim = [](std::string& s) {
      const auto a = s.find_first_not_of(" \t\r\n");
      const auto b = s.find_last_not_of(" \t\r\n");
      s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
    };
    trim(key);
    trim(value);
    const auto it = keys.find(key);
    if (it == keys.end())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    *it->second = std::stod(value);
  }
  return p;
}

void NvParameters::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file: " + path);
  out.precision(12);
  out << "D_mhz = " << D << "\n"
      << "P_mhz = " << P << "\n"
      << "A_mhz = " << A << "\n"
      << "B0_gauss = " << B0 << "\n"
      << "gamma_e_mhz_per_g = " << gamma_e_over_2pi << "\n"
      << "gamma_n_mhz_per_g = " << gamma_n_over_2pi << "\n";
}

std::vector<cmat> RotatingFrameModel::control_ops(bool include_z) const {
  const SpinOps s = spin_half_operators();
  std::vector<cmat> ops;
  if (dim == 2) {
    ops = {s.sx, s.sy};
    if (include_z) ops.push_back(s.sz);
  } else {
    const cmat id = cmat::Identity(2, 2);
    ops = {kron(s.sx, id), kron(s.sy, id)};
    if (include_z) ops.push_back(kron(s.sz, id));
  }
  return ops;
}

cmat secular_hamiltonian(const NvParameters& p) {
  const SpinOps s1 = spin_one_operators();
  const cmat id3 = cmat::Identity(3, 3);
  const cmat Sz = kron(s1.sz, id3);
  const cmat Iz = kron(id3, s1.sz);
  return 2.0 * M_PI *
         (p.D * Sz * Sz + p.omega_s() * Sz + p.A * Sz * Iz + p.P * Iz * Iz -
          p.omega_i() * Iz);
}

RotatingFrameModel single_qubit_model(double delta0_mhz) {
  const SpinOps s = spin_half_operators();
  RotatingFrameModel m;
  m.dim = 2;
  m.drift = DriftKind::SingleQubitDetuning;
  m.delta0 = delta0_mhz;
  m.H0 = 2.0 * M_PI * delta0_mhz * s.sz;
  return m;
}

RotatingFrameModel single_qubit_frame(const NvParameters& p, double f_mw) {
  RotatingFrameModel m = single_qubit_model(f_mw - p.f_mw_single());
  m.f_mw = f_mw;
  return m;
}

RotatingFrameModel two_qubit_model(double a_mhz) {
  const SpinOps s = spin_half_operators();
  const cmat id = cmat::Identity(2, 2);
  RotatingFrameModel m;
  m.dim = 4;
  m.drift = DriftKind::TwoQubitHyperfine;
  m.A = a_mhz;
  m.H0 = 2.0 * M_PI * a_mhz * kron(s.sz, id) * kron(id, s.sz);
  return m;
}

RotatingFrameModel two_qubit_frame(const NvParameters& p) {
  RotatingFrameModel m = two_qubit_model(p.A);
  m.f_mw = p.f_mw_two_qubit();
  m.f_rf = p.f_rf_two_qubit();
  return m;
}

RotatingFrameModel two_qubit_selective_frame_model(double a_mhz) {
  const SpinOps s = spin_half_operators();
  const cmat id = cmat::Identity(2, 2);
  RotatingFrameModel m;
  m.dim = 4;
  m.drift = DriftKind::TwoQubitSelectiveFrame;
  m.A = a_mhz;
  m.H0 = 2.0 * M_PI * a_mhz *
         (kron(s.sz, id) * kron(id, s.sz) + 0.5 * kron(s.sz, id));
  return m;
}

}  // namespace brachist
