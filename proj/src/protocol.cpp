#include "brachist/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace brachist {

ControlProtocol ControlProtocol::parametric(double nu1, double eta, double phi0, double T) {
  ControlProtocol p;
  p.kind = ProtocolKind::Parametric;
  p.nu1 = nu1;
  p.eta = eta;
  p.phi0 = phi0;
  p.T = T;
  return p;
}

ControlProtocol ControlProtocol::sampled(double nu1, double dt, std::vector<double> nu_x,
                                         std::vector<double> nu_y,
                                         std::vector<double> nu_z) {
  ControlProtocol p;
  p.kind = ProtocolKind::Sampled;
  p.nu1 = nu1;
  p.dt = dt;
  p.nu_x = std::move(nu_x);
  p.nu_y = std::move(nu_y);
  p.nu_z = std::move(nu_z);
  return p;
}

double ControlProtocol::duration() const {
  return kind == ProtocolKind::Parametric ? T : dt * static_cast<double>(nu_x.size());
}

double ControlProtocol::phase_at(double t) const {
  if (kind != ProtocolKind::Parametric)
    throw std::invalid_argument("phase_at: protocol is not parametric");
  return 2.0 * M_PI * eta * t + phi0;
}

void ControlProtocol::validate(double tol) const {
  if (kind == ProtocolKind::Parametric) {
    if (T > 0.0 && nu1 <= 0.0)
      throw std::invalid_argument("protocol: parametric amplitude must be positive");
    return;
  }
  if (nu_x.size() != nu_y.size())
    throw std::invalid_argument("protocol: nu_x / nu_y length mismatch");
  if (!nu_z.empty() && nu_z.size() != nu_x.size())
    throw std::invalid_argument("protocol: nu_z length mismatch");
  if (!nu_x.empty() && dt <= 0.0)
    throw std::invalid_argument("protocol: sample spacing must be positive");
  for (std::size_t k = 0; k < nu_x.size(); ++k) {
    const double z = has_z() ? nu_z[k] : 0.0;
    const double amp = std::sqrt(nu_x[k] * nu_x[k] + nu_y[k] * nu_y[k] + z * z);
    if (std::abs(amp - nu1) > tol * std::max(1.0, nu1))
      throw std::invalid_argument("protocol: sample " + std::to_string(k) +
                                  " violates the constant-amplitude constraint");
  }
}

ControlProtocol ControlProtocol::resampled(double grid) const {
  if (kind == ProtocolKind::Sampled) return *this;
  const int n = std::max(1, static_cast<int>(std::lround(T / grid)));
  const double h = T / n;
  std::vector<double> vx(n), vy(n);
  for (int k = 0; k < n; ++k) {
    const double phi = phase_at((k + 0.5) * h);
    vx[k] = nu1 * std::cos(phi);
    vy[k] = nu1 * std::sin(phi);
  }
  return sampled(nu1, h, std::move(vx), std::move(vy));
}

}  // namespace brachist
