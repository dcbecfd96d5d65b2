#include "esdgmhd/state.hpp"

#include <cmath>
#include <stdexcept>

namespace esdg {

namespace {
double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
}  // namespace

State State::from_prim(double rho, std::array<double, 3> v, double p,
                       std::array<double, 3> B, double psi, double gamma) {
  State u;
  u.rho = rho;
  u.mom = {rho * v[0], rho * v[1], rho * v[2]};
  u.mag = B;
  u.psi = psi;
  u.energy = p / (gamma - 1.0) + 0.5 * rho * dot3(v, v) + 0.5 * dot3(B, B) + 0.5 * psi * psi;
  return u;
}

double pressure(const State& u, double gamma) {
  const double vsq = dot3(u.mom, u.mom) / (u.rho * u.rho);
  return (gamma - 1.0) * (u.energy - 0.5 * u.rho * vsq - 0.5 * dot3(u.mag, u.mag) - 0.5 * u.psi * u.psi);
}

EntropyState entropy_vars(const State& u, double gamma) {
  const double p = pressure(u, gamma);
  if (!(u.rho > 0.0) || !(p > 0.0)) {
    throw std::domain_error("entropy_vars: non-positive density or pressure");
  }
  const double beta = u.rho / (2.0 * p);
  const double s = std::log(p) - gamma * std::log(u.rho);
  const double v1 = u.mom[0] / u.rho, v2 = u.mom[1] / u.rho, v3 = u.mom[2] / u.rho;
  EntropyState e;
  e.beta = beta;
  e.w[0] = (gamma - s) / (gamma - 1.0) - beta * (v1 * v1 + v2 * v2 + v3 * v3);
  e.w[1] = 2.0 * beta * v1;
  e.w[2] = 2.0 * beta * v2;
  e.w[3] = 2.0 * beta * v3;
  e.w[4] = -2.0 * beta;
  e.w[5] = 2.0 * beta * u.mag[0];
  e.w[6] = 2.0 * beta * u.mag[1];
  e.w[7] = 2.0 * beta * u.mag[2];
  e.w[8] = 2.0 * beta * u.psi;
  return e;
}

State conserved_from_entropy_vars(const Vec9& w, double gamma) {
  if (!(w[4] < 0.0)) {
    throw std::domain_error("conserved_from_entropy_vars: w5 must be negative");
  }
  const double beta = -0.5 * w[4];
  const double inv2b = 1.0 / (2.0 * beta);
  const std::array<double, 3> v = {w[1] * inv2b, w[2] * inv2b, w[3] * inv2b};
  const std::array<double, 3> B = {w[5] * inv2b, w[6] * inv2b, w[7] * inv2b};
  const double psi = w[8] * inv2b;
  // w1 = (gamma - s)/(gamma-1) - beta |v|^2 and s = (1-gamma) ln(rho) - ln(2 beta)
  const double s = gamma - (gamma - 1.0) * (w[0] + beta * dot3(v, v));
  const double rho = std::exp((s + std::log(2.0 * beta)) / (1.0 - gamma));
  const double p = rho * inv2b;
  State u;
  u.rho = rho;
  u.mom = {rho * v[0], rho * v[1], rho * v[2]};
  u.mag = B;
  u.psi = psi;
  u.energy = p / (gamma - 1.0) + 0.5 * rho * dot3(v, v) + 0.5 * dot3(B, B) + 0.5 * psi * psi;
  return u;
}

double entropy_density(const State& u, double gamma) {
  const double p = pressure(u, gamma);
  const double s = std::log(p) - gamma * std::log(u.rho);
  return -u.rho * s / (gamma - 1.0);
}

Vec9 janhunen_vector(const State& u) {
  Vec9 phi{};
  phi[kMagX] = u.mom[0] / u.rho;
  phi[kMagY] = u.mom[1] / u.rho;
  phi[kMagZ] = u.mom[2] / u.rho;
  return phi;
}

double theta(const State& u, double gamma) {
  const double p = pressure(u, gamma);
  const double beta = u.rho / (2.0 * p);
  return 2.0 * beta * (u.mom[0] * u.mag[0] + u.mom[1] * u.mag[1] + u.mom[2] * u.mag[2]) / u.rho;
}

FluxPotentials entropy_flux_potentials(const State& u, double gamma, double c_h, int direction) {
  const EntropyState e = entropy_vars(u, gamma);
  const double p = pressure(u, gamma);
  const std::array<double, 3> v = {u.vel(0), u.vel(1), u.vel(2)};
  const std::array<double, 3>& B = u.mag;
  const double vsq = dot3(v, v);
  const double Bsq = dot3(B, B);
  const double vdB = dot3(v, B);
  const double vn = v[direction];
  const double Bn = B[direction];
  const int d = direction;

  // directional split of the physical flux into Euler / ideal MHD / GLM parts
  Vec9 fE{}, fM{}, fG{};
  fE[kRho] = u.rho * vn;
  for (int k = 0; k < 3; ++k) fE[kMomX + k] = u.rho * vn * v[k];
  fE[kMomX + d] += p;
  fE[kEnergy] = vn * (0.5 * u.rho * vsq + gamma * p / (gamma - 1.0));

  for (int k = 0; k < 3; ++k) fM[kMomX + k] = -Bn * B[k];
  fM[kMomX + d] += 0.5 * Bsq;
  fM[kEnergy] = vn * Bsq - Bn * vdB;
  for (int k = 0; k < 3; ++k) fM[kMagX + k] = vn * B[k] - v[k] * Bn;
  fM[kMagX + d] = 0.0;

  fG[kEnergy] = c_h * u.psi * Bn;
  fG[kMagX + d] = c_h * u.psi;
  fG[kPsi] = c_h * Bn;

  const double entflux = vn * entropy_density(u, gamma);
  const double th = theta(u, gamma);
  FluxPotentials psi_pot;
  psi_pot.euler = dot(e.w, fE) - entflux;
  psi_pot.mhd = dot(e.w, fM) + th * Bn;
  psi_pot.glm = dot(e.w, fG);
  return psi_pot;
}

}  // namespace esdg
