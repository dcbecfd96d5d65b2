#ifndef ESDGMHD_STATE_HPP
#define ESDGMHD_STATE_HPP

#include <array>

#include "esdgmhd/types.hpp"

namespace esdg {

/// Gas and transport parameters. The thermal conductivity is not an
/// independent input: it follows from mu through the Prandtl number with
/// c_p = gamma R / (gamma - 1).
struct GasConfig {
  double gamma = 5.0 / 3.0;  // adiabatic coefficient, > 1
  double rgas = 1.0;         // gas constant R
  double prandtl = 0.72;     // Prandtl number
  double mu = 0.0;           // dynamic viscosity
  double eta = 0.0;          // resistivity
  double alpha = 0.0;        // psi damping rate

  double kappa() const { return mu * gamma * rgas / ((gamma - 1.0) * prandtl); }
};

/// Conserved state (rho, rho*v, E, B, psi) at one point.
struct State {
  double rho = 0.0;
  std::array<double, 3> mom{};
  double energy = 0.0;
  std::array<double, 3> mag{};
  double psi = 0.0;

  double vel(int d) const { return mom[d] / rho; }

  Vec9 to_vec() const {
    return {rho, mom[0], mom[1], mom[2], energy, mag[0], mag[1], mag[2], psi};
  }
  static State from_vec(const Vec9& u) {
    return {u[kRho], {u[kMomX], u[kMomY], u[kMomZ]}, u[kEnergy],
            {u[kMagX], u[kMagY], u[kMagZ]}, u[kPsi]};
  }
  static State from_prim(double rho, std::array<double, 3> v, double p,
                         std::array<double, 3> B, double psi, double gamma);
};

/// Entropy variables w = dS/du together with the cached inverse-temperature
/// proxy beta = rho / (2 p).
struct EntropyState {
  Vec9 w{};
  double beta = 0.0;
};

/// p = (gamma-1) (E - rho|v|^2/2 - |B|^2/2 - psi^2/2). May return a
/// non-positive value for inadmissible states; the caller decides whether
/// that is fatal.
double pressure(const State& u, double gamma);

/// Throws std::domain_error for rho <= 0 or p <= 0.
EntropyState entropy_vars(const State& u, double gamma);

/// Inverse of entropy_vars. Throws std::domain_error for w5 >= 0.
State conserved_from_entropy_vars(const Vec9& w, double gamma);

/// S = -rho s / (gamma - 1) with s = ln(p rho^-gamma).
double entropy_density(const State& u, double gamma);

/// Non-conservative coupling vector (0,0,0,0,0,v1,v2,v3,0).
Vec9 janhunen_vector(const State& u);

/// theta = w^T phi = 2 beta (v.B).
double theta(const State& u, double gamma);

/// Entropy flux potential split into hydrodynamic, magnetic and psi parts;
/// the three sum to w^T f^a - v_n S + theta B_n.
struct FluxPotentials {
  double euler = 0.0;
  double mhd = 0.0;
  double glm = 0.0;

  double total() const { return euler + mhd + glm; }
};

FluxPotentials entropy_flux_potentials(const State& u, double gamma, double c_h, int direction);

}  // namespace esdg

#endif
