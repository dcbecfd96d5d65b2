#ifndef ESDGMHD_DIAGNOSTICS_HPP
#define ESDGMHD_DIAGNOSTICS_HPP

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "esdgmhd/field.hpp"
#include "esdgmhd/mesh.hpp"
#include "esdgmhd/sbp.hpp"

namespace esdg {

/// sum_k J sum_ij w_i w_j S(U_ij)
double total_entropy(const NodalField& u, const CartesianMesh& mesh, const SbpOperators& ops,
                     double gamma);

/// || div B ||_L2 with the element-local standard DG derivative.
double divergence_error_raw(const NodalField& u, const CartesianMesh& mesh,
                            const SbpOperators& ops);

/// Quadrature total of one conserved component.
double conserved_total(const NodalField& u, const CartesianMesh& mesh, const SbpOperators& ops,
                       int comp);

struct AdmissibilityScan {
  double min_density = 0.0;
  double min_pressure = 0.0;
  int argmin_element = -1;
  bool finite = true;
};
AdmissibilityScan scan_admissibility(const NodalField& u, double gamma);

/// Componentwise L2 errors against a reference solution, in primitive
/// variables ordered (rho, v1, v2, v3, p, B1, B2, B3, psi).
std::array<double, 9> l2_error(const NodalField& u, const CartesianMesh& mesh,
                               const SbpOperators& ops, double gamma,
                               const std::function<State(double, double, double)>& reference,
                               double t);

struct EocResult {
  std::vector<double> orders;  // between consecutive levels
  double average = 0.0;
};

/// Observed orders ln(e1/e2)/ln(h1/h2) for a list of (h, error) pairs.
/// Requires at least two levels and positive errors.
EocResult eoc(const std::vector<std::pair<double, double>>& levels);

struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  double dt = 0.0;
  double total_entropy = 0.0;
  double divb_l2 = 0.0;
  double divb_l2_normalized = 0.0;
  double mass_total = 0.0;
  double energy_total = 0.0;
  double min_density = 0.0;
  double min_pressure = 0.0;
};

/// Stateful collector: normalizes the divergence error by the running
/// maximum seen so far (the raw value is always reported alongside).
class DiagnosticsCollector {
 public:
  DiagnosticsCollector(const CartesianMesh& mesh, const SbpOperators& ops, double gamma)
      : mesh_(mesh), ops_(ops), gamma_(gamma) {}

  DiagnosticsRecord collect(long step, double t, double dt, const NodalField& u);

 private:
  const CartesianMesh& mesh_;
  const SbpOperators& ops_;
  double gamma_;
  double divb_max_ = 0.0;
};

}  // namespace esdg

#endif
