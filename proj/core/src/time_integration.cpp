#include "esdgmhd/time_integration.hpp"

#include <cmath>
#include <stdexcept>

#include "esdgmhd/diagnostics.hpp"

namespace esdg {

const std::array<double, 5> kLsrk4A = {
    0.0,
    -567301805773.0 / 1357537059087.0,
    -2404267990393.0 / 2016746695238.0,
    -3550918686646.0 / 2091501179385.0,
    -1275806237668.0 / 842570457699.0,
};
const std::array<double, 5> kLsrk4B = {
    1432997174477.0 / 9575080441755.0,
    5161836677717.0 / 13612068292357.0,
    1720146321549.0 / 2090206949498.0,
    3134564353537.0 / 4481467310338.0,
    2277821191437.0 / 14882151754819.0,
};
const std::array<double, 5> kLsrk4C = {
    0.0,
    1432997174477.0 / 9575080441755.0,
    2526269341429.0 / 6820363962896.0,
    2006345519317.0 / 3224310063776.0,
    2802321613138.0 / 2924317926251.0,
};

DtInfo compute_dt(const NodalField& u, const CartesianMesh& mesh, const GasConfig& gas,
                  const TimeControls& controls, bool glm, double t) {
  const int n1 = u.n1();
  double material_max = 0.0;
  double lambda_v = 0.0;
  const double kappa_rate_coeff = gas.kappa() * (gas.gamma - 1.0) / gas.rgas;
  for (int e = 0; e < u.elements(); ++e) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        const State s = u.state_at(e, i, j);
        material_max = std::max(material_max, max_wave_speed_bound(s, gas.gamma));
        const double dv = std::max(4.0 * gas.mu / (3.0 * s.rho),
                                   std::max(gas.eta, kappa_rate_coeff / s.rho));
        lambda_v = std::max(lambda_v, dv);
      }
    }
  }
  if (!std::isfinite(material_max)) {
    throw std::runtime_error("compute_dt: non-finite wave speed");
  }
  DtInfo info;
  info.c_h = glm ? material_max : 0.0;
  const double lambda_a = std::max(material_max, info.c_h);

  double dt;
  if (controls.fixed_dt > 0.0) {
    dt = controls.fixed_dt;
  } else {
    const double h = mesh.dx / (2.0 * mesh.order + 1.0);
    dt = controls.cfl / lambda_a * h;
    if (lambda_v > 0.0) dt = std::min(dt, controls.dfl / lambda_v * h * h);
  }
  if (t + dt > controls.t_final) dt = controls.t_final - t;
  info.dt = dt;
  return info;
}

void lsrk4_step(NodalField& u, double t, double dt, const RhsFn& rhs_fn, NodalField& du,
                NodalField& k) {
  const size_t n = u.size();
  du.fill(0.0);
  for (int stage = 0; stage < 5; ++stage) {
    rhs_fn(u, t + kLsrk4C[stage] * dt, k);
    const double a = kLsrk4A[stage];
    const double b = kLsrk4B[stage];
    double* dup = du.data();
    double* up = u.data();
    const double* kp = k.data();
    for (size_t m = 0; m < n; ++m) {
      dup[m] = a * dup[m] + dt * kp[m];
      up[m] += b * dup[m];
    }
  }
}

RunResult run(SolutionField& field, const CartesianMesh& mesh, const SbpOperators& ops,
              const GasConfig& gas, const SchemeMode& mode, const TimeControls& controls,
              const StepCallback& on_step, const ThreadPool& pool) {
  RunResult result;
  RhsWorkspace ws;
  NodalField du(field.u.elements(), field.u.n1(), 9);
  NodalField k(field.u.elements(), field.u.n1(), 9);

  auto check = [&](long step) -> bool {
    const AdmissibilityScan scan = scan_admissibility(field.u, gas.gamma);
    if (!scan.finite || !(scan.min_density > 0.0) || !(scan.min_pressure > 0.0)) {
      result.blew_up = true;
      result.report = {step, field.time, scan.argmin_element, scan.min_density,
                       scan.min_pressure};
      return false;
    }
    return true;
  };

  if (!check(0)) return result;
  if (on_step) on_step(0, field.time, 0.0, field.u);

  double frozen_ch = 0.0;
  const RhsFn rhs_fn = [&](const NodalField& u, double t, NodalField& dudt) {
    rhs(u, t, mesh, ops, gas, mode, frozen_ch, dudt, ws, pool);
  };

  while (field.time < controls.t_final - 1e-12 && result.steps < controls.max_steps) {
    DtInfo dti;
    try {
      dti = compute_dt(field.u, mesh, gas, controls, mode.glm, field.time);
      frozen_ch = dti.c_h;
      lsrk4_step(field.u, field.time, dti.dt, rhs_fn, du, k);
    } catch (const std::domain_error&) {
      // an inadmissible state was hit inside a stage
      const AdmissibilityScan scan = scan_admissibility(field.u, gas.gamma);
      result.blew_up = true;
      result.report = {result.steps + 1, field.time, scan.argmin_element, scan.min_density,
                       scan.min_pressure};
      return result;
    }
    field.time += dti.dt;
    ++result.steps;
    if (!check(result.steps)) return result;
    if (on_step) on_step(result.steps, field.time, dti.dt, field.u);
  }
  result.time = field.time;
  return result;
}

}  // namespace esdg
