#include "esdgmhd/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "esdgmhd/state.hpp"

namespace esdg {

double total_entropy(const NodalField& u, const CartesianMesh& mesh, const SbpOperators& ops,
                     double gamma) {
  const int n1 = ops.order + 1;
  double total = 0.0;
  for (int e = 0; e < u.elements(); ++e) {
    double elem = 0.0;
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        elem += ops.weights[i] * ops.weights[j] * entropy_density(u.state_at(e, i, j), gamma);
      }
    }
    total += mesh.jacobian * elem;
  }
  return total;
}

double divergence_error_raw(const NodalField& u, const CartesianMesh& mesh,
                            const SbpOperators& ops) {
  const int n1 = ops.order + 1;
  const Matrix& d = ops.dmat;
  const double scale = 2.0 / mesh.dx;
  double total = 0.0;
  for (int e = 0; e < u.elements(); ++e) {
    double elem = 0.0;
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        double div = 0.0;
        for (int m = 0; m < n1; ++m) {
          div += d(i, m) * u.node(e, m, j)[kMagX] + d(j, m) * u.node(e, i, m)[kMagY];
        }
        div *= scale;
        elem += ops.weights[i] * ops.weights[j] * div * div;
      }
    }
    total += mesh.jacobian * elem;
  }
  return std::sqrt(total);
}

double conserved_total(const NodalField& u, const CartesianMesh& mesh, const SbpOperators& ops,
                       int comp) {
  const int n1 = ops.order + 1;
  double total = 0.0;
  for (int e = 0; e < u.elements(); ++e) {
    double elem = 0.0;
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        elem += ops.weights[i] * ops.weights[j] * u.node(e, i, j)[comp];
      }
    }
    total += mesh.jacobian * elem;
  }
  return total;
}

AdmissibilityScan scan_admissibility(const NodalField& u, double gamma) {
  AdmissibilityScan scan;
  scan.min_density = std::numeric_limits<double>::infinity();
  scan.min_pressure = std::numeric_limits<double>::infinity();
  const int n1 = u.n1();
  for (int e = 0; e < u.elements(); ++e) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        const State s = u.state_at(e, i, j);
        const double p = pressure(s, gamma);
        if (!std::isfinite(s.rho) || !std::isfinite(p)) {
          scan.finite = false;
          scan.argmin_element = e;
          scan.min_density = s.rho;
          scan.min_pressure = p;
          return scan;
        }
        if (s.rho < scan.min_density || p < scan.min_pressure) {
          scan.argmin_element = e;
        }
        scan.min_density = std::min(scan.min_density, s.rho);
        scan.min_pressure = std::min(scan.min_pressure, p);
      }
    }
  }
  return scan;
}

std::array<double, 9> l2_error(const NodalField& u, const CartesianMesh& mesh,
                               const SbpOperators& ops, double gamma,
                               const std::function<State(double, double, double)>& reference,
                               double t) {
  const int n1 = ops.order + 1;
  std::array<double, 9> acc{};
  auto prim = [gamma](const State& s) -> std::array<double, 9> {
    return {s.rho, s.vel(0), s.vel(1), s.vel(2), pressure(s, gamma),
            s.mag[0], s.mag[1], s.mag[2], s.psi};
  };
  for (int e = 0; e < u.elements(); ++e) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        const std::array<double, 9> a = prim(u.state_at(e, i, j));
        const std::array<double, 9> b = prim(reference(mesh.x(e, i, j), mesh.y(e, i, j), t));
        const double ww = mesh.jacobian * ops.weights[i] * ops.weights[j];
        for (int c = 0; c < 9; ++c) {
          const double diff = a[c] - b[c];
          acc[c] += ww * diff * diff;
        }
      }
    }
  }
  for (double& v : acc) v = std::sqrt(v);
  return acc;
}

EocResult eoc(const std::vector<std::pair<double, double>>& levels) {
  if (levels.size() < 2) throw std::invalid_argument("eoc: need at least two levels");
  EocResult r;
  for (size_t k = 1; k < levels.size(); ++k) {
    const auto& [h1, e1] = levels[k - 1];
    const auto& [h2, e2] = levels[k];
    if (!(e1 > 0.0) || !(e2 > 0.0)) throw std::invalid_argument("eoc: errors must be positive");
    r.orders.push_back(std::log(e1 / e2) / std::log(h1 / h2));
  }
  for (double o : r.orders) r.average += o;
  r.average /= static_cast<double>(r.orders.size());
  return r;
}

DiagnosticsRecord DiagnosticsCollector::collect(long step, double t, double dt,
                                                const NodalField& u) {
  DiagnosticsRecord rec;
  rec.step = step;
  rec.time = t;
  rec.dt = dt;
  rec.total_entropy = total_entropy(u, mesh_, ops_, gamma_);
  rec.divb_l2 = divergence_error_raw(u, mesh_, ops_);
  divb_max_ = std::max(divb_max_, rec.divb_l2);
  rec.divb_l2_normalized = divb_max_ > 0.0 ? rec.divb_l2 / divb_max_ : 0.0;
  rec.mass_total = conserved_total(u, mesh_, ops_, kRho);
  rec.energy_total = conserved_total(u, mesh_, ops_, kEnergy);
  const AdmissibilityScan scan = scan_admissibility(u, gamma_);
  rec.min_density = scan.min_density;
  rec.min_pressure = scan.min_pressure;
  return rec;
}

}  // namespace esdg
