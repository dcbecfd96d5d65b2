#include "esdgmhd/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace esdg {

namespace {

// manufactured profile h = sin(2 pi (x+y) - 4 t) + 4 and its derivatives
struct Profile {
  double h, ht, hx, hxx;
};

Profile mms_profile(double x, double y, double t) {
  const double phase = 2.0 * M_PI * (x + y) - 4.0 * t;
  const double s = std::sin(phase), c = std::cos(phase);
  return {s + 4.0, -4.0 * c, 2.0 * M_PI * c, -4.0 * M_PI * M_PI * s};
}

}  // namespace

Scenario mms_scenario() {
  Scenario sc;
  sc.name = "mms";
  sc.bounds = {0.0, 1.0, 0.0, 1.0};
  sc.gas.gamma = 2.0;
  sc.gas.prandtl = 0.72;
  sc.gas.mu = 0.05;
  sc.gas.eta = 0.05;
  sc.default_t_final = 0.5;
  const double gamma = sc.gas.gamma;
  sc.reference = [gamma](double x, double y, double t) -> State {
    const double h = mms_profile(x, y, t).h;
    State u;
    u.rho = h;
    u.mom = {h, h, 0.0};
    u.energy = 2.0 * h * h;
    u.mag = {h, -h, 0.0};
    u.psi = 0.0;
    return u;
  };
  sc.initializer = [ref = sc.reference](double x, double y) { return ref(x, y, 0.0); };
  const double mu = sc.gas.mu, eta = sc.gas.eta, pr = sc.gas.prandtl;
  // source from substituting the profile into the governing equations; the
  // velocity is constant (1,1,0), so all stress terms drop and only heat
  // conduction and resistivity contribute to the viscous part. h depends on
  // x and y through x+y, so y-derivatives duplicate the x ones.
  sc.source = [mu, eta, pr](double x, double y, double t) -> Vec9 {
    const Profile q = mms_profile(x, y, t);
    Vec9 s{};
    s[kRho] = q.ht + 2.0 * q.hx;
    s[kMomX] = q.ht + q.hx + 4.0 * q.h * q.hx;
    s[kMomY] = s[kMomX];
    s[kEnergy] = 4.0 * q.h * q.ht + 16.0 * q.h * q.hx - 2.0 * q.hx -
                 4.0 * eta * (q.hx * q.hx + q.h * q.hxx) - 4.0 * mu * q.hxx / pr;
    s[kMagX] = q.ht + 2.0 * q.hx - 2.0 * eta * q.hxx;
    s[kMagY] = -s[kMagX];
    return s;
  };
  return sc;
}

Scenario shock_tube_scenario() {
  Scenario sc;
  sc.name = "shock_tube";
  sc.bounds = {0.0, 1.0, 0.0, 1.0};
  sc.gas.gamma = 5.0 / 3.0;
  sc.default_t_final = 0.5;
  const double gamma = sc.gas.gamma;
  const double b = 1.0 / std::sqrt(4.0 * M_PI);
  sc.initializer = [gamma, b](double x, double y) -> State {
    if (x < y) {
      return State::from_prim(1.0, {0.0, 0.0, 0.0}, 1.0, {2.0 * b, 4.0 * b, 2.0 * b}, 0.0, gamma);
    }
    // the diagonal x == y belongs to the right state
    return State::from_prim(1.08, {0.6, 0.01, 0.5}, 0.95, {2.0 * b, 3.6 * b, 2.0 * b}, 0.0, gamma);
  };
  return sc;
}

Scenario gaussian_pulse_scenario() {
  Scenario sc;
  sc.name = "gaussian_pulse";
  sc.bounds = {-1.0, 1.0, -1.0, 1.0};
  sc.gas.gamma = 5.0 / 3.0;
  sc.default_t_final = 1.0;
  const double gamma = sc.gas.gamma;
  sc.initializer = [gamma](double x, double y) -> State {
    State u;
    u.rho = 1.0;
    u.energy = 6.0;
    u.mag = {std::exp(-0.5 * (x * x + y * y) / (0.11 * 0.11)), 0.0, 0.0};
    return u;
  };
  return sc;
}

Scenario orszag_tang_scenario() {
  Scenario sc;
  sc.name = "orszag_tang";
  sc.bounds = {0.0, 1.0, 0.0, 1.0};
  sc.gas.gamma = 5.0 / 3.0;
  sc.gas.prandtl = 0.72;
  sc.gas.mu = 8.5e-4;
  sc.gas.eta = 1.0e-5;
  sc.default_t_final = 0.5;
  const double gamma = sc.gas.gamma;
  sc.initializer = [gamma](double x, double y) -> State {
    const double ig = 1.0 / gamma;
    return State::from_prim(1.0, {-std::sin(2.0 * M_PI * y), std::sin(2.0 * M_PI * x), 0.0}, ig,
                            {-ig * std::sin(2.0 * M_PI * y), ig * std::sin(4.0 * M_PI * x), 0.0},
                            0.0, gamma);
  };
  return sc;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"mms", "shock_tube", "gaussian_pulse",
                                                 "orszag_tang"};
  return names;
}

Scenario find_scenario(const std::string& name) {
  if (name == "mms") return mms_scenario();
  if (name == "shock_tube") return shock_tube_scenario();
  if (name == "gaussian_pulse") return gaussian_pulse_scenario();
  if (name == "orszag_tang") return orszag_tang_scenario();
  throw std::invalid_argument("unknown scenario: " + name);
}

SolutionField sample_initial_condition(const Scenario& scenario, const CartesianMesh& mesh) {
  SolutionField field;
  field.u = NodalField(mesh.num_elements(), mesh.n1(), 9);
  field.time = 0.0;
  const int n1 = mesh.n1();
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        field.u.set_state(e, i, j, scenario.initializer(mesh.x(e, i, j), mesh.y(e, i, j)));
      }
    }
  }
  return field;
}

}  // namespace esdg
