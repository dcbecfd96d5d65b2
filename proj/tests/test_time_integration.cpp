#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "esdgmhd/scenarios.hpp"
#include "esdgmhd/time_integration.hpp"

using namespace esdg;

namespace {

// expand the low-storage recurrence into dense Butcher arrays; an independent
// path through the coefficient algebra
struct Butcher {
  double a[5][5]{};
  double b[5]{};
  double c[5]{};
};

Butcher expand_butcher() {
  Butcher bt;
  double du_coef[5]{};
  double u_coef[5]{};
  for (int stage = 0; stage < 5; ++stage) {
    for (int j = 0; j < 5; ++j) bt.a[stage][j] = u_coef[j];
    for (int j = 0; j < 5; ++j) du_coef[j] *= kLsrk4A[stage];
    du_coef[stage] += 1.0;
    for (int j = 0; j < 5; ++j) u_coef[j] += kLsrk4B[stage] * du_coef[j];
  }
  for (int j = 0; j < 5; ++j) bt.b[j] = u_coef[j];
  for (int s = 0; s < 5; ++s) {
    bt.c[s] = 0.0;
    for (int j = 0; j < 5; ++j) bt.c[s] += bt.a[s][j];
  }
  return bt;
}

// one-element "field" wrapping a scalar ODE
NodalField scalar_field(double v) {
  NodalField f(1, 1, 1);
  f.data()[0] = v;
  return f;
}

}  // namespace

TEST_CASE("the hard-coded coefficients satisfy the 4th-order conditions") {
  const Butcher bt = expand_butcher();
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
  for (int i = 0; i < 5; ++i) {
    s1 += bt.b[i];
    s2 += bt.b[i] * bt.c[i];
    s3 += bt.b[i] * bt.c[i] * bt.c[i];
    s4 += bt.b[i] * bt.c[i] * bt.c[i] * bt.c[i];
    for (int j = 0; j < 5; ++j) s5 += bt.b[i] * bt.a[i][j] * bt.c[j];
    CHECK(std::abs(bt.c[i] - kLsrk4C[i]) < 1e-14);
  }
  CHECK(std::abs(s1 - 1.0) < 1e-14);
  CHECK(std::abs(s2 - 0.5) < 1e-14);
  CHECK(std::abs(s3 - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(s4 - 0.25) < 1e-14);
  CHECK(std::abs(s5 - 1.0 / 6.0) < 1e-14);
}

TEST_CASE("scalar decay shows fourth order (Richardson)") {
  auto solve = [](double dt) {
    NodalField u = scalar_field(1.0);
    NodalField du(1, 1, 1), k(1, 1, 1);
    const RhsFn f = [](const NodalField& y, double, NodalField& out) {
      out.data()[0] = -y.data()[0];
    };
    double t = 0.0;
    const long steps = std::lround(1.0 / dt);
    for (long s = 0; s < steps; ++s) {
      lsrk4_step(u, t, dt, f, du, k);
      t += dt;
    }
    return u.data()[0];
  };
  const double exact = std::exp(-1.0);
  const double e1 = std::abs(solve(0.05) - exact);
  const double e2 = std::abs(solve(0.025) - exact);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.9);
}

TEST_CASE("zero rhs keeps the field bitwise unchanged") {
  NodalField u(2, 3, 9);
  for (size_t m = 0; m < u.size(); ++m) u.data()[m] = 0.1 * static_cast<double>(m) - 3.7;
  const std::vector<double> before(u.data(), u.data() + u.size());
  NodalField du(2, 3, 9), k(2, 3, 9);
  lsrk4_step(u, 0.0, 0.123, [](const NodalField&, double, NodalField& out) { out.fill(0.0); }, du,
             k);
  for (size_t m = 0; m < u.size(); ++m) CHECK(u.data()[m] == before[m]);
}

TEST_CASE("one step matches the dense Butcher evaluation on a linear system") {
  const Butcher bt = expand_butcher();
  const double dt = 0.37;
  const double m[2][2] = {{-0.4, 1.3}, {-0.9, 0.1}};
  const double u0[2] = {0.8, -0.5};

  // butcher-form reference
  double kst[5][2];
  for (int s = 0; s < 5; ++s) {
    double y[2] = {u0[0], u0[1]};
    for (int j = 0; j < s; ++j) {
      for (int c = 0; c < 2; ++c) y[c] += dt * bt.a[s][j] * kst[j][c];
    }
    for (int c = 0; c < 2; ++c) kst[s][c] = m[c][0] * y[0] + m[c][1] * y[1];
  }
  double ref[2] = {u0[0], u0[1]};
  for (int s = 0; s < 5; ++s) {
    for (int c = 0; c < 2; ++c) ref[c] += dt * bt.b[s] * kst[s][c];
  }

  NodalField u(1, 1, 2);
  u.data()[0] = u0[0];
  u.data()[1] = u0[1];
  NodalField du(1, 1, 2), k(1, 1, 2);
  lsrk4_step(u, 0.0, dt,
             [&](const NodalField& y, double, NodalField& out) {
               out.data()[0] = m[0][0] * y.data()[0] + m[0][1] * y.data()[1];
               out.data()[1] = m[1][0] * y.data()[0] + m[1][1] * y.data()[1];
             },
             du, k);
  CHECK(std::abs(u.data()[0] - ref[0]) < 1e-14);
  CHECK(std::abs(u.data()[1] - ref[1]) < 1e-14);
}

TEST_CASE("time step selection") {
  const auto ops = build_sbp_operators(3);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 10, 10, ops);
  {
    // uniform state engineered so the material bound is exactly 2
    GasConfig gas;
    gas.gamma = 5.0 / 3.0;
    NodalField u(mesh.num_elements(), 4, 9);
    const State s = State::from_prim(1.0, {0, 0, 0}, 4.0 / gas.gamma, {0, 0, 0}, 0.0, gas.gamma);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) u.set_state(e, i, j, s);
      }
    }
    TimeControls controls;
    controls.cfl = 0.5;
    controls.t_final = 1.0;
    const DtInfo info = compute_dt(u, mesh, gas, controls, true, 0.0);
    CHECK(info.c_h == doctest::Approx(2.0).epsilon(1e-12));
    // inviscid: dt is the advective bound cfl/lambda * dx/(2N+1)
    CHECK(info.dt == doctest::Approx(0.5 / 2.0 * 0.1 / 7.0).epsilon(1e-12));

    const DtInfo noglm = compute_dt(u, mesh, gas, controls, false, 0.0);
    CHECK(noglm.c_h == 0.0);
    CHECK(noglm.dt == info.dt);  // lambda_a is still the material bound
  }
  {
    // dt is the minimum of the advective and viscous bounds, each evaluated
    // here independently; with the resistive test coefficients the momentum
    // rate is 4 mu / (3 rho) = 1.1333e-3 but the thermal rate
    // kappa (gamma-1) / (rho R) = mu gamma / (rho Pr) is the largest
    GasConfig gas;
    gas.gamma = 5.0 / 3.0;
    gas.prandtl = 0.72;
    gas.mu = 8.5e-4;
    gas.eta = 1e-5;
    NodalField u(mesh.num_elements(), 4, 9);
    const State s = State::from_prim(1.0, {0, 0, 0}, 1.0, {0, 0, 0}, 0.0, gas.gamma);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) u.set_state(e, i, j, s);
      }
    }
    const double rate_momentum = 4.0 * gas.mu / 3.0;
    const double rate_magnetic = gas.eta;
    const double rate_thermal = gas.kappa() * (gas.gamma - 1.0) / gas.rgas;
    CHECK(rate_momentum == doctest::Approx(1.1333333333e-3).epsilon(1e-9));
    CHECK(rate_thermal == doctest::Approx(gas.mu * gas.gamma / gas.prandtl).epsilon(1e-13));
    const double lambda_v = std::max({rate_momentum, rate_magnetic, rate_thermal});
    const double lambda_a = std::sqrt(gas.gamma);  // sound speed of the unit state
    TimeControls controls;
    controls.t_final = 1.0;
    const DtInfo info = compute_dt(u, mesh, gas, controls, true, 0.0);
    const double h = 0.1 / 7.0;
    const double expected = std::min(0.5 / lambda_a * h, 0.5 / lambda_v * h * h);
    CHECK(info.dt == doctest::Approx(expected).epsilon(1e-12));

    // a large viscosity makes the parabolic bound bind
    GasConfig thick = gas;
    thick.mu = 10.0;
    const double lv2 = std::max({4.0 * thick.mu / 3.0, thick.eta,
                                 thick.kappa() * (thick.gamma - 1.0) / thick.rgas});
    const DtInfo info2 = compute_dt(u, mesh, thick, controls, true, 0.0);
    CHECK(info2.dt == doctest::Approx(0.5 / lv2 * h * h).epsilon(1e-12));
    CHECK(info2.dt < 0.5 / lambda_a * h);
  }
  {
    // the last step lands exactly on t_final
    GasConfig gas;
    gas.gamma = 1.4;
    NodalField u(mesh.num_elements(), 4, 9);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          u.set_state(e, i, j, State::from_prim(1, {0, 0, 0}, 1, {0, 0, 0}, 0, 1.4));
        }
      }
    }
    TimeControls controls;
    controls.t_final = 1e-4;
    const DtInfo info = compute_dt(u, mesh, gas, controls, true, 0.0);
    CHECK(info.dt <= 1e-4 + 1e-15);
    const DtInfo fixed = compute_dt(u, mesh, gas, {0.5, 0.5, 1.0, 100, 0.25}, true, 0.9);
    CHECK(fixed.dt == doctest::Approx(0.1).epsilon(1e-12));
  }
}

TEST_CASE("run: zero steps at t_final = 0, smooth run, and blow-up reporting") {
  const auto ops = build_sbp_operators(2);
  const Scenario sc = orszag_tang_scenario();
  const auto mesh = build_mesh(sc.bounds, 4, 4, ops);
  ThreadPool pool(2);
  {
    SolutionField f = sample_initial_condition(sc, mesh);
    TimeControls controls;
    controls.t_final = 0.0;
    long calls = 0;
    const RunResult r = run(f, mesh, ops, sc.gas, SchemeMode{}, controls,
                            [&](long, double, double, const NodalField&) { ++calls; }, pool);
    CHECK(r.steps == 0);
    CHECK_FALSE(r.blew_up);
    CHECK(calls == 1);  // the initial record
  }
  {
    SolutionField f = sample_initial_condition(sc, mesh);
    TimeControls controls;
    controls.t_final = 5e-3;
    const RunResult r = run(f, mesh, ops, sc.gas, SchemeMode{}, controls, nullptr, pool);
    CHECK_FALSE(r.blew_up);
    CHECK(f.time == doctest::Approx(5e-3).epsilon(1e-12));
    CHECK(r.steps > 0);
  }
  {
    // drain energy until the pressure turns negative
    SolutionField f = sample_initial_condition(sc, mesh);
    SchemeMode mode;
    mode.source = [](double, double, double) {
      Vec9 s{};
      s[kEnergy] = -200.0;
      return s;
    };
    TimeControls controls;
    controls.t_final = 1.0;
    controls.max_steps = 10000;
    const RunResult r = run(f, mesh, ops, sc.gas, mode, controls, nullptr, pool);
    CHECK(r.blew_up);
    CHECK(r.report.element >= 0);
    CHECK(r.report.min_pressure <= 0.0);
    CHECK(r.report.time <= 1.0);
  }
}
