#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "esdgmhd/diagnostics.hpp"
#include "esdgmhd/state.hpp"

using namespace esdg;

namespace {

NodalField uniform_field(const CartesianMesh& mesh, const State& s) {
  NodalField u(mesh.num_elements(), mesh.n1(), 9);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < mesh.n1(); ++i) {
      for (int j = 0; j < mesh.n1(); ++j) u.set_state(e, i, j, s);
    }
  }
  return u;
}

}  // namespace

TEST_CASE("total entropy of uniform states") {
  const auto ops = build_sbp_operators(3);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 4, 4, ops);
  {
    const auto u = uniform_field(mesh, State::from_prim(1, {0, 0, 0}, 1, {0, 0, 0}, 0, 1.4));
    CHECK(std::abs(total_entropy(u, mesh, ops, 1.4)) < 1e-13);
  }
  {
    const auto u =
        uniform_field(mesh, State::from_prim(1, {0, 0, 0}, std::exp(1.0), {0, 0, 0}, 0, 2.0));
    CHECK(total_entropy(u, mesh, ops, 2.0) == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("total entropy integrates polynomial entropy data exactly") {
  // rho = 1 and p = exp(-(gamma-1) x^3 y^2) make S = x^3 y^2, degree <= 2N-1
  const double gamma = 1.4;
  const auto ops = build_sbp_operators(2);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 3, 3, ops);
  NodalField u(mesh.num_elements(), 3, 9);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double x = mesh.x(e, i, j), y = mesh.y(e, i, j);
        const double p = std::exp(-(gamma - 1.0) * x * x * x * y * y);
        u.set_state(e, i, j, State::from_prim(1.0, {0, 0, 0}, p, {0, 0, 0}, 0.0, gamma));
      }
    }
  }
  // integral of x^3 y^2 over the unit square
  CHECK(total_entropy(u, mesh, ops, gamma) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("divergence error") {
  const auto ops = build_sbp_operators(3);
  {
    const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 3, 3, ops);
    const auto u = uniform_field(mesh, State::from_prim(1, {0, 0, 0}, 1, {0.4, -0.2, 0.1}, 0, 1.4));
    CHECK(divergence_error_raw(u, mesh, ops) < 1e-13);
  }
  {
    // B = (y, x): solenoidal and exactly representable
    const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 1, 1, ops);
    NodalField u(1, 4, 9);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double x = mesh.x(0, i, j), y = mesh.y(0, i, j);
        u.set_state(0, i, j, State::from_prim(1.0, {0, 0, 0}, 1.0, {y, x, 0.0}, 0.0, 1.4));
      }
    }
    CHECK(divergence_error_raw(u, mesh, ops) < 1e-12);
  }
  {
    // B = (x, 0): div B = 1, so the L2 norm over the unit square is 1
    const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 1, 1, ops);
    NodalField u(1, 4, 9);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        u.set_state(0, i, j,
                    State::from_prim(1.0, {0, 0, 0}, 1.0, {mesh.x(0, i, j), 0.0, 0.0}, 0.0, 1.4));
      }
    }
    CHECK(divergence_error_raw(u, mesh, ops) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("l2 error vanishes when the field samples the reference") {
  const auto ops = build_sbp_operators(3);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 4, 4, ops);
  const double gamma = 1.4;
  auto ref = [gamma](double x, double y, double t) {
    return State::from_prim(1.0 + 0.3 * std::sin(x + y + t), {0.1 * x, -0.2 * y, 0.0},
                            0.8 + 0.1 * std::cos(x - y), {0.2 * y, 0.1 * x, 0.05}, 0.01, gamma);
  };
  NodalField u(mesh.num_elements(), 4, 9);
  const double t = 0.37;
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) u.set_state(e, i, j, ref(mesh.x(e, i, j), mesh.y(e, i, j), t));
    }
  }
  const auto err = l2_error(u, mesh, ops, gamma, ref, t);
  for (double v : err) CHECK(v < 1e-13);
}

TEST_CASE("observed convergence orders") {
  {
    const EocResult r = eoc({{1.0, 16.0}, {0.5, 1.0}});
    CHECK(r.orders.size() == 1);
    CHECK(r.orders[0] == doctest::Approx(4.0).epsilon(1e-13));
  }
  {
    // the N=3 manufactured-solution density column
    const EocResult r =
        eoc({{0.2, 3.45e-3}, {0.1, 2.28e-4}, {0.05, 1.48e-5}, {0.025, 8.25e-7}});
    CHECK(r.average == doctest::Approx(4.01).epsilon(2e-3));
  }
  {
    // the N=4 density column
    const EocResult r =
        eoc({{0.2, 1.87e-4}, {0.1, 5.38e-6}, {0.05, 1.98e-7}, {0.025, 7.66e-9}});
    CHECK(r.average == doctest::Approx(4.86).epsilon(2e-3));
  }
  CHECK_THROWS_AS(eoc({{1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(eoc({{1.0, 1.0}, {0.5, 0.0}}), std::invalid_argument);
}

TEST_CASE("admissibility scan flags the offending element") {
  const auto ops = build_sbp_operators(2);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 3, 3, ops);
  auto u = uniform_field(mesh, State::from_prim(1.0, {0, 0, 0}, 1.0, {0, 0, 0}, 0.0, 1.4));
  {
    const auto scan = scan_admissibility(u, 1.4);
    CHECK(scan.finite);
    CHECK(scan.min_density == doctest::Approx(1.0));
    CHECK(scan.min_pressure == doctest::Approx(1.0));
  }
  u.node(5, 1, 1)[kEnergy] = -0.5;  // negative pressure there
  {
    const auto scan = scan_admissibility(u, 1.4);
    CHECK(scan.min_pressure < 0.0);
    CHECK(scan.argmin_element == 5);
  }
  u.node(7, 0, 0)[kRho] = std::nan("");
  {
    const auto scan = scan_admissibility(u, 1.4);
    CHECK_FALSE(scan.finite);
    CHECK(scan.argmin_element == 7);
  }
}

TEST_CASE("collector normalizes the divergence error by its running maximum") {
  const auto ops = build_sbp_operators(2);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 2, 2, ops);
  DiagnosticsCollector collector(mesh, ops, 1.4);
  NodalField u(mesh.num_elements(), 3, 9);
  auto fill = [&](double slope) {
    for (int e = 0; e < mesh.num_elements(); ++e) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          u.set_state(e, i, j, State::from_prim(1.0, {0, 0, 0}, 1.0,
                                                {slope * mesh.x(e, i, j), 0.0, 0.0}, 0.0, 1.4));
        }
      }
    }
  };
  fill(2.0);
  const auto r1 = collector.collect(0, 0.0, 0.0, u);
  CHECK(r1.divb_l2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r1.divb_l2_normalized == doctest::Approx(1.0));
  fill(1.0);
  const auto r2 = collector.collect(1, 0.1, 0.1, u);
  CHECK(r2.divb_l2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r2.divb_l2_normalized == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r2.mass_total == doctest::Approx(1.0).epsilon(1e-12));
}
