#ifndef ESDGMHD_TEST_SUPPORT_HPP
#define ESDGMHD_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "esdgmhd/field.hpp"
#include "esdgmhd/mesh.hpp"
#include "esdgmhd/state.hpp"

namespace esdg::test {

struct Rng {
  std::mt19937_64 gen;

  explicit Rng(uint64_t seed) : gen(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }
};

inline State random_state(Rng& rng, double gamma) {
  const double rho = rng.uniform(0.1, 3.0);
  const double p = rng.uniform(0.05, 3.0);
  return State::from_prim(rho,
                          {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)},
                          p,
                          {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)},
                          rng.uniform(-1.0, 1.0), gamma);
}

/// Smooth periodic primitive fields from a few low Fourier modes, with the
/// amplitudes kept small enough that density and pressure stay positive.
struct SmoothField {
  struct Mode {
    int kx, ky;
    double amp, phase;
  };
  std::vector<Mode> modes[8];  // rho, v1, v2, v3, p, B1, B2, B3 perturbations
  double psi_amp = 0.0;
  double lx = 1.0, ly = 1.0;
  double x0 = 0.0, y0 = 0.0;

  static SmoothField random(Rng& rng, const DomainBounds& bounds) {
    SmoothField f;
    f.lx = bounds.x1 - bounds.x0;
    f.ly = bounds.y1 - bounds.y0;
    f.x0 = bounds.x0;
    f.y0 = bounds.y0;
    const int wavenumbers[4][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    for (int c = 0; c < 8; ++c) {
      for (const auto& k : wavenumbers) {
        f.modes[c].push_back({k[0], k[1], rng.uniform(-0.08, 0.08), rng.uniform(0.0, 2.0 * M_PI)});
      }
    }
    f.psi_amp = rng.uniform(-0.1, 0.1);
    return f;
  }

  double eval(int c, double x, double y) const {
    double s = 0.0;
    for (const auto& m : modes[c]) {
      s += m.amp * std::sin(2.0 * M_PI * (m.kx * (x - x0) / lx + m.ky * (y - y0) / ly) + m.phase);
    }
    return s;
  }

  State state(double x, double y, double gamma) const {
    const double rho = 1.2 + eval(0, x, y);
    const double p = 1.0 + eval(4, x, y);
    const double psi =
        psi_amp * std::sin(2.0 * M_PI * ((x - x0) / lx + (y - y0) / ly));
    return State::from_prim(rho, {eval(1, x, y), eval(2, x, y), eval(3, x, y)}, p,
                            {eval(5, x, y), eval(6, x, y), eval(7, x, y)}, psi, gamma);
  }
};

inline NodalField sample_smooth_field(const SmoothField& f, const CartesianMesh& mesh,
                                      double gamma) {
  NodalField u(mesh.num_elements(), mesh.n1(), 9);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < mesh.n1(); ++i) {
      for (int j = 0; j < mesh.n1(); ++j) {
        u.set_state(e, i, j, f.state(mesh.x(e, i, j), mesh.y(e, i, j), gamma));
      }
    }
  }
  return u;
}

/// Jacobi eigenvalue iteration for small symmetric matrices; good enough for
/// the 27x27 diffusion matrix spectra used in the tests.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace esdg::test

#endif
