// Command-line driver: single runs with CSV diagnostics, the manufactured
// convergence study, the fixed-dt entropy-conservation study, and the
// discrete-identity verification suite.

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "esdgmhd/diagnostics.hpp"
#include "esdgmhd/run_config.hpp"
#include "esdgmhd/scenarios.hpp"
#include "esdgmhd/time_integration.hpp"

using namespace esdg;

namespace {

int thread_count_from_env() {
  if (const char* env = std::getenv("ESDGMHD_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Problem {
  Scenario scenario;
  SbpOperators ops;
  CartesianMesh mesh;
  GasConfig gas;
  SchemeMode mode;
  TimeControls controls;
};

Problem assemble_problem(const RunConfig& cfg) {
  Problem p;
  p.scenario = find_scenario(cfg.scenario);
  p.ops = build_sbp_operators(cfg.order);
  p.mesh = build_mesh(p.scenario.bounds, cfg.kx, cfg.ky, p.ops);
  p.gas = p.scenario.gas;
  p.gas.alpha = cfg.alpha;
  p.mode.volume = cfg.volume;
  p.mode.surface = cfg.surface;
  p.mode.glm = cfg.glm;
  p.mode.source = p.scenario.source;
  p.controls.cfl = cfg.cfl;
  p.controls.dfl = cfg.dfl;
  p.controls.fixed_dt = cfg.fixed_dt;
  p.controls.t_final = cfg.t_final >= 0.0 ? cfg.t_final : p.scenario.default_t_final;
  if (cfg.max_steps > 0) p.controls.max_steps = cfg.max_steps;
  return p;
}

void write_diagnostics_row(std::FILE* f, const DiagnosticsRecord& r) {
  std::fprintf(f, "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.step, r.time,
               r.dt, r.total_entropy, r.divb_l2, r.divb_l2_normalized, r.mass_total,
               r.energy_total, r.min_density, r.min_pressure);
}

void dump_fields(const std::string& dir, long step, const NodalField& u,
                 const CartesianMesh& mesh, double gamma) {
  char name[64];
  std::snprintf(name, sizeof(name), "fields_%06ld.csv", step);
  const std::string path = dir + "/" + name;
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::fprintf(f, "x,y,rho,v1,v2,v3,p,B1,B2,B3,psi\n");
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < mesh.n1(); ++i) {
      for (int j = 0; j < mesh.n1(); ++j) {
        const State s = u.state_at(e, i, j);
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                     mesh.x(e, i, j), mesh.y(e, i, j), s.rho, s.vel(0), s.vel(1), s.vel(2),
                     pressure(s, gamma), s.mag[0], s.mag[1], s.mag[2], s.psi);
      }
    }
  }
  std::fclose(f);
}

void report_blowup(const BlowupReport& r) {
  std::fprintf(stderr,
               "blow-up: step=%ld time=%.12g element=%d min_density=%.6g min_pressure=%.6g\n",
               r.step, r.time, r.element, r.min_density, r.min_pressure);
}

int cmd_run(const RunConfig& cfg) {
  Problem p = assemble_problem(cfg);
  std::filesystem::create_directories(cfg.output_dir);
  SolutionField field = sample_initial_condition(p.scenario, p.mesh);
  ThreadPool pool(thread_count_from_env());

  const std::string diag_path = cfg.output_dir + "/diagnostics.csv";
  std::FILE* diag = std::fopen(diag_path.c_str(), "w");
  if (!diag) {
    std::fprintf(stderr, "cannot open %s\n", diag_path.c_str());
    return 1;
  }
  std::fprintf(diag,
               "step,time,dt,total_entropy,divB_l2,divB_l2_normalized,mass_total,"
               "energy_total,min_density,min_pressure\n");
  DiagnosticsCollector collector(p.mesh, p.ops, p.gas.gamma);
  const StepCallback on_step = [&](long step, double t, double dt, const NodalField& u) {
    write_diagnostics_row(diag, collector.collect(step, t, dt, u));
    if (cfg.dump_every > 0 && step % cfg.dump_every == 0) {
      dump_fields(cfg.output_dir, step, u, p.mesh, p.gas.gamma);
    }
  };

  const RunResult result = run(field, p.mesh, p.ops, p.gas, p.mode, p.controls, on_step, pool);
  std::fclose(diag);
  if (result.blew_up) {
    report_blowup(result.report);
    return 2;
  }
  if (cfg.dump_every > 0) dump_fields(cfg.output_dir, result.steps, field.u, p.mesh, p.gas.gamma);
  std::printf("completed: steps=%ld t=%.12g\n", result.steps, field.time);
  return 0;
}

int cmd_convergence(const RunConfig& cfg, const std::vector<int>& meshes) {
  RunConfig base = cfg;
  if (base.scenario.empty()) base.scenario = "mms";
  const Scenario probe = find_scenario(base.scenario);
  if (!probe.reference) {
    std::fprintf(stderr, "scenario '%s' has no reference solution\n", base.scenario.c_str());
    return 1;
  }
  std::filesystem::create_directories(cfg.output_dir);
  ThreadPool pool(thread_count_from_env());

  const char* labels[9] = {"rho", "v1", "v2", "v3", "p", "B1", "B2", "B3", "psi"};
  std::vector<double> hs;
  std::vector<std::array<double, 9>> errors;
  for (int k : meshes) {
    RunConfig level = base;
    level.kx = k;
    level.ky = k;
    Problem p = assemble_problem(level);
    SolutionField field = sample_initial_condition(p.scenario, p.mesh);
    const RunResult result = run(field, p.mesh, p.ops, p.gas, p.mode, p.controls, nullptr, pool);
    if (result.blew_up) {
      report_blowup(result.report);
      return 2;
    }
    hs.push_back(p.mesh.dx);
    errors.push_back(
        l2_error(field.u, p.mesh, p.ops, p.gas.gamma, p.scenario.reference, field.time));
    std::printf("k=%3d  dx=%-10.4g", k, p.mesh.dx);
    for (int c = 0; c < 9; ++c) std::printf("  %s=%.3e", labels[c], errors.back()[c]);
    std::printf("\n");
  }

  const std::string path = cfg.output_dir + "/eoc.csv";
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    std::fprintf(stderr, "cannot open %s\n", path.c_str());
    return 1;
  }
  std::fprintf(f, "h");
  for (const char* l : labels) std::fprintf(f, ",l2_%s", l);
  for (const char* l : labels) std::fprintf(f, ",eoc_%s", l);
  std::fprintf(f, "\n");
  for (size_t lev = 0; lev < hs.size(); ++lev) {
    std::fprintf(f, "%.17g", hs[lev]);
    for (int c = 0; c < 9; ++c) std::fprintf(f, ",%.17g", errors[lev][c]);
    for (int c = 0; c < 9; ++c) {
      if (lev == 0 || !(errors[lev][c] > 0.0) || !(errors[lev - 1][c] > 0.0)) {
        std::fprintf(f, ",");
      } else {
        std::fprintf(f, ",%.17g",
                     std::log(errors[lev - 1][c] / errors[lev][c]) / std::log(hs[lev - 1] / hs[lev]));
      }
    }
    std::fprintf(f, "\n");
  }
  // trailing averages row (h left empty)
  std::fprintf(f, "avg");
  for (int c = 0; c < 9; ++c) std::fprintf(f, ",");
  for (int c = 0; c < 9; ++c) {
    bool ok = hs.size() >= 2;
    for (size_t lev = 0; lev < hs.size(); ++lev) ok = ok && errors[lev][c] > 0.0;
    if (!ok) {
      std::fprintf(f, ",");
      continue;
    }
    std::vector<std::pair<double, double>> column;
    for (size_t lev = 0; lev < hs.size(); ++lev) column.emplace_back(hs[lev], errors[lev][c]);
    std::fprintf(f, ",%.17g", eoc(column).average);
  }
  std::fprintf(f, "\n");
  std::fclose(f);

  if (hs.size() >= 2) {
    std::printf("avg EOC:");
    for (int c = 0; c < 9; ++c) {
      bool ok = true;
      std::vector<std::pair<double, double>> column;
      for (size_t lev = 0; lev < hs.size(); ++lev) {
        ok = ok && errors[lev][c] > 0.0;
        column.emplace_back(hs[lev], errors[lev][c]);
      }
      if (ok) {
        std::printf("  %s=%.2f", labels[c], eoc(column).average);
      } else {
        std::printf("  %s=n/a", labels[c]);
      }
    }
    std::printf("\n");
  }
  return 0;
}

int cmd_cfl_study(const RunConfig& cfg, double dt0, int levels) {
  RunConfig base = cfg;
  if (base.scenario.empty()) base.scenario = "shock_tube";
  std::filesystem::create_directories(cfg.output_dir);
  ThreadPool pool(thread_count_from_env());

  const std::string path = cfg.output_dir + "/cfl_study.csv";
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    std::fprintf(stderr, "cannot open %s\n", path.c_str());
    return 1;
  }
  std::fprintf(f, "level,dt,entropy_initial,entropy_final,entropy_error,ratio\n");
  double previous = 0.0;
  for (int lev = 0; lev < levels; ++lev) {
    RunConfig level = base;
    level.fixed_dt = dt0 / std::pow(2.0, lev);
    Problem p = assemble_problem(level);
    SolutionField field = sample_initial_condition(p.scenario, p.mesh);
    const double s0 = total_entropy(field.u, p.mesh, p.ops, p.gas.gamma);
    const RunResult result = run(field, p.mesh, p.ops, p.gas, p.mode, p.controls, nullptr, pool);
    if (result.blew_up) {
      report_blowup(result.report);
      std::fclose(f);
      return 2;
    }
    const double s1 = total_entropy(field.u, p.mesh, p.ops, p.gas.gamma);
    const double err = std::abs(s1 - s0);
    const double ratio = (lev > 0 && err > 0.0) ? previous / err : 0.0;
    std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", lev, level.fixed_dt, s0, s1, err,
                 ratio);
    std::printf("level %d: dt=%.6g |S(T)-S(0)|=%.6e", lev, level.fixed_dt, err);
    if (lev > 0) std::printf("  ratio=%.2f", ratio);
    std::printf("\n");
    previous = err;
  }
  std::fclose(f);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: seeded random-data checks of the discrete identities

struct VerifyReport {
  int failures = 0;

  void check(const char* name, bool pass, double measured, double tolerance) {
    std::printf("%-42s %s   (measured %.3e, tolerance %.1e)\n", name, pass ? "PASS" : "FAIL",
                measured, tolerance);
    if (!pass) ++failures;
  }
};

State random_state(std::mt19937_64& gen, double gamma) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni = [&](double a, double b) { return a + (b - a) * u01(gen); };
  return State::from_prim(uni(0.1, 3.0), {uni(-2, 2), uni(-2, 2), uni(-2, 2)}, uni(0.05, 3.0),
                          {uni(-2, 2), uni(-2, 2), uni(-2, 2)}, uni(-1, 1), gamma);
}

// Jacobi iteration; plenty for the 27x27 diffusion matrices
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
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
        const double theta_pq = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        const double t = (theta_pq >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta_pq) + std::sqrt(theta_pq * theta_pq + 1.0));
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

NodalField random_field(std::mt19937_64& gen, const CartesianMesh& mesh, double gamma) {
  NodalField u(mesh.num_elements(), mesh.n1(), 9);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    for (int i = 0; i < mesh.n1(); ++i) {
      for (int j = 0; j < mesh.n1(); ++j) u.set_state(e, i, j, random_state(gen, gamma));
    }
  }
  return u;
}

double entropy_rate(const NodalField& u, const CartesianMesh& mesh, const SbpOperators& ops,
                    const GasConfig& gas, const SchemeMode& mode, double c_h, double* gross) {
  NodalField dudt(u.elements(), u.n1(), 9);
  RhsWorkspace ws;
  ThreadPool pool(1);
  rhs(u, 0.0, mesh, ops, gas, mode, c_h, dudt, ws, pool);
  double total = 0.0, scale = 0.0;
  for (int e = 0; e < u.elements(); ++e) {
    for (int i = 0; i < u.n1(); ++i) {
      for (int j = 0; j < u.n1(); ++j) {
        const Vec9 w = entropy_vars(u.state_at(e, i, j), gas.gamma).w;
        const double term = mesh.jacobian * ops.weights[i] * ops.weights[j] *
                            dot(w, dudt.vec_at(e, i, j));
        total += term;
        scale += std::abs(term);
      }
    }
  }
  if (gross) *gross = scale;
  return total;
}

int cmd_verify(uint64_t seed) {
  std::mt19937_64 gen(seed);
  VerifyReport report;
  const double gamma = 5.0 / 3.0;
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  {  // summation-by-parts identity
    double worst = 0.0;
    for (int n = 1; n <= 15; ++n) {
      const auto ops = build_sbp_operators(n);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          double b = 0.0;
          if (i == j && i == 0) b = -1.0;
          if (i == j && i == n) b = 1.0;
          worst = std::max(worst, std::abs(ops.qmat(i, j) + ops.qmat(j, i) - b));
        }
      }
    }
    report.check("sbp identity (N = 1..15)", worst <= 1e-12, worst, 1e-12);
  }
  {  // EC flux condition per direction
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const State a = random_state(gen, gamma);
      const State b = random_state(gen, gamma);
      const double c_h = 2.0 * u01(gen);
      for (auto dir : {Direction::X, Direction::Y}) {
        const int d = static_cast<int>(dir);
        const Vec9 wl = entropy_vars(a, gamma).w;
        const Vec9 wr = entropy_vars(b, gamma).w;
        Vec9 jw;
        for (int c = 0; c < 9; ++c) jw[c] = wr[c] - wl[c];
        const double lhs = dot(jw, ec_flux(a, b, gamma, c_h, dir));
        const double rhs_v = entropy_flux_potentials(b, gamma, c_h, d).total() -
                             entropy_flux_potentials(a, gamma, c_h, d).total() -
                             0.5 * (a.mag[d] + b.mag[d]) * (theta(b, gamma) - theta(a, gamma));
        worst = std::max(worst, std::abs(lhs - rhs_v) / std::max(1.0, std::abs(rhs_v)));
      }
    }
    report.check("ec flux entropy condition", worst <= 1e-11, worst, 1e-11);
  }
  {  // K-matrix block symmetry
    double worst = 0.0;
    GasConfig gas;
    gas.gamma = gamma;
    gas.mu = 0.7;
    gas.eta = 0.3;
    for (int it = 0; it < 200; ++it) {
      const KBlocks kb = k_blocks(entropy_vars(random_state(gen, gamma), gamma).w, gas);
      for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
          for (int d = 0; d < 3; ++d) {
            for (int e = 0; e < 3; ++e) {
              worst = std::max(worst, std::abs(kb.k[d][e][i][j] - kb.k[e][d][j][i]));
            }
          }
        }
      }
    }
    report.check("k-matrix symmetry", worst <= 1e-12, worst, 1e-12);
  }
  {  // resistive spectrum {0 x24, 2 eta p / rho, eta p (|B|^2+2)/rho x2}
    GasConfig gas;
    gas.gamma = gamma;
    gas.eta = 0.4;
    double worst = 0.0;
    for (int it = 0; it < 10; ++it) {
      const State s = random_state(gen, gamma);
      const KBlocks kb = k_blocks(entropy_vars(s, gamma).w, gas);
      std::vector<std::vector<double>> k27(27, std::vector<double>(27, 0.0));
      for (int bd = 0; bd < 3; ++bd) {
        for (int be = 0; be < 3; ++be) {
          for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 9; ++j) k27[bd * 9 + i][be * 9 + j] = kb.k[bd][be][i][j];
          }
        }
      }
      const std::vector<double> ev = symmetric_eigenvalues(std::move(k27));
      const double p = pressure(s, gamma);
      const double bsq = s.mag[0] * s.mag[0] + s.mag[1] * s.mag[1] + s.mag[2] * s.mag[2];
      std::vector<double> expected(27, 0.0);
      expected[24] = 2.0 * gas.eta * p / s.rho;
      expected[25] = expected[26] = gas.eta * p * (bsq + 2.0) / s.rho;
      std::sort(expected.begin(), expected.end());
      for (int m = 0; m < 27; ++m) {
        worst = std::max(worst, std::abs(ev[m] - expected[m]) / std::max(1.0, expected[m]));
      }
    }
    report.check("resistive spectrum and multiplicities", worst <= 1e-9, worst, 1e-9);
  }
  {  // two-path viscous flux equality in 2D
    GasConfig gas;
    gas.gamma = gamma;
    gas.mu = 0.7;
    gas.eta = 0.3;
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const State s = random_state(gen, gamma);
      const Vec9 w = entropy_vars(s, gamma).w;
      Vec9 wx, wy;
      for (int c = 0; c < 9; ++c) {
        wx[c] = 2.0 * u01(gen) - 1.0;
        wy[c] = 2.0 * u01(gen) - 1.0;
      }
      const auto [f1, f2] = viscous_flux(w, wx, wy, gas);
      // direct form from the converted primitive gradients
      std::array<std::array<double, 3>, 3> gv{}, gb{};
      std::array<double, 3> gt{};
      const double w5 = w[4];
      const Vec9* gws[2] = {&wx, &wy};
      for (int d = 0; d < 2; ++d) {
        for (int i = 0; i < 3; ++i) {
          gv[i][d] = -(*gws[d])[1 + i] / w5 + w[1 + i] * (*gws[d])[4] / (w5 * w5);
          gb[i][d] = -(*gws[d])[5 + i] / w5 + w[5 + i] * (*gws[d])[4] / (w5 * w5);
        }
        gt[d] = (*gws[d])[4] / (w5 * w5) / gas.rgas;
      }
      const std::array<double, 3> v = {s.vel(0), s.vel(1), s.vel(2)};
      const auto fd = viscous_flux_direct(v, s.mag, gv, gt, gb, gas);
      double scale = 1.0;
      for (int c = 0; c < 9; ++c) {
        scale = std::max({scale, std::abs(fd[0][c]), std::abs(fd[1][c])});
      }
      for (int c = 0; c < 9; ++c) {
        worst = std::max(worst, std::abs(f1[c] - fd[0][c]) / scale);
        worst = std::max(worst, std::abs(f2[c] - fd[1][c]) / scale);
      }
    }
    report.check("two-path viscous flux equality", worst <= 1e-10, worst, 1e-10);
  }

  const auto ops = build_sbp_operators(4);
  const auto mesh = build_mesh({0.0, 1.0, 0.0, 1.0}, 3, 3, ops);
  const int n1 = ops.order + 1;

  {  // GLM volume contraction vanishes per element
    const NodalField u = random_field(gen, mesh, gamma);
    const double c_h = 1.0 + u01(gen);
    double worst = 0.0;
    std::vector<Vec9> vol(n1 * n1);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      split_divergence_element(u, e, ops,
                               [&](const State& a, const State& b, Direction dir) {
                                 return ec_flux_split(a, b, gamma, c_h, dir).glm;
                               },
                               vol.data());
      double total = 0.0, gross = 1.0;
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
          const double term = ops.weights[i] * ops.weights[j] *
                              dot(entropy_vars(u.state_at(e, i, j), gamma).w, vol[i * n1 + j]);
          total += term;
          gross += std::abs(term);
        }
      }
      worst = std::max(worst, std::abs(total) / gross);
    }
    report.check("glm volume contraction", worst <= 1e-12, worst, 1e-12);
  }
  {  // ideal MHD volume + non-conservative volume cancellation
    const NodalField u = random_field(gen, mesh, gamma);
    const double c_h = 1.0 + u01(gen);
    double worst = 0.0;
    std::vector<Vec9> vol(n1 * n1);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      split_divergence_element(u, e, ops,
                               [&](const State& a, const State& b, Direction dir) {
                                 return ec_flux_split(a, b, gamma, c_h, dir).mhd;
                               },
                               vol.data());
      double total = 0.0, gross = 1.0;
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
          double div_b = 0.0;
          for (int m = 0; m < n1; ++m) {
            div_b += ops.dmat(i, m) * u.node(e, m, j)[kMagX] +
                     ops.dmat(j, m) * u.node(e, i, m)[kMagY];
          }
          const State s = u.state_at(e, i, j);
          const double term =
              ops.weights[i] * ops.weights[j] *
              (dot(entropy_vars(s, gamma).w, vol[i * n1 + j]) + theta(s, gamma) * div_b);
          total += term;
          gross += std::abs(term);
        }
      }
      worst = std::max(worst, std::abs(total) / gross);
    }
    report.check("mhd volume/non-conservative cancellation", worst <= 1e-11, worst, 1e-11);
  }
  {  // Euler volume contraction becomes the boundary entropy flux
    const NodalField u = random_field(gen, mesh, gamma);
    double worst = 0.0;
    std::vector<Vec9> vol(n1 * n1);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      split_divergence_element(u, e, ops,
                               [&](const State& a, const State& b, Direction dir) {
                                 return ec_flux_split(a, b, gamma, 0.0, dir).euler;
                               },
                               vol.data());
      double total = 0.0;
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
          total += ops.weights[i] * ops.weights[j] *
                   dot(entropy_vars(u.state_at(e, i, j), gamma).w, vol[i * n1 + j]);
        }
      }
      double boundary = 0.0;
      for (int j = 0; j < n1; ++j) {
        const State ue = u.state_at(e, n1 - 1, j);
        const State uw = u.state_at(e, 0, j);
        boundary += ops.weights[j] * (ue.vel(0) * entropy_density(ue, gamma) -
                                      uw.vel(0) * entropy_density(uw, gamma));
      }
      for (int i = 0; i < n1; ++i) {
        const State un = u.state_at(e, i, n1 - 1);
        const State us = u.state_at(e, i, 0);
        boundary += ops.weights[i] * (un.vel(1) * entropy_density(un, gamma) -
                                      us.vel(1) * entropy_density(us, gamma));
      }
      worst = std::max(worst, std::abs(total - boundary) / std::max(1.0, std::abs(boundary)));
    }
    report.check("euler volume-to-surface identity", worst <= 1e-11, worst, 1e-11);
  }

  GasConfig ideal;
  ideal.gamma = gamma;

  {  // total surface contraction of the EC scheme cancels; the sign-flip
     // canary must make the same check fail
    auto gamma_total = [&](bool flip, double* gross) {
      const NodalField u = random_field(gen, mesh, gamma);
      SchemeMode mode;
      mode.surface = SchemeMode::Surface::ec;
      mode.negate_noncons_surface = flip;
      const double c_h = 1.3;
      NodalField w(u.elements(), n1, 9);
      ThreadPool pool(1);
      entropy_vars_field(u, gamma, w, pool);
      GradientField q(u.elements(), n1, 18);
      compute_gradients(w, mesh, ops, q, pool);
      const SurfaceTerms st = surface_terms(u, q, mesh, ops, ideal, mode, c_h);
      double total = 0.0, scale = 1.0;
      for (int e = 0; e < u.elements(); ++e) {
        for (int i = 0; i < n1; ++i) {
          for (int j = 0; j < n1; ++j) {
            const double ww = mesh.jacobian * ops.weights[i] * ops.weights[j];
            const Vec9 wij = w.vec_at(e, i, j);
            const double t = -ww * (dot(wij, st.adv.vec_at(e, i, j)) +
                                    dot(wij, st.noncons.vec_at(e, i, j)));
            total += t;
            scale += std::abs(t);
          }
        }
        for (int j = 0; j < n1; ++j) {
          const State ue = u.state_at(e, n1 - 1, j);
          const State uw = u.state_at(e, 0, j);
          total += 0.5 * mesh.dx * ops.weights[j] *
                   (ue.vel(0) * entropy_density(ue, gamma) -
                    uw.vel(0) * entropy_density(uw, gamma));
        }
        for (int i = 0; i < n1; ++i) {
          const State un = u.state_at(e, i, n1 - 1);
          const State us = u.state_at(e, i, 0);
          total += 0.5 * mesh.dx * ops.weights[i] *
                   (un.vel(1) * entropy_density(un, gamma) -
                    us.vel(1) * entropy_density(us, gamma));
        }
      }
      if (gross) *gross = scale;
      return total;
    };
    double gross = 1.0;
    const double straight = std::abs(gamma_total(false, &gross)) / gross;
    report.check("total surface contraction cancels", straight <= 1e-11, straight, 1e-11);
    double gross2 = 1.0;
    const double flipped = std::abs(gamma_total(true, &gross2)) / gross2;
    report.check("non-conservative sign canary trips", flipped > 1e-6, flipped, 1e-6);
  }
  {  // semidiscrete entropy rate: zero for EC, non-positive with dissipation
    const NodalField u = random_field(gen, mesh, gamma);
    SchemeMode ec_mode;
    ec_mode.surface = SchemeMode::Surface::ec;
    double gross = 1.0;
    const double rate = entropy_rate(u, mesh, ops, ideal, ec_mode, 1.2, &gross);
    report.check("ec semidiscrete entropy rate", std::abs(rate) / gross <= 1e-11,
                 std::abs(rate) / gross, 1e-11);

    SchemeMode es_mode;
    es_mode.surface = SchemeMode::Surface::es;
    const double es_rate = entropy_rate(u, mesh, ops, ideal, es_mode, 1.2, nullptr);
    report.check("es interface dissipation sign", es_rate <= 1e-12, es_rate, 1e-12);

    GasConfig resistive = ideal;
    resistive.mu = 8.5e-4;
    resistive.eta = 1e-5;
    const double visc_rate = entropy_rate(u, mesh, ops, resistive, ec_mode, 1.2, nullptr);
    report.check("viscous dissipation sign", visc_rate <= 1e-12, visc_rate, 1e-12);
  }

  std::printf("%d check(s) failed\n", report.failures);
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-stable DGSEM solver for the 2D resistive GLM-MHD equations"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario_override;
  std::string meshes_arg = "5,10,20";
  double dt0 = 1e-3;
  int levels = 3;
  uint64_t seed = 12345;

  CLI::App* c_run = app.add_subcommand("run", "single simulation with CSV diagnostics");
  c_run->add_option("--config", config_path, "key=value config file")->required();
  c_run->add_option("--scenario", scenario_override, "override the scenario name");

  CLI::App* c_conv = app.add_subcommand("convergence", "error study against a reference");
  c_conv->add_option("--config", config_path, "key=value config file")->required();
  c_conv->add_option("--meshes", meshes_arg, "comma-separated element counts, e.g. 5,10,20");

  CLI::App* c_cfl = app.add_subcommand("cfl-study", "fixed-dt halving entropy study");
  c_cfl->add_option("--config", config_path, "key=value config file")->required();
  c_cfl->add_option("--dt0", dt0, "coarsest fixed time step");
  c_cfl->add_option("--levels", levels, "number of halvings (runs)");

  CLI::App* c_verify = app.add_subcommand("verify", "discrete-identity verification suite");
  c_verify->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_verify->parsed()) return cmd_verify(seed);

    RunConfig cfg = parse_config_file(config_path);
    if (!scenario_override.empty()) cfg.scenario = scenario_override;
    if (cfg.scenario.empty() && c_run->parsed()) {
      std::fprintf(stderr, "no scenario given (config key or --scenario)\n");
      return 1;
    }
    if (c_run->parsed()) return cmd_run(cfg);
    if (c_conv->parsed()) {
      std::vector<int> meshes;
      std::stringstream ss(meshes_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) meshes.push_back(std::stoi(tok));
      if (meshes.empty()) {
        std::fprintf(stderr, "empty mesh list\n");
        return 1;
      }
      return cmd_convergence(cfg, meshes);
    }
    if (c_cfl->parsed()) return cmd_cfl_study(cfg, dt0, levels);
  } catch (const ConfigError& err) {
    std::fprintf(stderr, "%s\n", err.what());
    return 1;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 1;
}
