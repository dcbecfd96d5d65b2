#include "esdgmhd/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esdg {

namespace {

inline double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline State swap_state(const State& u) {
  State r = u;
  std::swap(r.mom[0], r.mom[1]);
  std::swap(r.mag[0], r.mag[1]);
  return r;
}

Vec9 advective_flux_x(const State& u, double gamma, double c_h) {
  const double p = pressure(u, gamma);
  const std::array<double, 3> v = {u.vel(0), u.vel(1), u.vel(2)};
  const std::array<double, 3>& B = u.mag;
  const double Bsq = dot3(B, B);
  Vec9 f;
  f[kRho] = u.rho * v[0];
  f[kMomX] = u.rho * v[0] * v[0] + p + 0.5 * Bsq - B[0] * B[0];
  f[kMomY] = u.rho * v[0] * v[1] - B[0] * B[1];
  f[kMomZ] = u.rho * v[0] * v[2] - B[0] * B[2];
  f[kEnergy] = v[0] * (0.5 * u.rho * dot3(v, v) + gamma * p / (gamma - 1.0) + Bsq) -
               B[0] * dot3(v, B) + c_h * u.psi * B[0];
  f[kMagX] = c_h * u.psi;
  f[kMagY] = v[0] * B[1] - v[1] * B[0];
  f[kMagZ] = v[0] * B[2] - v[2] * B[0];
  f[kPsi] = c_h * B[0];
  return f;
}

EcFluxSplit ec_flux_split_x(const State& ul, const State& ur, double gamma, double c_h) {
  const double pl = pressure(ul, gamma);
  const double pr = pressure(ur, gamma);
  const double betal = ul.rho / (2.0 * pl);
  const double betar = ur.rho / (2.0 * pr);
  const std::array<double, 3> vl = {ul.vel(0), ul.vel(1), ul.vel(2)};
  const std::array<double, 3> vr = {ur.vel(0), ur.vel(1), ur.vel(2)};
  const std::array<double, 3>& Bl = ul.mag;
  const std::array<double, 3>& Br = ur.mag;

  auto avg = [](double a, double b) { return 0.5 * (a + b); };
  const double rho_ln = log_mean(ul.rho, ur.rho);
  const double beta_ln = log_mean(betal, betar);
  const std::array<double, 3> va = {avg(vl[0], vr[0]), avg(vl[1], vr[1]), avg(vl[2], vr[2])};
  const std::array<double, 3> Ba = {avg(Bl[0], Br[0]), avg(Bl[1], Br[1]), avg(Bl[2], Br[2])};
  const double psia = avg(ul.psi, ur.psi);
  const double p_bar = avg(ul.rho, ur.rho) / (2.0 * avg(betal, betar));
  const double v2a = avg(dot3(vl, vl), dot3(vr, vr));
  const double B2a = avg(dot3(Bl, Bl), dot3(Br, Br));
  const double v1B2a = avg(vl[0] * dot3(Bl, Bl), vr[0] * dot3(Br, Br));
  const double vBa = avg(dot3(vl, Bl), dot3(vr, Br));
  const double B1psia = avg(Bl[0] * ul.psi, Br[0] * ur.psi);

  EcFluxSplit s;
  Vec9& fE = s.euler;
  Vec9& fM = s.mhd;
  Vec9& fG = s.glm;

  fE[kRho] = rho_ln * va[0];
  fE[kMomX] = rho_ln * va[0] * va[0] + p_bar;
  fE[kMomY] = rho_ln * va[0] * va[1];
  fE[kMomZ] = rho_ln * va[0] * va[2];
  fE[kEnergy] = fE[kRho] * (0.5 / ((gamma - 1.0) * beta_ln) - 0.5 * v2a) +
                fE[kMomX] * va[0] + fE[kMomY] * va[1] + fE[kMomZ] * va[2];

  fM[kMomX] = -Ba[0] * Ba[0] + 0.5 * B2a;
  fM[kMomY] = -Ba[0] * Ba[1];
  fM[kMomZ] = -Ba[0] * Ba[2];
  fM[kMagY] = va[0] * Ba[1] - va[1] * Ba[0];
  fM[kMagZ] = va[0] * Ba[2] - va[2] * Ba[0];
  fM[kEnergy] = fM[kMomX] * va[0] + fM[kMomY] * va[1] + fM[kMomZ] * va[2] +
                fM[kMagY] * Ba[1] + fM[kMagZ] * Ba[2] - 0.5 * v1B2a + vBa * Ba[0];

  fG[kMagX] = c_h * psia;
  fG[kPsi] = c_h * Ba[0];
  fG[kEnergy] = fG[kMagX] * Ba[0] + fG[kPsi] * psia - c_h * B1psia;
  return s;
}

}  // namespace

Vec9 advective_flux(const State& u, double gamma, double c_h, Direction dir) {
  if (dir == Direction::X) return advective_flux_x(u, gamma, c_h);
  return swap_xy(advective_flux_x(swap_state(u), gamma, c_h));
}

double log_mean(double a_l, double a_r) {
  if (!(a_l > 0.0) || !(a_r > 0.0)) {
    throw std::domain_error("log_mean: arguments must be positive");
  }
  const double zeta = a_l / a_r;
  const double f = (zeta - 1.0) / (zeta + 1.0);
  double cap;  // ln(zeta) / (2 f)
  if (std::abs(zeta - 1.0) < 1e-4) {
    const double u = f * f;
    cap = 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u / 7.0));
  } else {
    cap = std::log(zeta) / (2.0 * f);
  }
  return 0.5 * (a_l + a_r) / cap;
}

Vec9 ec_flux(const State& ul, const State& ur, double gamma, double c_h, Direction dir) {
  return ec_flux_split(ul, ur, gamma, c_h, dir).total();
}

EcFluxSplit ec_flux_split(const State& ul, const State& ur, double gamma, double c_h, Direction dir) {
  if (dir == Direction::X) return ec_flux_split_x(ul, ur, gamma, c_h);
  EcFluxSplit s = ec_flux_split_x(swap_state(ul), swap_state(ur), gamma, c_h);
  s.euler = swap_xy(s.euler);
  s.mhd = swap_xy(s.mhd);
  s.glm = swap_xy(s.glm);
  return s;
}

namespace {

double fast_speed(const State& u, double gamma, double bn_sq_over_rho) {
  const double p = pressure(u, gamma);
  const double a2 = gamma * p / u.rho;
  const double b2 = dot3(u.mag, u.mag) / u.rho;
  double disc = (a2 + b2) * (a2 + b2) - 4.0 * a2 * bn_sq_over_rho;
  if (disc < 0.0) {
    if (disc < -1e-12 * (a2 + b2) * (a2 + b2)) {
      throw std::domain_error("fast_speed: negative discriminant");
    }
    disc = 0.0;  // tiny negative round-off
  }
  return std::sqrt(0.5 * (a2 + b2 + std::sqrt(disc)));
}

}  // namespace

double max_wave_speed(const State& u, double gamma, double c_h, Direction dir) {
  const int d = static_cast<int>(dir);
  const double bn2 = u.mag[d] * u.mag[d] / u.rho;
  return std::max(std::abs(u.vel(d)) + fast_speed(u, gamma, bn2), c_h);
}

double max_wave_speed_bound(const State& u, double gamma) {
  // the fast speed is largest when the field is perpendicular to the
  // direction, so B_n = 0 gives c_f = sqrt(a^2 + |B|^2/rho)
  const double vn = std::max(std::abs(u.vel(0)), std::abs(u.vel(1)));
  return vn + fast_speed(u, gamma, 0.0);
}

Mat9 entropy_jacobian(const Vec9& w, double gamma, double h_step) {
  Mat9 h{};
  for (int j = 0; j < 9; ++j) {
    double dj = h_step * std::max(std::abs(w[j]), 1.0);
    if (j == 4) dj = std::min(dj, 0.5 * std::abs(w[4]));  // keep w5 < 0
    Vec9 wp = w, wm = w;
    wp[j] += dj;
    wm[j] -= dj;
    const Vec9 up = conserved_from_entropy_vars(wp, gamma).to_vec();
    const Vec9 um = conserved_from_entropy_vars(wm, gamma).to_vec();
    for (int i = 0; i < 9; ++i) h[i][j] = (up[i] - um[i]) / (2.0 * dj);
  }
  // H is symmetric analytically; remove the FD asymmetry
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      const double s = 0.5 * (h[i][j] + h[j][i]);
      h[i][j] = s;
      h[j][i] = s;
    }
  }
  return h;
}

Vec9 es_flux(const State& ul, const State& ur, double gamma, double c_h, Direction dir,
             const DissipationOperator& dissipation) {
  Vec9 f = ec_flux(ul, ur, gamma, c_h, dir);
  if (dissipation.mode == DissipationOperator::Mode::none) return f;

  const double lambda = std::max(max_wave_speed(ul, gamma, c_h, dir),
                                 max_wave_speed(ur, gamma, c_h, dir));
  const Vec9 wl = entropy_vars(ul, gamma).w;
  const Vec9 wr = entropy_vars(ur, gamma).w;
  const Mat9 hl = entropy_jacobian(wl, gamma, dissipation.h_step);
  const Mat9 hr = entropy_jacobian(wr, gamma, dissipation.h_step);
  Vec9 jump;
  for (int c = 0; c < 9; ++c) jump[c] = wr[c] - wl[c];
  for (int i = 0; i < 9; ++i) {
    double s = 0.0;
    for (int j = 0; j < 9; ++j) s += 0.5 * (hl[i][j] + hr[i][j]) * jump[j];
    f[i] -= 0.5 * lambda * s;
  }
  return f;
}

}  // namespace esdg
