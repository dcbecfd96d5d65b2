#include "esdgmhd/resistive.hpp"

#include <cmath>
#include <stdexcept>

namespace esdg {

KBlocks k_blocks(const Vec9& w, const GasConfig& gas) {
  if (!(w[4] < 0.0)) throw std::domain_error("k_blocks: w5 must be negative");
  const double mu = gas.mu;
  const double eta = gas.eta;
  const double kr = gas.kappa() / gas.rgas;
  const double w2 = w[1], w3 = w[2], w4 = w[3], w5 = w[4], w6 = w[5], w7 = w[6], w8 = w[7];
  const double iw5 = 1.0 / w5;
  const double iw5sq = iw5 * iw5;

  KBlocks kb;
  // entries are stated as w5 * K and scaled once at the end
  auto& K = kb.k;
  Mat9& k11 = K[0][0];
  k11[1][1] = -4.0 * mu / 3.0;
  k11[1][4] = 4.0 * mu * w2 / (3.0 * w5);
  k11[2][2] = -mu;
  k11[2][4] = mu * w3 * iw5;
  k11[3][3] = -mu;
  k11[3][4] = mu * w4 * iw5;
  k11[4][1] = 4.0 * mu * w2 / (3.0 * w5);
  k11[4][2] = mu * w3 * iw5;
  k11[4][3] = mu * w4 * iw5;
  k11[4][4] = -(4.0 * mu * w2 * w2 / 3.0 + mu * w3 * w3 + mu * w4 * w4 + eta * w7 * w7 +
                eta * w8 * w8) * iw5sq + kr * iw5;
  k11[4][6] = eta * w7 * iw5;
  k11[4][7] = eta * w8 * iw5;
  k11[6][4] = eta * w7 * iw5;
  k11[6][6] = -eta;
  k11[7][4] = eta * w8 * iw5;
  k11[7][7] = -eta;

  Mat9& k22 = K[1][1];
  k22[1][1] = -mu;
  k22[1][4] = mu * w2 * iw5;
  k22[2][2] = -4.0 * mu / 3.0;
  k22[2][4] = 4.0 * mu * w3 / (3.0 * w5);
  k22[3][3] = -mu;
  k22[3][4] = mu * w4 * iw5;
  k22[4][1] = mu * w2 * iw5;
  k22[4][2] = 4.0 * mu * w3 / (3.0 * w5);
  k22[4][3] = mu * w4 * iw5;
  k22[4][4] = -(mu * w2 * w2 + 4.0 * mu * w3 * w3 / 3.0 + mu * w4 * w4 + eta * w6 * w6 +
                eta * w8 * w8) * iw5sq + kr * iw5;
  k22[4][5] = eta * w6 * iw5;
  k22[4][7] = eta * w8 * iw5;
  k22[5][4] = eta * w6 * iw5;
  k22[5][5] = -eta;
  k22[7][4] = eta * w8 * iw5;
  k22[7][7] = -eta;

  Mat9& k33 = K[2][2];
  k33[1][1] = -mu;
  k33[1][4] = mu * w2 * iw5;
  k33[2][2] = -mu;
  k33[2][4] = mu * w3 * iw5;
  k33[3][3] = -4.0 * mu / 3.0;
  k33[3][4] = 4.0 * mu * w4 / (3.0 * w5);
  k33[4][1] = mu * w2 * iw5;
  k33[4][2] = mu * w3 * iw5;
  k33[4][3] = 4.0 * mu * w4 / (3.0 * w5);
  k33[4][4] = -(mu * w2 * w2 + mu * w3 * w3 + 4.0 * mu * w4 * w4 / 3.0 + eta * w6 * w6 +
                eta * w7 * w7) * iw5sq + kr * iw5;
  k33[4][5] = eta * w6 * iw5;
  k33[4][6] = eta * w7 * iw5;
  k33[5][4] = eta * w6 * iw5;
  k33[5][5] = -eta;
  k33[6][4] = eta * w7 * iw5;
  k33[6][6] = -eta;

  Mat9& k12 = K[0][1];
  k12[1][2] = 2.0 * mu / 3.0;
  k12[1][4] = -2.0 * mu * w3 / (3.0 * w5);
  k12[2][1] = -mu;
  k12[2][4] = mu * w2 * iw5;
  k12[4][1] = mu * w3 * iw5;
  k12[4][2] = -2.0 * mu * w2 / (3.0 * w5);
  k12[4][4] = (-mu * w2 * w3 / 3.0 + eta * w6 * w7) * iw5sq;
  k12[4][5] = -eta * w7 * iw5;
  k12[6][4] = -eta * w6 * iw5;
  k12[6][5] = eta;

  Mat9& k21 = K[1][0];
  k21[1][2] = -mu;
  k21[1][4] = mu * w3 * iw5;
  k21[2][1] = 2.0 * mu / 3.0;
  k21[2][4] = -2.0 * mu * w2 / (3.0 * w5);
  k21[4][1] = -2.0 * mu * w3 / (3.0 * w5);
  k21[4][2] = mu * w2 * iw5;
  k21[4][4] = (-mu * w2 * w3 / 3.0 + eta * w6 * w7) * iw5sq;
  k21[4][6] = -eta * w6 * iw5;
  k21[5][4] = -eta * w7 * iw5;
  k21[5][6] = eta;

  Mat9& k13 = K[0][2];
  k13[1][3] = 2.0 * mu / 3.0;
  k13[1][4] = -2.0 * mu * w4 / (3.0 * w5);
  k13[3][1] = -mu;
  k13[3][4] = mu * w2 * iw5;
  k13[4][1] = mu * w4 * iw5;
  k13[4][3] = -2.0 * mu * w2 / (3.0 * w5);
  k13[4][4] = (-mu * w2 * w4 / 3.0 + eta * w6 * w8) * iw5sq;
  k13[4][5] = -eta * w8 * iw5;
  k13[7][4] = -eta * w6 * iw5;
  k13[7][5] = eta;

  Mat9& k31 = K[2][0];
  k31[1][3] = -mu;
  k31[1][4] = mu * w4 * iw5;
  k31[3][1] = 2.0 * mu / 3.0;
  k31[3][4] = -2.0 * mu * w2 / (3.0 * w5);
  k31[4][1] = -2.0 * mu * w4 / (3.0 * w5);
  k31[4][3] = mu * w2 * iw5;
  k31[4][4] = (-mu * w2 * w4 / 3.0 + eta * w6 * w8) * iw5sq;
  k31[4][7] = -eta * w6 * iw5;
  k31[5][4] = -eta * w8 * iw5;
  k31[5][7] = eta;

  Mat9& k23 = K[1][2];
  k23[2][3] = 2.0 * mu / 3.0;
  k23[2][4] = -2.0 * mu * w4 / (3.0 * w5);
  k23[3][2] = -mu;
  k23[3][4] = mu * w3 * iw5;
  k23[4][2] = mu * w4 * iw5;
  k23[4][3] = -2.0 * mu * w3 / (3.0 * w5);
  k23[4][4] = (-mu * w3 * w4 / 3.0 + eta * w7 * w8) * iw5sq;
  k23[4][6] = -eta * w8 * iw5;
  k23[7][4] = -eta * w7 * iw5;
  k23[7][6] = eta;

  Mat9& k32 = K[2][1];
  k32[2][3] = -mu;
  k32[2][4] = mu * w4 * iw5;
  k32[3][2] = 2.0 * mu / 3.0;
  k32[3][4] = -2.0 * mu * w3 / (3.0 * w5);
  k32[4][2] = -2.0 * mu * w4 / (3.0 * w5);
  k32[4][3] = mu * w3 * iw5;
  k32[4][4] = (-mu * w3 * w4 / 3.0 + eta * w7 * w8) * iw5sq;
  k32[4][7] = -eta * w7 * iw5;
  k32[6][4] = -eta * w8 * iw5;
  k32[6][7] = eta;

  for (int d = 0; d < 3; ++d) {
    for (int e = 0; e < 3; ++e) {
      for (auto& row : K[d][e]) {
        for (double& x : row) x *= iw5;
      }
    }
  }
  return kb;
}

std::array<Vec9, 3> viscous_flux_direct(const std::array<double, 3>& v,
                                        const std::array<double, 3>& b,
                                        const std::array<std::array<double, 3>, 3>& grad_v,
                                        const std::array<double, 3>& grad_temperature,
                                        const std::array<std::array<double, 3>, 3>& grad_b,
                                        const GasConfig& gas) {
  const double mu = gas.mu;
  const double eta = gas.eta;
  const double kappa = gas.kappa();
  const double div_v = grad_v[0][0] + grad_v[1][1] + grad_v[2][2];

  std::array<std::array<double, 3>, 3> tau{};
  for (int d = 0; d < 3; ++d) {
    for (int k = 0; k < 3; ++k) {
      tau[d][k] = mu * (grad_v[d][k] + grad_v[k][d]);
    }
    tau[d][d] -= 2.0 / 3.0 * mu * div_v;
  }

  std::array<Vec9, 3> f{};
  for (int d = 0; d < 3; ++d) {
    for (int k = 0; k < 3; ++k) f[d][kMomX + k] = tau[d][k];
    double en = kappa * grad_temperature[d];
    for (int k = 0; k < 3; ++k) {
      en += v[k] * tau[d][k];
      en += eta * b[k] * (grad_b[k][d] - grad_b[d][k]);
      f[d][kMagX + k] = eta * (grad_b[k][d] - grad_b[d][k]);
    }
    f[d][kEnergy] = en;
  }
  return f;
}

std::pair<Vec9, Vec9> viscous_flux(const Vec9& w, const Vec9& w_x, const Vec9& w_y,
                                   const GasConfig& gas) {
  if (!(w[4] < 0.0)) throw std::domain_error("viscous_flux: w5 must be negative");
  const double mu = gas.mu;
  const double eta = gas.eta;
  const double kr = gas.kappa() / gas.rgas;
  const double w2 = w[1], w3 = w[2], w4 = w[3], w5 = w[4], w6 = w[5], w7 = w[6], w8 = w[7];
  const double iw5 = 1.0 / w5;
  const double iw5sq = iw5 * iw5;

  // sparse application of the (1,1), (1,2), (2,1), (2,2) blocks; entries are
  // the w5-scaled block coefficients, scaled once at the end
  const double m11_44 = -(4.0 * mu * w2 * w2 / 3.0 + mu * w3 * w3 + mu * w4 * w4 +
                          eta * w7 * w7 + eta * w8 * w8) * iw5sq + kr * iw5;
  const double m22_44 = -(mu * w2 * w2 + 4.0 * mu * w3 * w3 / 3.0 + mu * w4 * w4 +
                          eta * w6 * w6 + eta * w8 * w8) * iw5sq + kr * iw5;
  const double m_off_44 = (-mu * w2 * w3 / 3.0 + eta * w6 * w7) * iw5sq;

  Vec9 f1{}, f2{};
  f1[1] = -(4.0 * mu / 3.0) * w_x[1] + (4.0 * mu * w2 / (3.0 * w5)) * w_x[4] +
          (2.0 * mu / 3.0) * w_y[2] - (2.0 * mu * w3 / (3.0 * w5)) * w_y[4];
  f1[2] = -mu * w_x[2] + mu * w3 * iw5 * w_x[4] - mu * w_y[1] + mu * w2 * iw5 * w_y[4];
  f1[3] = -mu * w_x[3] + mu * w4 * iw5 * w_x[4];
  f1[4] = (4.0 * mu * w2 / (3.0 * w5)) * w_x[1] + mu * w3 * iw5 * w_x[2] +
          mu * w4 * iw5 * w_x[3] + m11_44 * w_x[4] + eta * w7 * iw5 * w_x[6] +
          eta * w8 * iw5 * w_x[7] + mu * w3 * iw5 * w_y[1] -
          (2.0 * mu * w2 / (3.0 * w5)) * w_y[2] + m_off_44 * w_y[4] - eta * w7 * iw5 * w_y[5];
  f1[6] = eta * w7 * iw5 * w_x[4] - eta * w_x[6] - eta * w6 * iw5 * w_y[4] + eta * w_y[5];
  f1[7] = eta * w8 * iw5 * w_x[4] - eta * w_x[7];

  f2[1] = -mu * w_x[2] + mu * w3 * iw5 * w_x[4] - mu * w_y[1] + mu * w2 * iw5 * w_y[4];
  f2[2] = (2.0 * mu / 3.0) * w_x[1] - (2.0 * mu * w2 / (3.0 * w5)) * w_x[4] -
          (4.0 * mu / 3.0) * w_y[2] + (4.0 * mu * w3 / (3.0 * w5)) * w_y[4];
  f2[3] = -mu * w_y[3] + mu * w4 * iw5 * w_y[4];
  f2[4] = -(2.0 * mu * w3 / (3.0 * w5)) * w_x[1] + mu * w2 * iw5 * w_x[2] + m_off_44 * w_x[4] -
          eta * w6 * iw5 * w_x[6] + mu * w2 * iw5 * w_y[1] +
          (4.0 * mu * w3 / (3.0 * w5)) * w_y[2] + mu * w4 * iw5 * w_y[3] + m22_44 * w_y[4] +
          eta * w6 * iw5 * w_y[5] + eta * w8 * iw5 * w_y[7];
  f2[5] = -eta * w7 * iw5 * w_x[4] + eta * w_x[6] + eta * w6 * iw5 * w_y[4] - eta * w_y[5];
  f2[7] = eta * w8 * iw5 * w_y[4] - eta * w_y[7];

  for (int c = 0; c < 9; ++c) {
    f1[c] *= iw5;
    f2[c] *= iw5;
  }
  return {f1, f2};
}

std::pair<Vec9, Vec9> br1_interface(const Vec9& w_l, const Vec9& w_r,
                                    const Vec9& fv_l, const Vec9& fv_r) {
  Vec9 w_star, fv_star;
  for (int c = 0; c < 9; ++c) {
    w_star[c] = 0.5 * (w_l[c] + w_r[c]);
    fv_star[c] = 0.5 * (fv_l[c] + fv_r[c]);
  }
  return {w_star, fv_star};
}

}  // namespace esdg
