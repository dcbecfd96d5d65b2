#ifndef ESDGMHD_RESISTIVE_HPP
#define ESDGMHD_RESISTIVE_HPP

#include <array>
#include <utility>

#include "esdgmhd/state.hpp"
#include "esdgmhd/types.hpp"

namespace esdg {

/// The nine 9x9 blocks of the viscous/resistive coefficient matrix in
/// entropy-gradient form, f^v_d = sum_e K[d][e] dw/dx_e. The assembled 27x27
/// matrix is symmetric positive semi-definite.
struct KBlocks {
  std::array<std::array<Mat9, 3>, 3> k{};

  const Mat9& operator()(int d, int e) const { return k[d][e]; }
};

/// Blocks evaluated at one entropy state. Throws std::domain_error for
/// w5 >= 0. All nine blocks are produced even though the 2D solver only
/// contracts the (1,1), (1,2), (2,1), (2,2) ones.
KBlocks k_blocks(const Vec9& w, const GasConfig& gas);

/// Viscous flux from primitive gradients:
///   stress    tau = mu (grad v + grad v^T) - (2/3) mu (div v) I
///   energy    tau v + kappa grad T - eta ((curl B) x B)
///   induction eta ((grad B)^T - grad B)
/// grad_v[i][d] = dv_i/dx_d, grad_temperature[d] = d(p/(R rho))/dx_d,
/// grad_b[i][d] = dB_i/dx_d. Returns the three directional flux vectors.
std::array<Vec9, 3> viscous_flux_direct(const std::array<double, 3>& v,
                                        const std::array<double, 3>& b,
                                        const std::array<std::array<double, 3>, 3>& grad_v,
                                        const std::array<double, 3>& grad_temperature,
                                        const std::array<std::array<double, 3>, 3>& grad_b,
                                        const GasConfig& gas);

/// 2D viscous fluxes f1 = K11 w_x + K12 w_y, f2 = K21 w_x + K22 w_y.
std::pair<Vec9, Vec9> viscous_flux(const Vec9& w, const Vec9& w_x, const Vec9& w_y,
                                   const GasConfig& gas);

/// BR1 interface values: plain arithmetic averages of the traces.
std::pair<Vec9, Vec9> br1_interface(const Vec9& w_l, const Vec9& w_r,
                                    const Vec9& fv_l, const Vec9& fv_r);

}  // namespace esdg

#endif
