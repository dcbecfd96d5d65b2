#ifndef ESDGMHD_FLUXES_HPP
#define ESDGMHD_FLUXES_HPP

#include "esdgmhd/state.hpp"
#include "esdgmhd/types.hpp"

namespace esdg {

// Cartesian flux direction. Every y-direction kernel is the x-direction one
// conjugated by swap_xy; see fluxes.cpp.
enum class Direction { X = 0, Y = 1 };

/// Physical advective flux of the GLM-MHD system in one direction.
Vec9 advective_flux(const State& u, double gamma, double c_h, Direction dir);

/// (aR - aL) / (ln aR - ln aL), evaluated through a series expansion when the
/// ratio is within 1e-4 of one. Throws std::domain_error for non-positive
/// arguments.
double log_mean(double a_l, double a_r);

/// Two-point entropy-conservative flux. Symmetric in its state arguments and
/// consistent with advective_flux.
Vec9 ec_flux(const State& ul, const State& ur, double gamma, double c_h, Direction dir);

/// The EC flux split into Euler, ideal-MHD and GLM parts; the parts sum to
/// ec_flux and each satisfies its own entropy contraction condition.
struct EcFluxSplit {
  Vec9 euler{}, mhd{}, glm{};

  Vec9 total() const {
    Vec9 r = euler;
    for (int c = 0; c < 9; ++c) r[c] += mhd[c] + glm[c];
    return r;
  }
};
EcFluxSplit ec_flux_split(const State& ul, const State& ur, double gamma, double c_h, Direction dir);

/// max(|v_n| + c_f, c_h) with the fast magnetosonic speed c_f.
double max_wave_speed(const State& u, double gamma, double c_h, Direction dir);

/// Direction-free upper bound on |v_n| + c_f: the normal field strength is
/// replaced by |B|, so the result dominates max_wave_speed over both
/// directions. Used to pick c_h.
double max_wave_speed_bound(const State& u, double gamma);

/// Interface dissipation applied on top of the EC flux.
struct DissipationOperator {
  enum class Mode { none, llf_entropy };
  Mode mode = Mode::llf_entropy;
  double h_step = 1e-6;  // relative FD step for the entropy Jacobian
};

/// Entropy Jacobian H = du/dw by central finite differences, symmetrized.
Mat9 entropy_jacobian(const Vec9& w, double gamma, double h_step = 1e-6);

/// f_es = f_ec - (lambda_max / 2) H [[w]] in llf_entropy mode; plain ec_flux
/// in mode none.
Vec9 es_flux(const State& ul, const State& ur, double gamma, double c_h, Direction dir,
             const DissipationOperator& dissipation);

}  // namespace esdg

#endif
