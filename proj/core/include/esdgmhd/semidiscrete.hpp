#ifndef ESDGMHD_SEMIDISCRETE_HPP
#define ESDGMHD_SEMIDISCRETE_HPP

#include <functional>
#include <vector>

#include "esdgmhd/field.hpp"
#include "esdgmhd/fluxes.hpp"
#include "esdgmhd/mesh.hpp"
#include "esdgmhd/resistive.hpp"
#include "esdgmhd/sbp.hpp"

namespace esdg {

/// Discretization switches. ec_split + ec surface is the entropy-conservative
/// configuration; ec_split + es the entropy-stable production one. The
/// standard volume mode carries no entropy guarantee and exists for the
/// robustness comparison.
struct SchemeMode {
  enum class Volume { ec_split, standard };
  enum class Surface { ec, es };

  Volume volume = Volume::ec_split;
  Surface surface = Surface::es;
  bool glm = true;
  DissipationOperator dissipation{};  // used by the es surface flux

  /// Optional analytic volume source s(x, y, t), applied at every stage.
  std::function<Vec9(double, double, double)> source;

  /// Verification canary: negates the non-conservative surface coupling so
  /// the global entropy-cancellation checks must fail. Never enable outside
  /// the verify suite.
  bool negate_noncons_surface = false;

  DissipationOperator surface_dissipation() const {
    DissipationOperator d = dissipation;
    d.mode = (surface == Surface::es) ? DissipationOperator::Mode::llf_entropy
                                      : DissipationOperator::Mode::none;
    return d;
  }
};

/// Entropy-variable gradients: components 0..8 hold dw/dx, 9..17 dw/dy.
using GradientField = NodalField;

/// w at every node. Throws on inadmissible states.
void entropy_vars_field(const NodalField& u, double gamma, NodalField& w, const ThreadPool& pool);

/// BR1 gradient system in strong form: q_d = (2/dx) (D w + lifting) with
/// arithmetic-average interface values.
void compute_gradients(const NodalField& w, const CartesianMesh& mesh, const SbpOperators& ops,
                       GradientField& q, const ThreadPool& pool);

/// Convenience overload matching the operation contract: computes w first.
GradientField compute_gradients(const NodalField& u, const CartesianMesh& mesh,
                                const SbpOperators& ops, double gamma);

/// Split-form divergence of a two-point flux over one element, in physical
/// flux units (the 2/dx metric factor is applied by the caller):
///   out(i,j) = 2 sum_m D_im F1(U_ij, U_mj) + 2 sum_m D_jm F2(U_ij, U_im).
/// The flux callable maps (State, State, Direction) -> Vec9 and must be
/// symmetric in its state arguments.
template <class TwoPointFlux>
void split_divergence_element(const NodalField& u, int e, const SbpOperators& ops,
                              TwoPointFlux&& flux, Vec9* out) {
  const int n1 = ops.order + 1;
  const Matrix& d = ops.dmat;
  for (int n = 0; n < n1 * n1; ++n) out[n] = Vec9{};
  for (int j = 0; j < n1; ++j) {
    for (int i = 0; i < n1; ++i) {
      const State ui = u.state_at(e, i, j);
      axpy(2.0 * d(i, i), flux(ui, ui, Direction::X), out[i * n1 + j]);
      for (int m = i + 1; m < n1; ++m) {
        const Vec9 f = flux(ui, u.state_at(e, m, j), Direction::X);
        axpy(2.0 * d(i, m), f, out[i * n1 + j]);
        axpy(2.0 * d(m, i), f, out[m * n1 + j]);
      }
    }
  }
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      const State ui = u.state_at(e, i, j);
      axpy(2.0 * d(j, j), flux(ui, ui, Direction::Y), out[i * n1 + j]);
      for (int m = j + 1; m < n1; ++m) {
        const Vec9 f = flux(ui, u.state_at(e, i, m), Direction::Y);
        axpy(2.0 * d(j, m), f, out[i * n1 + j]);
        axpy(2.0 * d(m, j), f, out[i * n1 + m]);
      }
    }
  }
}

/// Split-form advective volume term with the EC two-point flux.
void volume_split(const NodalField& u, int e, const SbpOperators& ops, double gamma, double c_h,
                  Vec9* out);

/// Standard DG divergence of nodal flux arrays (N+1)^2-sized, physical units:
///   out(i,j) = sum_m D_im f1(m,j) + sum_m D_jm f2(i,m).
void volume_standard(const Vec9* f1, const Vec9* f2, const SbpOperators& ops, Vec9* out);

/// All face contributions of one element in mass-weighted strong form, i.e.
/// exactly the nodal terms added to U_t (including the 2/dx factor, the
/// 1/omega face weights and the orientation signs). adv/visc/noncons are
/// (N+1)^2 arrays; the viscous part needs the nodal viscous fluxes fv
/// (18 comps: f1 then f2) and is skipped when mu = eta = 0.
void surface_terms_element(const NodalField& u, const NodalField& fv, const CartesianMesh& mesh,
                           const SbpOperators& ops, const GasConfig& gas, const SchemeMode& mode,
                           double c_h, int e, Vec9* adv, Vec9* visc, Vec9* noncons);

struct SurfaceTerms {
  NodalField adv, visc, noncons;
};

/// Whole-field surface terms; computes the viscous nodal fluxes internally
/// from the given gradients.
SurfaceTerms surface_terms(const NodalField& u, const GradientField& q, const CartesianMesh& mesh,
                           const SbpOperators& ops, const GasConfig& gas, const SchemeMode& mode,
                           double c_h);

/// Scratch space reused across rhs evaluations.
struct RhsWorkspace {
  NodalField w;   // entropy variables
  GradientField q;
  NodalField fv;  // viscous fluxes, f1 and f2 packed (18 comps)
  std::vector<std::vector<Vec9>> scratch;  // per chunk: 3 arrays of (N+1)^2

  void resize(int elements, int n1, int chunks);
};

/// Full semidiscrete right-hand side U_t of the split-form DGSEM, with the
/// gradients recomputed internally so that (U, Q) stay consistent at every
/// stage. c_h is frozen by the caller.
void rhs(const NodalField& u, double t, const CartesianMesh& mesh, const SbpOperators& ops,
         const GasConfig& gas, const SchemeMode& mode, double c_h, NodalField& dudt,
         RhsWorkspace& ws, const ThreadPool& pool);

}  // namespace esdg

#endif
