#include "esdgmhd/semidiscrete.hpp"

#include <cmath>

namespace esdg {

void entropy_vars_field(const NodalField& u, double gamma, NodalField& w, const ThreadPool& pool) {
  const int n1 = u.n1();
  pool.for_each(u.elements(), [&](int e, int) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        const EntropyState es = entropy_vars(u.state_at(e, i, j), gamma);
        w.set_vec(e, i, j, es.w);
      }
    }
  });
}

void compute_gradients(const NodalField& w, const CartesianMesh& mesh, const SbpOperators& ops,
                       GradientField& q, const ThreadPool& pool) {
  const int n1 = ops.order + 1;
  const Matrix& d = ops.dmat;
  const double scale = 2.0 / mesh.dx;
  const double iw0 = 1.0 / ops.weights[0];
  const double iwn = 1.0 / ops.weights[n1 - 1];

  pool.for_each(mesh.num_elements(), [&](int e, int) {
    const int ew = mesh.neighbors[e][kFaceWest];
    const int ee = mesh.neighbors[e][kFaceEast];
    const int es = mesh.neighbors[e][kFaceSouth];
    const int en = mesh.neighbors[e][kFaceNorth];
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        double* qn = q.node(e, i, j);
        for (int c = 0; c < 9; ++c) {
          double sx = 0.0, sy = 0.0;
          for (int m = 0; m < n1; ++m) {
            sx += d(i, m) * w.node(e, m, j)[c];
            sy += d(j, m) * w.node(e, i, m)[c];
          }
          qn[c] = sx;
          qn[9 + c] = sy;
        }
      }
    }
    // boundary lifting with W* = <W>; W* - W = (W_ext - W_int)/2
    for (int j = 0; j < n1; ++j) {
      double* qw = q.node(e, 0, j);
      double* qe = q.node(e, n1 - 1, j);
      const double* w_in_w = w.node(e, 0, j);
      const double* w_ex_w = w.node(ew, n1 - 1, j);
      const double* w_in_e = w.node(e, n1 - 1, j);
      const double* w_ex_e = w.node(ee, 0, j);
      for (int c = 0; c < 9; ++c) {
        qw[c] -= 0.5 * (w_ex_w[c] - w_in_w[c]) * iw0;
        qe[c] += 0.5 * (w_ex_e[c] - w_in_e[c]) * iwn;
      }
    }
    for (int i = 0; i < n1; ++i) {
      double* qs = q.node(e, i, 0);
      double* qn2 = q.node(e, i, n1 - 1);
      const double* w_in_s = w.node(e, i, 0);
      const double* w_ex_s = w.node(es, i, n1 - 1);
      const double* w_in_n = w.node(e, i, n1 - 1);
      const double* w_ex_n = w.node(en, i, 0);
      for (int c = 0; c < 9; ++c) {
        qs[9 + c] -= 0.5 * (w_ex_s[c] - w_in_s[c]) * iw0;
        qn2[9 + c] += 0.5 * (w_ex_n[c] - w_in_n[c]) * iwn;
      }
    }
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        double* qn = q.node(e, i, j);
        for (int c = 0; c < 18; ++c) qn[c] *= scale;
      }
    }
  });
}

GradientField compute_gradients(const NodalField& u, const CartesianMesh& mesh,
                                const SbpOperators& ops, double gamma) {
  ThreadPool serial(1);
  NodalField w(u.elements(), u.n1(), 9);
  entropy_vars_field(u, gamma, w, serial);
  GradientField q(u.elements(), u.n1(), 18);
  compute_gradients(w, mesh, ops, q, serial);
  return q;
}

void volume_split(const NodalField& u, int e, const SbpOperators& ops, double gamma, double c_h,
                  Vec9* out) {
  split_divergence_element(u, e, ops,
                           [gamma, c_h](const State& a, const State& b, Direction dir) {
                             return ec_flux(a, b, gamma, c_h, dir);
                           },
                           out);
}

void volume_standard(const Vec9* f1, const Vec9* f2, const SbpOperators& ops, Vec9* out) {
  const int n1 = ops.order + 1;
  const Matrix& d = ops.dmat;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      Vec9 acc{};
      for (int m = 0; m < n1; ++m) {
        axpy(d(i, m), f1[m * n1 + j], acc);
        axpy(d(j, m), f2[i * n1 + m], acc);
      }
      out[i * n1 + j] = acc;
    }
  }
}

namespace {

inline Vec9 face_flux(const State& ul, const State& ur, const GasConfig& gas, const SchemeMode& mode,
                      double c_h, Direction dir) {
  return es_flux(ul, ur, gas.gamma, c_h, dir, mode.surface_dissipation());
}

}  // namespace

void surface_terms_element(const NodalField& u, const NodalField& fv, const CartesianMesh& mesh,
                           const SbpOperators& ops, const GasConfig& gas, const SchemeMode& mode,
                           double c_h, int e, Vec9* adv, Vec9* visc, Vec9* noncons) {
  const int n1 = ops.order + 1;
  const int nend = n1 - 1;
  const double scale = 2.0 / mesh.dx;
  const double a0 = scale / ops.weights[0];
  const double an = scale / ops.weights[nend];
  const bool viscous = (gas.mu != 0.0 || gas.eta != 0.0);
  const double sigma = mode.negate_noncons_surface ? -1.0 : 1.0;

  for (int n = 0; n < n1 * n1; ++n) {
    adv[n] = Vec9{};
    visc[n] = Vec9{};
    noncons[n] = Vec9{};
  }

  const int ew = mesh.neighbors[e][kFaceWest];
  const int ee = mesh.neighbors[e][kFaceEast];
  const int es = mesh.neighbors[e][kFaceSouth];
  const int en = mesh.neighbors[e][kFaceNorth];

  for (int j = 0; j < n1; ++j) {
    {  // west face, outward normal -x
      const State ext = u.state_at(ew, nend, j);
      const State in = u.state_at(e, 0, j);
      const Vec9 fstar = face_flux(ext, in, gas, mode, c_h, Direction::X);
      const Vec9 fint = advective_flux(in, gas.gamma, c_h, Direction::X);
      axpy(a0, fstar - fint, adv[0 * n1 + j]);
      if (viscous) {
        const double* fv_in = fv.node(e, 0, j);
        const double* fv_ex = fv.node(ew, nend, j);
        for (int c = 0; c < 9; ++c) {
          visc[0 * n1 + j][c] -= a0 * 0.5 * (fv_ex[c] - fv_in[c]);
        }
      }
      const Vec9 phi = janhunen_vector(in);
      axpy(sigma * a0 * 0.5 * (ext.mag[0] - in.mag[0]), phi, noncons[0 * n1 + j]);
    }
    {  // east face, outward normal +x
      const State in = u.state_at(e, nend, j);
      const State ext = u.state_at(ee, 0, j);
      const Vec9 fstar = face_flux(in, ext, gas, mode, c_h, Direction::X);
      const Vec9 fint = advective_flux(in, gas.gamma, c_h, Direction::X);
      axpy(-an, fstar - fint, adv[nend * n1 + j]);
      if (viscous) {
        const double* fv_in = fv.node(e, nend, j);
        const double* fv_ex = fv.node(ee, 0, j);
        for (int c = 0; c < 9; ++c) {
          visc[nend * n1 + j][c] += an * 0.5 * (fv_ex[c] - fv_in[c]);
        }
      }
      const Vec9 phi = janhunen_vector(in);
      axpy(-sigma * an * 0.5 * (ext.mag[0] - in.mag[0]), phi, noncons[nend * n1 + j]);
    }
  }
  for (int i = 0; i < n1; ++i) {
    {  // south face, outward normal -y
      const State ext = u.state_at(es, i, nend);
      const State in = u.state_at(e, i, 0);
      const Vec9 fstar = face_flux(ext, in, gas, mode, c_h, Direction::Y);
      const Vec9 fint = advective_flux(in, gas.gamma, c_h, Direction::Y);
      axpy(a0, fstar - fint, adv[i * n1 + 0]);
      if (viscous) {
        const double* fv_in = fv.node(e, i, 0);
        const double* fv_ex = fv.node(es, i, nend);
        for (int c = 0; c < 9; ++c) {
          visc[i * n1 + 0][c] -= a0 * 0.5 * (fv_ex[9 + c] - fv_in[9 + c]);
        }
      }
      const Vec9 phi = janhunen_vector(in);
      axpy(sigma * a0 * 0.5 * (ext.mag[1] - in.mag[1]), phi, noncons[i * n1 + 0]);
    }
    {  // north face, outward normal +y
      const State in = u.state_at(e, i, nend);
      const State ext = u.state_at(en, i, 0);
      const Vec9 fstar = face_flux(in, ext, gas, mode, c_h, Direction::Y);
      const Vec9 fint = advective_flux(in, gas.gamma, c_h, Direction::Y);
      axpy(-an, fstar - fint, adv[i * n1 + nend]);
      if (viscous) {
        const double* fv_in = fv.node(e, i, nend);
        const double* fv_ex = fv.node(en, i, 0);
        for (int c = 0; c < 9; ++c) {
          visc[i * n1 + nend][c] += an * 0.5 * (fv_ex[9 + c] - fv_in[9 + c]);
        }
      }
      const Vec9 phi = janhunen_vector(in);
      axpy(-sigma * an * 0.5 * (ext.mag[1] - in.mag[1]), phi, noncons[i * n1 + nend]);
    }
  }
}

namespace {

void viscous_flux_field(const NodalField& w, const GradientField& q, const GasConfig& gas,
                        NodalField& fv, const ThreadPool& pool) {
  const int n1 = w.n1();
  pool.for_each(w.elements(), [&](int e, int) {
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        const double* qp = q.node(e, i, j);
        Vec9 wn, wx, wy;
        const double* wp = w.node(e, i, j);
        for (int c = 0; c < 9; ++c) {
          wn[c] = wp[c];
          wx[c] = qp[c];
          wy[c] = qp[9 + c];
        }
        const auto [f1, f2] = viscous_flux(wn, wx, wy, gas);
        double* out = fv.node(e, i, j);
        for (int c = 0; c < 9; ++c) {
          out[c] = f1[c];
          out[9 + c] = f2[c];
        }
      }
    }
  });
}

}  // namespace

SurfaceTerms surface_terms(const NodalField& u, const GradientField& q, const CartesianMesh& mesh,
                           const SbpOperators& ops, const GasConfig& gas, const SchemeMode& mode,
                           double c_h) {
  ThreadPool serial(1);
  const int n1 = ops.order + 1;
  NodalField fv(u.elements(), n1, 18);
  if (gas.mu != 0.0 || gas.eta != 0.0) {
    NodalField w(u.elements(), n1, 9);
    entropy_vars_field(u, gas.gamma, w, serial);
    viscous_flux_field(w, q, gas, fv, serial);
  }
  SurfaceTerms st{NodalField(u.elements(), n1, 9), NodalField(u.elements(), n1, 9),
                  NodalField(u.elements(), n1, 9)};
  std::vector<Vec9> adv(n1 * n1), visc(n1 * n1), nc(n1 * n1);
  for (int e = 0; e < u.elements(); ++e) {
    surface_terms_element(u, fv, mesh, ops, gas, mode, c_h, e, adv.data(), visc.data(), nc.data());
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        st.adv.set_vec(e, i, j, adv[i * n1 + j]);
        st.visc.set_vec(e, i, j, visc[i * n1 + j]);
        st.noncons.set_vec(e, i, j, nc[i * n1 + j]);
      }
    }
  }
  return st;
}

void RhsWorkspace::resize(int elements, int n1, int chunks) {
  if (w.elements() != elements || w.n1() != n1) {
    w = NodalField(elements, n1, 9);
    q = GradientField(elements, n1, 18);
    fv = NodalField(elements, n1, 18);
  }
  if (static_cast<int>(scratch.size()) != chunks ||
      (chunks > 0 && scratch[0].size() != static_cast<size_t>(5 * n1 * n1))) {
    scratch.assign(chunks, std::vector<Vec9>(5 * n1 * n1));
  }
}

void rhs(const NodalField& u, double t, const CartesianMesh& mesh, const SbpOperators& ops,
         const GasConfig& gas, const SchemeMode& mode, double c_h, NodalField& dudt,
         RhsWorkspace& ws, const ThreadPool& pool) {
  const int n1 = ops.order + 1;
  const int nn = n1 * n1;
  const double scale = 2.0 / mesh.dx;
  const bool viscous = (gas.mu != 0.0 || gas.eta != 0.0);
  ws.resize(u.elements(), n1, pool.threads());

  if (viscous) {
    entropy_vars_field(u, gas.gamma, ws.w, pool);
    compute_gradients(ws.w, mesh, ops, ws.q, pool);
    viscous_flux_field(ws.w, ws.q, gas, ws.fv, pool);
  }

  const Matrix& d = ops.dmat;
  pool.for_each(u.elements(), [&](int e, int tid) {
    std::vector<Vec9>& buf = ws.scratch[tid];
    Vec9* vol = buf.data();
    Vec9* adv = buf.data() + nn;
    Vec9* visc = buf.data() + 2 * nn;
    Vec9* nc = buf.data() + 3 * nn;
    Vec9* fnodal = buf.data() + 4 * nn;  // used by the standard volume mode

    // advective volume term
    if (mode.volume == SchemeMode::Volume::ec_split) {
      volume_split(u, e, ops, gas.gamma, c_h, vol);
    } else {
      for (int n = 0; n < nn; ++n) vol[n] = Vec9{};
      for (Direction dir : {Direction::X, Direction::Y}) {
        for (int n = 0; n < nn; ++n) {
          const int i = n / n1, j = n % n1;
          fnodal[n] = advective_flux(u.state_at(e, i, j), gas.gamma, c_h, dir);
        }
        for (int i = 0; i < n1; ++i) {
          for (int j = 0; j < n1; ++j) {
            for (int m = 0; m < n1; ++m) {
              if (dir == Direction::X) {
                axpy(d(i, m), fnodal[m * n1 + j], vol[i * n1 + j]);
              } else {
                axpy(d(j, m), fnodal[i * n1 + m], vol[i * n1 + j]);
              }
            }
          }
        }
      }
    }

    surface_terms_element(u, ws.fv, mesh, ops, gas, mode, c_h, e, adv, visc, nc);

    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) {
        const int n = i * n1 + j;
        Vec9 out{};
        axpy(-scale, vol[n], out);

        if (viscous) {
          // standard derivative of the nodal viscous fluxes
          Vec9 vv{};
          for (int m = 0; m < n1; ++m) {
            const double* f1 = ws.fv.node(e, m, j);
            const double* f2 = ws.fv.node(e, i, m);
            for (int c = 0; c < 9; ++c) {
              vv[c] += d(i, m) * f1[c] + d(j, m) * f2[9 + c];
            }
          }
          axpy(scale, vv, out);
        }

        // non-conservative volume term phi * (D^S B)
        double div_b = 0.0;
        for (int m = 0; m < n1; ++m) {
          div_b += d(i, m) * u.node(e, m, j)[kMagX] + d(j, m) * u.node(e, i, m)[kMagY];
        }
        const Vec9 phi = janhunen_vector(u.state_at(e, i, j));
        axpy(-scale * div_b, phi, out);

        for (int c = 0; c < 9; ++c) out[c] += adv[n][c] + visc[n][c] + nc[n][c];

        // psi damping and optional analytic source, in physical units
        out[kPsi] -= gas.alpha * u.node(e, i, j)[kPsi];
        if (mode.source) {
          const Vec9 s = mode.source(mesh.x(e, i, j), mesh.y(e, i, j), t);
          for (int c = 0; c < 9; ++c) out[c] += s[c];
        }
        dudt.set_vec(e, i, j, out);
      }
    }
  });
}

}  // namespace esdg
