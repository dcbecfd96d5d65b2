#include "esdgmhd/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace esdg {

CartesianMesh build_mesh(const DomainBounds& bounds, int kx, int ky, const SbpOperators& ops) {
  if (kx < 1 || ky < 1) throw std::invalid_argument("build_mesh: kx, ky must be >= 1");
  const double dx = (bounds.x1 - bounds.x0) / kx;
  const double dy = (bounds.y1 - bounds.y0) / ky;
  if (!(dx > 0.0) || std::abs(dx - dy) > 1e-12 * std::max(std::abs(dx), 1.0)) {
    throw std::invalid_argument("build_mesh: elements must be square (dx == dy)");
  }

  CartesianMesh mesh;
  mesh.kx = kx;
  mesh.ky = ky;
  mesh.order = ops.order;
  mesh.bounds = bounds;
  mesh.dx = dx;
  mesh.jacobian = dx * dx / 4.0;

  const int n1 = ops.order + 1;
  mesh.node_x.resize(static_cast<size_t>(kx) * ky * n1 * n1);
  mesh.node_y.resize(mesh.node_x.size());
  mesh.neighbors.resize(static_cast<size_t>(kx) * ky);

  for (int ix = 0; ix < kx; ++ix) {
    for (int iy = 0; iy < ky; ++iy) {
      const int e = mesh.element_index(ix, iy);
      const double cx = bounds.x0 + ix * dx;
      const double cy = bounds.y0 + iy * dx;
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
          const int n = mesh.node_index(e, i, j);
          mesh.node_x[n] = cx + 0.5 * dx * (ops.nodes[i] + 1.0);
          mesh.node_y[n] = cy + 0.5 * dx * (ops.nodes[j] + 1.0);
        }
      }
      auto wrap = [](int a, int k) { return (a % k + k) % k; };
      mesh.neighbors[e][kFaceWest] = mesh.element_index(wrap(ix - 1, kx), iy);
      mesh.neighbors[e][kFaceEast] = mesh.element_index(wrap(ix + 1, kx), iy);
      mesh.neighbors[e][kFaceSouth] = mesh.element_index(ix, wrap(iy - 1, ky));
      mesh.neighbors[e][kFaceNorth] = mesh.element_index(ix, wrap(iy + 1, ky));
    }
  }
  return mesh;
}

}  // namespace esdg
