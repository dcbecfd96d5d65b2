#ifndef ESDGMHD_MESH_HPP
#define ESDGMHD_MESH_HPP

#include <array>
#include <vector>

#include "esdgmhd/sbp.hpp"

namespace esdg {

struct DomainBounds {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
};

// face ids of an element
inline constexpr int kFaceWest = 0;
inline constexpr int kFaceEast = 1;
inline constexpr int kFaceSouth = 2;
inline constexpr int kFaceNorth = 3;

/// Uniform periodic Cartesian mesh of square elements.
///
/// Elements are indexed row-major in (ix, iy): e = ix * ky + iy. Within an
/// element, nodes are indexed (i, j) with i along x; the packed node index is
/// i * (N+1) + j. Dump files follow this ordering.
struct CartesianMesh {
  int kx = 0, ky = 0;
  int order = 0;
  DomainBounds bounds;
  double dx = 0.0;        // element edge length, equal in both directions
  double jacobian = 0.0;  // dx^2 / 4
  std::vector<double> node_x;  // per element-node physical coordinates
  std::vector<double> node_y;
  std::vector<std::array<int, 4>> neighbors;  // periodic neighbor per face

  int num_elements() const { return kx * ky; }
  int n1() const { return order + 1; }
  int nodes_per_element() const { return n1() * n1(); }

  int element_index(int ix, int iy) const { return ix * ky + iy; }
  int node_index(int e, int i, int j) const { return e * nodes_per_element() + i * n1() + j; }

  double x(int e, int i, int j) const { return node_x[node_index(e, i, j)]; }
  double y(int e, int i, int j) const { return node_y[node_index(e, i, j)]; }
};

/// Throws std::invalid_argument if the requested subdivision does not give
/// square elements (the constant-Jacobian metric terms assume dx == dy).
CartesianMesh build_mesh(const DomainBounds& bounds, int kx, int ky, const SbpOperators& ops);

}  // namespace esdg

#endif
