#ifndef ESDGMHD_SBP_HPP
#define ESDGMHD_SBP_HPP

#include <utility>
#include <vector>

#include "esdgmhd/types.hpp"

namespace esdg {

/// Legendre-Gauss-Lobatto collocation operators on [-1,1].
///
/// With M = diag(weights) and Q = M D, the operators satisfy the
/// summation-by-parts identity Q + Q^T = B = diag(-1, 0, ..., 0, 1),
/// the discrete analogue of integration by parts.
struct SbpOperators {
  int order = 0;                 // polynomial degree N
  std::vector<double> nodes;     // N+1 LGL nodes, increasing, nodes[0] = -1
  std::vector<double> weights;   // N+1 positive quadrature weights
  Matrix dmat;                   // derivative matrix D_ij = l_j'(xi_i)
  Matrix qmat;                   // Q = M D
  // mass matrix: diag(weights); boundary matrix: diag(-1,0,...,0,1)
};

/// LGL nodes and weights; quadrature is exact for degree <= 2*order - 1.
/// Throws std::invalid_argument for order < 1.
std::pair<std::vector<double>, std::vector<double>> lgl_nodes_weights(int order);

/// Lagrange derivative matrix by barycentric differentiation. Row sums are
/// exactly zero by the negative-sum trick on the diagonal.
Matrix derivative_matrix(const std::vector<double>& nodes);

SbpOperators build_sbp_operators(int order);

}  // namespace esdg

#endif
