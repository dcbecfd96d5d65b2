#include "esdgmhd/sbp.hpp"

#include <cmath>
#include <stdexcept>

namespace esdg {

namespace {

// P_N(x) and its first two derivatives via the three-term recurrence.
struct Legendre {
  double p, dp, ddp;
};

Legendre legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  // (1-x^2) P_N' = N (P_{N-1} - x P_N); valid at interior points
  const double omx2 = 1.0 - x * x;
  const double dp = n * (p0 - x * p1) / omx2;
  const double ddp = (2.0 * x * dp - n * (n + 1.0) * p1) / omx2;
  return {p1, dp, ddp};
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> lgl_nodes_weights(int order) {
  if (order < 1) {
    throw std::invalid_argument("lgl_nodes_weights: order must be >= 1 "
                                "(the split volume kernel needs interior coupling)");
  }
  const int n1 = order + 1;
  std::vector<double> nodes(n1), weights(n1);
  nodes[0] = -1.0;
  nodes[order] = 1.0;
  // interior nodes are the roots of P_N'; Newton from Chebyshev-Lobatto guesses
  for (int k = 1; k < order; ++k) {
    double x = -std::cos(M_PI * k / order);
    for (int it = 0; it < 100; ++it) {
      const Legendre lg = legendre(order, x);
      const double dx = lg.dp / lg.ddp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[k] = x;
  }
  // enforce exact symmetry of the node set
  for (int k = 1; k < order; ++k) {
    const int m = order - k;
    if (k < m) {
      const double s = 0.5 * (nodes[m] - nodes[k]);
      nodes[k] = -s;
      nodes[m] = s;
    } else if (k == m) {
      nodes[k] = 0.0;
    }
  }
  const double c = 2.0 / (order * (order + 1.0));
  for (int k = 0; k <= order; ++k) {
    double pn;
    if (k == 0 || k == order) {
      pn = (k == 0 && order % 2 == 1) ? -1.0 : 1.0;
    } else {
      pn = legendre(order, nodes[k]).p;
    }
    weights[k] = c / (pn * pn);
  }
  return {std::move(nodes), std::move(weights)};
}

Matrix derivative_matrix(const std::vector<double>& nodes) {
  const int n1 = static_cast<int>(nodes.size());
  std::vector<double> lambda(n1, 1.0);  // barycentric weights
  for (int j = 0; j < n1; ++j) {
    for (int k = 0; k < n1; ++k) {
      if (k != j) lambda[j] /= (nodes[j] - nodes[k]);
    }
  }
  Matrix d(n1, n1);
  for (int i = 0; i < n1; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n1; ++j) {
      if (j == i) continue;
      d(i, j) = (lambda[j] / lambda[i]) / (nodes[i] - nodes[j]);
      diag -= d(i, j);
    }
    d(i, i) = diag;
  }
  return d;
}

SbpOperators build_sbp_operators(int order) {
  SbpOperators ops;
  ops.order = order;
  auto [nodes, weights] = lgl_nodes_weights(order);
  ops.nodes = std::move(nodes);
  ops.weights = std::move(weights);
  ops.dmat = derivative_matrix(ops.nodes);
  const int n1 = order + 1;
  ops.qmat = Matrix(n1, n1);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) ops.qmat(i, j) = ops.weights[i] * ops.dmat(i, j);
  }
  return ops;
}

}  // namespace esdg
