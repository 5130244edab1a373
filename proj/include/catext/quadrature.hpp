#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace catext {

struct QuadratureRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [0,1]. Nodes are Legendre roots found by Newton
// iteration from the Chebyshev initial guess; exact for polynomials of
// degree 2*order - 1.
inline QuadratureRule1D gauss_legendre_01(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  QuadratureRule1D r;
  r.nodes.resize(order);
  r.weights.resize(order);
  int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P_n'(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map [-1,1] to [0,1]; symmetry fills the mirrored node
    r.nodes[i] = 0.5 * (1.0 - x);
    r.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    r.weights[i] = 0.5 * w;
    r.weights[n - 1 - i] = 0.5 * w;
  }
  return r;
}

struct QuadraturePoint2D {
  double t;
  double s;
  double w;
};

// Rule on the triangle {t,s >= 0, t+s <= 1} by collapsing the unit square:
// t = u*(1-v), s = v, with Jacobian (1-v). Weights sum to the area 1/2.
inline std::vector<QuadraturePoint2D> triangle_rule(int order) {
  auto g = gauss_legendre_01(order);
  std::vector<QuadraturePoint2D> pts;
  pts.reserve(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      double u = g.nodes[i], v = g.nodes[j];
      pts.push_back({u * (1.0 - v), v, g.weights[i] * g.weights[j] * (1.0 - v)});
    }
  return pts;
}

// Tensor rule on the unit square, for maps collapsing the boundary.
inline std::vector<QuadraturePoint2D> square_rule(int order) {
  auto g = gauss_legendre_01(order);
  std::vector<QuadraturePoint2D> pts;
  pts.reserve(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      pts.push_back({g.nodes[i], g.nodes[j], g.weights[i] * g.weights[j]});
  return pts;
}

}  // namespace catext
