#pragma once

#include <random>

#include "catext/derived_bracket.hpp"
#include "catext/form_integration.hpp"

namespace catext {

struct PipelineResult {
  double max_deviation = 0.0;
  int quad_order = 10;
  double fd_step = 1e-3;
};

// End-to-end reconstruction of the Heisenberg algebra from its central
// quotient: start from the symplectic cocycle on R^2, integrate it to the
// group pair cochain, form the object product on R x R^2 twisted by that
// cochain, and differentiate back to structure constants. The reported
// number is the worst deviation from [(z,x),(w,y)] = (x1 y2 - x2 y1, 0).
inline PipelineResult heisenberg_reconstruction(int quad_order = 10, double fd_step = 1e-3) {
  auto base = charted_r(2);
  LieAlgebraCocycle symplectic{2, 1, [](const Vec& x, const Vec& y) {
                                 return Vec{x[0] * y[1] - x[1] * y[0]};
                               }};
  SmoothGeneralizedCocycle fw{base, symplectic, quad_order};
  // objects of the twisted product, coordinates (z, x1, x2)
  auto objects = [fw](const Vec& a, const Vec& b) {
    Vec x{a[1], a[2]}, y{b[1], b[2]};
    Vec f = fw.pair_value(x, y);
    return Vec{a[0] + b[0] + f[0], a[1] + b[1], a[2] + b[2]};
  };
  BracketTable derived = derived_bracket(objects, 3, fd_step);
  BracketTable expected(3, std::vector<Vec>(3, Vec(3, 0.0)));
  expected[0][1][2] = 1.0;
  expected[0][2][1] = -1.0;
  PipelineResult out;
  out.quad_order = quad_order;
  out.fd_step = fd_step;
  out.max_deviation = bracket_table_distance(derived, expected);
  // the builtin carries the same algebra with the central axis last
  BracketTable h = derived_bracket(chart_product(charted_heisenberg()), 3, fd_step);
  BracketTable reordered(3, std::vector<Vec>(3, Vec(3, 0.0)));
  auto perm = [](int i) { return i == 0 ? 2 : i - 1; };  // (z,x1,x2) -> (x1,x2,z)
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) reordered[k][i][j] = h[perm(k)][perm(i)][perm(j)];
  out.max_deviation = std::max(out.max_deviation, bracket_table_distance(derived, reordered));
  return out;
}

// Naturality of the exponential against a group homomorphism given as an
// embedded map with its algebra differential: compares hom(chart_inv(x))
// with chart_inv(dhom(x)) over random algebra samples in a ball.
inline double exp_naturality_check(const ChartedLieGroup& src, const ChartedLieGroup& tgt,
                                   const std::function<Vec(const Vec&)>& hom,
                                   const std::function<Vec(const Vec&)>& dhom, int samples,
                                   double radius = 1.0, unsigned seed = 4242) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    Vec x(src.dim);
    for (double& c : x) c = coord(rng) * radius / std::sqrt(static_cast<double>(src.dim));
    Vec through_group = hom(src.chart_inv(x));
    Vec through_algebra = tgt.chart_inv(dhom(x));
    dev = std::max(dev, vec_max_abs(vec_sub(through_group, through_algebra)));
  }
  return dev;
}

}  // namespace catext
