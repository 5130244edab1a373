#pragma once

#include <cmath>
#include <stdexcept>

#include "catext/quadrature.hpp"
#include "catext/simplices.hpp"

namespace catext {

namespace detail {

constexpr double kTangentStep = 1e-5;

// Tangent of the simplex pulled back to the Lie algebra: central difference
// in the embedding followed by the left-translation differential at the
// point. The difference step may sample slightly outside the triangle; the
// simplex formulas are defined there.
inline Vec pulled_tangent(const ChartedLieGroup& g, const SimplexMap& sigma, const Vec& p,
                          double t, double s, bool along_t) {
  double d = kTangentStep;
  Vec hi = along_t ? sigma.at(t + d, s) : sigma.at(t, s + d);
  Vec lo = along_t ? sigma.at(t - d, s) : sigma.at(t, s - d);
  Vec v = vec_scale(1.0 / (2.0 * d), vec_sub(hi, lo));
  return g.pullback(p, v);
}

inline void check_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) {
      Report rep;
      rep.fail("integral.not-finite", "()");
      throw Refusal("integrand produced a non-finite value", rep);
    }
}

}  // namespace detail

// Integral of the left-invariant 2-form with value omega over an arity-2
// simplex: sum of w * omega(pullback d_t sigma, pullback d_s sigma) over a
// triangle Gauss rule. Summation order is the fixed rule order, so results
// are bitwise reproducible.
inline Vec integrate_form(const ChartedLieGroup& g, const LieAlgebraCocycle& omega,
                          const SimplexMap& sigma, int quad_order = 10) {
  if (sigma.arity != 2) throw std::invalid_argument("form integration needs an arity-2 simplex");
  if (omega.n != g.dim) throw std::invalid_argument("cocycle dimension mismatch");
  Vec acc(omega.m, 0.0);
  for (const auto& pt : triangle_rule(quad_order)) {
    Vec p = sigma.at(pt.t, pt.s);
    Vec vt = detail::pulled_tangent(g, sigma, p, pt.t, pt.s, true);
    Vec vs = detail::pulled_tangent(g, sigma, p, pt.t, pt.s, false);
    Vec val = omega.omega(vt, vs);
    detail::check_finite(val);
    acc = vec_add(acc, vec_scale(pt.w, val));
  }
  return acc;
}

// Line integral of the left-invariant 1-form b along an arity-1 simplex;
// b is an m x n matrix acting on algebra coordinates.
inline Vec integrate_one_form(const ChartedLieGroup& g, const std::vector<Vec>& b,
                              const SimplexMap& sigma, int quad_order = 10) {
  if (sigma.arity != 1) throw std::invalid_argument("line integration needs an arity-1 simplex");
  std::size_t m = b.size();
  Vec acc(m, 0.0);
  auto rule = gauss_legendre_01(quad_order);
  for (int i = 0; i < quad_order; ++i) {
    double t = rule.nodes[i];
    Vec p = sigma.at(t);
    Vec v = detail::pulled_tangent(g, sigma, p, t, 0.0, true);
    for (std::size_t k = 0; k < m; ++k) {
      double val = 0.0;
      for (int j = 0; j < g.dim; ++j) val += b[k][j] * v[j];
      acc[k] += rule.weights[i] * val;
    }
  }
  detail::check_finite(acc);
  return acc;
}

// The group 2-cochain attached to omega and the chart triangles: the
// integral of omega^l over the triangle filling (g, h, gh).
inline Vec pair_integral(const ChartedLieGroup& g, const LieAlgebraCocycle& omega,
                         const Vec& el_g, const Vec& el_h, int quad_order = 10) {
  return integrate_form(g, omega, beta_simplex(g, el_g, el_h), quad_order);
}

// Group differential of the pair integral at a triple. Vanishes up to
// quadrature error whenever omega satisfies the algebra cocycle identity
// and the group has no spheres to wrap (finite-dimensional case).
inline Vec triple_defect(const ChartedLieGroup& g, const LieAlgebraCocycle& omega,
                         const Vec& el_g, const Vec& el_h, const Vec& el_k,
                         int quad_order = 10) {
  Vec gh = g.mult(el_g, el_h);
  Vec hk = g.mult(el_h, el_k);
  Vec out = pair_integral(g, omega, el_h, el_k, quad_order);
  out = vec_sub(out, pair_integral(g, omega, gh, el_k, quad_order));
  out = vec_add(out, pair_integral(g, omega, el_g, hk, quad_order));
  out = vec_sub(out, pair_integral(g, omega, el_g, el_h, quad_order));
  return out;
}

// Potential of a linear map b on the algebra: the line integral of b^l
// along the chart line of the element. On a chart whose lines are
// one-parameter subgroups this equals b(chart(el)) exactly.
inline Vec linear_potential(const ChartedLieGroup& g, const std::vector<Vec>& b, const Vec& el,
                            int quad_order = 10) {
  return integrate_one_form(g, b, alpha_simplex(g, el), quad_order);
}

// Integral of omega^l over a map of the unit square collapsing its whole
// boundary to one point (a sphere in the group). The boundary is sampled
// first and a non-constant boundary is refused.
inline Vec sphere_integral(const ChartedLieGroup& g, const LieAlgebraCocycle& omega,
                           const SimplexMap& sigma, int quad_order = 10,
                           double boundary_tol = 1e-9) {
  if (sigma.arity != 2) throw std::invalid_argument("sphere integration needs an arity-2 map");
  Vec corner = sigma.at(0.0, 0.0);
  const int kBoundarySamples = 64;
  for (int i = 0; i <= kBoundarySamples; ++i) {
    double u = static_cast<double>(i) / kBoundarySamples;
    for (const Vec& p : {sigma.at(u, 0.0), sigma.at(u, 1.0), sigma.at(0.0, u), sigma.at(1.0, u)})
      if (vec_max_abs(vec_sub(p, corner)) > boundary_tol) {
        Report rep;
        rep.fail("sphere.boundary-not-constant", param_str(u, u));
        throw Refusal("square map does not collapse its boundary", rep);
      }
  }
  Vec acc(omega.m, 0.0);
  for (const auto& pt : square_rule(quad_order)) {
    Vec p = sigma.at(pt.t, pt.s);
    Vec vt = detail::pulled_tangent(g, sigma, p, pt.t, pt.s, true);
    Vec vs = detail::pulled_tangent(g, sigma, p, pt.t, pt.s, false);
    Vec val = omega.omega(vt, vs);
    detail::check_finite(val);
    acc = vec_add(acc, vec_scale(pt.w, val));
  }
  return acc;
}

// A charted group, an algebra cocycle, and the derived group cochain with
// its numeric knobs bundled for the differentiation step.
struct SmoothGeneralizedCocycle {
  ChartedLieGroup group;
  LieAlgebraCocycle omega;
  int quad_order = 10;

  Vec pair_value(const Vec& el_g, const Vec& el_h) const {
    return pair_integral(group, omega, el_g, el_h, quad_order);
  }
};

// Antisymmetrized mixed second derivative of the pair integral along chart
// rays: the bilinear leading term of the cochain, recovered by central
// differences of half-width fd_step. Skew in (x, y) by construction.
inline Vec derived_algebra_cocycle(const SmoothGeneralizedCocycle& f, const Vec& x, const Vec& y,
                                   double fd_step = 1e-3) {
  if (fd_step <= 0.0) throw std::invalid_argument("differentiation step must be positive");
  auto e = [&](double t, const Vec& v) { return f.group.chart_inv(vec_scale(t, v)); };
  auto mixed = [&](const Vec& a, const Vec& b) {
    double h = fd_step;
    Vec out = f.pair_value(e(h, a), e(h, b));
    out = vec_sub(out, f.pair_value(e(h, a), e(-h, b)));
    out = vec_sub(out, f.pair_value(e(-h, a), e(h, b)));
    out = vec_add(out, f.pair_value(e(-h, a), e(-h, b)));
    return vec_scale(1.0 / (4.0 * h * h), out);
  };
  return vec_sub(mixed(x, y), mixed(y, x));
}

}  // namespace catext
