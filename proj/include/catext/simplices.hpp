#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <utility>

#include "catext/charted_group.hpp"
#include "catext/report.hpp"

namespace catext {

inline std::string param_str(double t, double s) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(t=%.6g,s=%.6g)", t, s);
  return buf;
}

// Singular simplex into the group: a path for arity 1 (second parameter
// ignored), a triangle {t,s >= 0, t+s <= 1} for arity 2. Formulas stay
// valid slightly outside the triangle, which the tangent differencing uses.
struct SimplexMap {
  int arity = 1;
  std::string tag;
  std::function<Vec(double, double)> eval;

  Vec at(double t, double s = 0.0) const { return eval(t, s); }
};

namespace detail {

[[noreturn]] inline void domain_escape(double t, double s) {
  Report rep;
  rep.fail("simplex.domain-escape", param_str(t, s));
  throw Refusal("simplex leaves the chart domain", rep);
}

// Elements outside the chart get no simplex at all; extending by an
// arbitrary path would silently change every downstream integral.
inline Vec chart_or_refuse(const ChartedLieGroup& g, const Vec& el) {
  try {
    return g.chart(el);
  } catch (const std::domain_error&) {
    Report rep;
    rep.fail("simplex.element-outside-chart", "(" + g.name + ")");
    throw Refusal("element outside the chart domain", rep);
  }
}

}  // namespace detail

// Straight chart line from the unit to g: t -> chart_inv(t * chart(g)).
inline SimplexMap alpha_simplex(const ChartedLieGroup& g, const Vec& el) {
  Vec gt = detail::chart_or_refuse(g, el);
  auto inv_chart = g.chart_inv;
  return {1, "alpha", [inv_chart, gt](double t, double) {
            return inv_chart(vec_scale(t, gt));
          }};
}

// Triangle filling the path triple (g, h, gh). With * the chart-level
// product, the map is chart_inv(t*(g~ * s h~) + s*(g~ * (1-t) h~)); its
// edges are alpha_g at s = 0, alpha_gh at t = 0, and the left translate
// g.alpha_h along t + s = 1.
inline SimplexMap beta_simplex(const ChartedLieGroup& g, const Vec& el_g, const Vec& el_h) {
  detail::chart_or_refuse(g, el_g);
  Vec ht = detail::chart_or_refuse(g, el_h);
  ChartedLieGroup grp = g;
  Vec gcopy = el_g;
  return {2, "beta", [grp, gcopy, ht](double t, double s) {
            try {
              Vec a = grp.chart(grp.mult(gcopy, grp.chart_inv(vec_scale(s, ht))));
              Vec b = grp.chart(grp.mult(gcopy, grp.chart_inv(vec_scale(1.0 - t, ht))));
              return grp.chart_inv(vec_add(vec_scale(t, a), vec_scale(s, b)));
            } catch (const std::domain_error&) {
              detail::domain_escape(t, s);
            }
          }};
}

// Triangle comparing the chart line of `first` against the chart line of
// `second` for the same group element. Edges: the first chart's line at
// s = 0, the second chart's line at t = 0, and a constant edge at the
// element along t + s = 1. The scalar factor has a removable singularity
// at t + s = 0 with limit the unit.
inline SimplexMap gamma_simplex(const ChartedLieGroup& first, const ChartedLieGroup& second,
                                const Vec& el) {
  Vec gt = detail::chart_or_refuse(first, el);
  Vec gb = detail::chart_or_refuse(second, el);
  ChartedLieGroup f = first;
  ChartedLieGroup snd = second;
  return {2, "gamma", [f, snd, gt, gb](double t, double s) {
            if (t + s < 1e-8) return f.chart_inv(vec_scale(0.0, gt));
            try {
              Vec mid = f.chart(snd.chart_inv(vec_scale(t + s, gb)));
              Vec x = vec_add(vec_scale(s * (1.0 - t) / (t + s), mid),
                              vec_scale(t * (1.0 + s), gt));
              return f.chart_inv(x);
            } catch (const std::domain_error&) {
              detail::domain_escape(t, s);
            }
          }};
}

// The three boundary paths of an arity-2 simplex, oriented so that the
// chain reads edge_start + edge_far - edge_end (for beta_{g,h}: alpha_g +
// g.alpha_h - alpha_gh).
struct SimplexEdges {
  SimplexMap start;
  SimplexMap far;
  SimplexMap end;
};

inline SimplexEdges simplex_edges(const SimplexMap& sigma) {
  if (sigma.arity != 2) throw std::invalid_argument("edges need an arity-2 simplex");
  auto e = sigma.eval;
  return {{1, sigma.tag + ".start", [e](double t, double) { return e(t, 0.0); }},
          {1, sigma.tag + ".far", [e](double t, double) { return e(1.0 - t, t); }},
          {1, sigma.tag + ".end", [e](double t, double) { return e(0.0, t); }}};
}

namespace detail {

inline double max_point_dev(const SimplexMap& a, const SimplexMap& b, int samples) {
  double dev = 0.0;
  for (int i = 0; i <= samples; ++i) {
    double t = static_cast<double>(i) / samples;
    dev = std::max(dev, vec_max_abs(vec_sub(a.at(t), b.at(t))));
  }
  return dev;
}

}  // namespace detail

// Sampled deviations of the repeated-argument triangle beta_{g,g}(t,s)
// from the two candidate reparametrizations of alpha_g. Under the local
// condition tx * sx = (t+s)x the formula collapses to alpha_g(t + 2s),
// not alpha_g(t + s); both numbers are reported, none is enforced.
struct RepeatedArgumentCheck {
  double dev_alpha_t_plus_s = 0.0;
  double dev_alpha_t_plus_2s = 0.0;
};

inline RepeatedArgumentCheck repeated_argument_check(const ChartedLieGroup& g, const Vec& el,
                                                     int samples = 16) {
  auto beta = beta_simplex(g, el, el);
  auto alpha = alpha_simplex(g, el);
  RepeatedArgumentCheck out;
  for (int i = 0; i <= samples; ++i)
    for (int j = 0; i + j <= samples; ++j) {
      double t = static_cast<double>(i) / samples;
      double s = static_cast<double>(j) / samples;
      Vec b = beta.at(t, s);
      out.dev_alpha_t_plus_s =
          std::max(out.dev_alpha_t_plus_s, vec_max_abs(vec_sub(b, alpha.at(t + s))));
      out.dev_alpha_t_plus_2s =
          std::max(out.dev_alpha_t_plus_2s, vec_max_abs(vec_sub(b, alpha.at(t + 2.0 * s))));
    }
  return out;
}

// Sampled edge identification for the two-chart triangle: the start edge
// against the first chart's line, the end edge against the second chart's
// line, and the far edge against the constant path at the element. A small
// third number certifies that the boundary is the two chart lines plus a
// degenerate path, not the two chart lines alone.
struct ChartComparisonBoundary {
  double dev_start_vs_first_line = 0.0;
  double dev_end_vs_second_line = 0.0;
  double dev_far_vs_constant = 0.0;
};

inline ChartComparisonBoundary gamma_boundary_check(const ChartedLieGroup& first,
                                                    const ChartedLieGroup& second, const Vec& el,
                                                    int samples = 32) {
  auto gamma = gamma_simplex(first, second, el);
  auto edges = simplex_edges(gamma);
  ChartComparisonBoundary out;
  out.dev_start_vs_first_line =
      detail::max_point_dev(edges.start, alpha_simplex(first, el), samples);
  out.dev_end_vs_second_line =
      detail::max_point_dev(edges.end, alpha_simplex(second, el), samples);
  SimplexMap constant{1, "const", [el](double, double) { return el; }};
  out.dev_far_vs_constant = detail::max_point_dev(edges.far, constant, samples);
  return out;
}

}  // namespace catext
