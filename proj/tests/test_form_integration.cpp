#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "catext/form_integration.hpp"

using namespace catext;

namespace {

Vec random_coords(std::mt19937& rng, int n, double radius) {
  std::uniform_real_distribution<double> c(-radius, radius);
  Vec out(n);
  for (double& x : out) x = c(rng);
  return out;
}

// skew table with entries in [-1, 1]
LieAlgebraCocycle random_skew_cocycle(std::mt19937& rng, int m, int n) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::vector<std::vector<Vec>> t(m, std::vector<Vec>(n, Vec(n, 0.0)));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double v = c(rng);
        t[k][i][j] = v;
        t[k][j][i] = -v;
      }
  return lie_cocycle_from_table(t);
}

std::vector<Vec> random_rows(std::mt19937& rng, int m, int n) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::vector<Vec> rows(m, Vec(n));
  for (auto& r : rows)
    for (double& x : r) x = c(rng);
  return rows;
}

LieAlgebraCocycle planar_symplectic() {
  return {2, 1, [](const Vec& x, const Vec& y) { return Vec{x[0] * y[1] - x[1] * y[0]}; }};
}

}  // namespace

TEST_CASE("planar pair integral matches the closed form") {
  auto g = charted_r(2);
  auto omega = planar_symplectic();
  for (int order : {2, 4, 10}) {
    Vec f = pair_integral(g, omega, {1.0, 0.0}, {0.0, 1.0}, order);
    REQUIRE(std::abs(f[0] - 0.5) < 1e-10);
  }
  std::mt19937 rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    Vec a = random_coords(rng, 2, 2.0), b = random_coords(rng, 2, 2.0);
    Vec f = pair_integral(g, omega, a, b);
    double expect = 0.5 * (a[0] * b[1] - a[1] * b[0]);
    REQUIRE(std::abs(f[0] - expect) < 1e-10);
  }
}

TEST_CASE("planar triple defect vanishes") {
  auto g = charted_r(2);
  auto omega = planar_symplectic();
  std::mt19937 rng(302);
  for (int trial = 0; trial < 20; ++trial) {
    Vec a = random_coords(rng, 2, 2.0);
    Vec b = random_coords(rng, 2, 2.0);
    Vec c = random_coords(rng, 2, 2.0);
    REQUIRE(vec_max_abs(triple_defect(g, omega, a, b, c)) < 1e-10);
  }
}

TEST_CASE("unit arguments integrate to zero on every builtin") {
  std::mt19937 rng(303);
  std::vector<ChartedLieGroup> groups = {charted_r(2),  charted_r(3),     charted_heisenberg(),
                                         charted_su2(), charted_u2(),     charted_circle()};
  for (const auto& g : groups) {
    INFO(g.name);
    auto omega = random_skew_cocycle(rng, 2, g.dim);
    for (int trial = 0; trial < 5; ++trial) {
      Vec el = g.chart_inv(random_coords(rng, g.dim, 0.5));
      REQUIRE(vec_max_abs(pair_integral(g, omega, g.unit, el)) < 1e-10);
      REQUIRE(vec_max_abs(pair_integral(g, omega, el, g.unit)) < 1e-10);
    }
  }
}

TEST_CASE("doubling the quadrature order leaves the value in place") {
  std::mt19937 rng(304);
  auto su2 = charted_su2();
  auto omega = bracket_coboundary(su2, random_rows(rng, 2, 3));
  for (int trial = 0; trial < 5; ++trial) {
    Vec a = su2.chart_inv(random_coords(rng, 3, 0.4));
    Vec b = su2.chart_inv(random_coords(rng, 3, 0.4));
    Vec f10 = pair_integral(su2, omega, a, b, 10);
    Vec f20 = pair_integral(su2, omega, a, b, 20);
    REQUIRE(vec_max_abs(vec_sub(f10, f20)) < 1e-8);
  }
  auto h = charted_heisenberg();
  LieAlgebraCocycle sym{3, 1,
                        [](const Vec& x, const Vec& y) { return Vec{x[0] * y[1] - x[1] * y[0]}; }};
  Vec a = h.chart_inv({0.3, -0.5, 0.2});
  Vec b = h.chart_inv({-0.1, 0.4, 0.6});
  REQUIRE(vec_max_abs(vec_sub(pair_integral(h, sym, a, b, 10), pair_integral(h, sym, a, b, 20))) <
          1e-8);
}

TEST_CASE("the linear potential recovers the linear map on chart lines") {
  std::mt19937 rng(305);
  auto su2 = charted_su2();
  auto rows = random_rows(rng, 2, 3);
  for (int trial = 0; trial < 8; ++trial) {
    Vec x = random_coords(rng, 3, 1.2);
    Vec phi = linear_potential(su2, rows, su2.chart_inv(x));
    for (int k = 0; k < 2; ++k) {
      double expect = 0.0;
      for (int j = 0; j < 3; ++j) expect += rows[k][j] * x[j];
      REQUIRE(std::abs(phi[k] - expect) < 1e-8);
    }
  }
}

TEST_CASE("a coboundary cocycle integrates to minus the potential differential") {
  // omega = b([x, y]) gives F(g, h) = -(phi(h) - phi(gh) + phi(g)) with
  // phi the line potential of b; the sign is fixed by the triangle
  // orientation used in pair_integral.
  std::mt19937 rng(306);
  auto su2 = charted_su2();
  auto rows = random_rows(rng, 2, 3);
  auto omega = bracket_coboundary(su2, rows);
  for (int trial = 0; trial < 6; ++trial) {
    Vec a = su2.chart_inv(random_coords(rng, 3, 0.28));
    Vec b = su2.chart_inv(random_coords(rng, 3, 0.28));
    Vec f = pair_integral(su2, omega, a, b);
    Vec dphi = linear_potential(su2, rows, b);
    dphi = vec_sub(dphi, linear_potential(su2, rows, su2.mult(a, b)));
    dphi = vec_add(dphi, linear_potential(su2, rows, a));
    REQUIRE(vec_max_abs(vec_add(f, dphi)) < 1e-5);
  }
  auto h = charted_heisenberg();
  auto hrows = random_rows(rng, 1, 3);
  auto homega = bracket_coboundary(h, hrows);
  Vec a = h.chart_inv({0.4, -0.3, 0.25});
  Vec b = h.chart_inv({-0.2, 0.5, -0.35});
  Vec f = pair_integral(h, homega, a, b);
  Vec dphi = linear_potential(h, hrows, b);
  dphi = vec_sub(dphi, linear_potential(h, hrows, h.mult(a, b)));
  dphi = vec_add(dphi, linear_potential(h, hrows, a));
  REQUIRE(vec_max_abs(vec_add(f, dphi)) < 1e-8);
}

TEST_CASE("triple defect stays small for algebra cocycles") {
  std::mt19937 rng(307);
  auto su2 = charted_su2();
  auto omega = bracket_coboundary(su2, random_rows(rng, 2, 3));
  for (int trial = 0; trial < 5; ++trial) {
    Vec a = su2.chart_inv(random_coords(rng, 3, 0.28));
    Vec b = su2.chart_inv(random_coords(rng, 3, 0.28));
    Vec c = su2.chart_inv(random_coords(rng, 3, 0.28));
    REQUIRE(vec_max_abs(triple_defect(su2, omega, a, b, c)) < 1e-6);
  }
  auto h = charted_heisenberg();
  LieAlgebraCocycle sym{3, 1,
                        [](const Vec& x, const Vec& y) { return Vec{x[0] * y[1] - x[1] * y[0]}; }};
  Vec a = h.chart_inv({0.6, -0.4, 0.3});
  Vec b = h.chart_inv({-0.2, 0.7, -0.5});
  Vec c = h.chart_inv({0.45, 0.15, -0.3});
  REQUIRE(vec_max_abs(triple_defect(h, sym, a, b, c)) < 1e-10);
}

TEST_CASE("changing charts shifts the pair integral by a potential differential") {
  // a second chart on the plane, bent along a cubic; its algebra
  // coordinates agree with the straight chart at the unit
  auto base = charted_r(2);
  ChartedLieGroup bent = base;
  bent.name = "r2-bent";
  bent.chart = [](const Vec& p) { return Vec{p[0] + 0.4 * p[1] * p[1] * p[1], p[1]}; };
  bent.chart_inv = [](const Vec& x) { return Vec{x[0] - 0.4 * x[1] * x[1] * x[1], x[1]}; };
  auto omega = planar_symplectic();
  std::mt19937 rng(308);
  for (int trial = 0; trial < 5; ++trial) {
    Vec a = random_coords(rng, 2, 0.9);
    Vec b = random_coords(rng, 2, 0.9);
    Vec ab = base.mult(a, b);
    double f_straight = pair_integral(base, omega, a, b)[0];
    double f_bent = integrate_form(base, omega, beta_simplex(bent, a, b))[0];
    auto potential = [&](const Vec& el) {
      return integrate_form(base, omega, gamma_simplex(base, bent, el))[0];
    };
    double dphi = potential(b) - potential(ab) + potential(a);
    REQUIRE(std::abs((f_straight - f_bent) - dphi) < 1e-5);
  }
}

TEST_CASE("sphere integrals vanish for coboundary cocycles") {
  std::mt19937 rng(309);
  auto su2 = charted_su2();
  auto omega = bracket_coboundary(su2, random_rows(rng, 2, 3));
  std::uniform_real_distribution<double> amp(-0.3, 0.3);
  for (int trial = 0; trial < 3; ++trial) {
    double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng), a4 = amp(rng);
    SimplexMap sphere{2, "sphere", [=, g = su2](double t, double s) {
                        double bump = t * (1.0 - t) * s * (1.0 - s);
                        bump = bump * bump;
                        double r1 = bump * (a1 + a3 * t);
                        double r2 = bump * (a2 + a4 * s);
                        Vec p = g.chart_inv({r1, 0.0, 0.0});
                        Vec q = g.chart_inv({0.0, r2, 0.0});
                        return g.mult(p, q);
                      }};
    REQUIRE(vec_max_abs(sphere_integral(su2, omega, sphere)) < 1e-4);
  }
}

TEST_CASE("sphere integrals vanish on the plane") {
  auto g = charted_r(2);
  auto omega = planar_symplectic();
  SimplexMap sphere{2, "bump", [](double t, double s) {
                      double bump = t * (1.0 - t) * s * (1.0 - s);
                      bump = bump * bump;
                      return Vec{bump * (1.0 + 0.5 * t), bump * (0.7 - 0.4 * s)};
                    }};
  REQUIRE(vec_max_abs(sphere_integral(g, omega, sphere)) < 1e-6);
  SimplexMap constant{2, "constant", [](double, double) { return Vec{0.3, -0.2}; }};
  REQUIRE(vec_max_abs(sphere_integral(g, omega, constant)) < 1e-14);
}

TEST_CASE("a square map with a moving boundary is refused") {
  auto g = charted_r(2);
  auto omega = planar_symplectic();
  SimplexMap open_map{2, "open", [](double t, double s) { return Vec{0.3 * t, 0.2 * s}; }};
  try {
    sphere_integral(g, omega, open_map);
    FAIL("expected a refusal");
  } catch (const Refusal& r) {
    REQUIRE(r.report.has("sphere.boundary-not-constant"));
  }
}

TEST_CASE("the derived algebra cocycle recovers the planar form") {
  auto g = charted_r(2);
  auto omega = planar_symplectic();
  SmoothGeneralizedCocycle fw{g, omega, 10};
  Vec d = derived_algebra_cocycle(fw, {1.0, 0.0}, {0.0, 1.0});
  REQUIRE(std::abs(d[0] - 1.0) < 1e-9);
  std::mt19937 rng(310);
  for (int trial = 0; trial < 5; ++trial) {
    Vec x = random_coords(rng, 2, 1.0), y = random_coords(rng, 2, 1.0);
    Vec dv = derived_algebra_cocycle(fw, x, y);
    REQUIRE(std::abs(dv[0] - (x[0] * y[1] - x[1] * y[0])) < 1e-9);
    Vec same = derived_algebra_cocycle(fw, x, x);
    REQUIRE(same[0] == 0.0);
    Vec flipped = derived_algebra_cocycle(fw, y, x);
    REQUIRE(dv[0] == -flipped[0]);
  }
}

TEST_CASE("the derived algebra cocycle converges quadratically on su2") {
  std::mt19937 rng(311);
  auto su2 = charted_su2();
  auto rows = random_rows(rng, 2, 3);
  auto omega = bracket_coboundary(su2, rows);
  SmoothGeneralizedCocycle fw{su2, omega, 10};
  double dev_coarse = 0.0, dev_fine = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    Vec x = random_coords(rng, 3, 1.0), y = random_coords(rng, 3, 1.0);
    Vec expect = omega.omega(x, y);
    Vec coarse = derived_algebra_cocycle(fw, x, y, 1e-3);
    Vec fine = derived_algebra_cocycle(fw, x, y, 5e-4);
    dev_coarse = std::max(dev_coarse, vec_max_abs(vec_sub(coarse, expect)));
    dev_fine = std::max(dev_fine, vec_max_abs(vec_sub(fine, expect)));
  }
  REQUIRE(dev_coarse < 1e-4);
  // quadratic truncation should shrink fourfold; allow a roundoff floor
  REQUIRE(dev_fine < dev_coarse / 3.0 + 1e-9);
}

TEST_CASE("the derived algebra cocycle is bilinear to truncation order") {
  std::mt19937 rng(312);
  auto su2 = charted_su2();
  auto omega = bracket_coboundary(su2, random_rows(rng, 2, 3));
  SmoothGeneralizedCocycle fw{su2, omega, 10};
  double step = 1e-3;
  Vec x = random_coords(rng, 3, 0.8);
  Vec y = random_coords(rng, 3, 0.8);
  Vec z = random_coords(rng, 3, 0.8);
  double lambda = 0.7;
  Vec lhs = derived_algebra_cocycle(fw, x, vec_add(y, vec_scale(lambda, z)), step);
  Vec rhs = vec_add(derived_algebra_cocycle(fw, x, y, step),
                    vec_scale(lambda, derived_algebra_cocycle(fw, x, z, step)));
  REQUIRE(vec_max_abs(vec_sub(lhs, rhs)) < 5.0 * step * step);
}
