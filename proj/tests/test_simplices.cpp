#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "catext/simplices.hpp"

using namespace catext;

namespace {

Vec random_coords(std::mt19937& rng, int n, double radius) {
  std::uniform_real_distribution<double> c(-radius, radius);
  Vec out(n);
  for (double& x : out) x = c(rng);
  return out;
}

}  // namespace

TEST_CASE("paths run from the unit to their element") {
  std::mt19937 rng(11);
  for (const auto& g : {charted_r(2), charted_heisenberg(), charted_su2(), charted_circle()}) {
    INFO(g.name);
    auto at_unit = alpha_simplex(g, g.unit);
    for (double t : {0.0, 0.3, 0.7, 1.0})
      REQUIRE(vec_max_abs(vec_sub(at_unit.at(t), g.unit)) < 1e-12);
    Vec el = g.chart_inv(random_coords(rng, g.dim, 0.7));
    auto a = alpha_simplex(g, el);
    REQUIRE(vec_max_abs(vec_sub(a.at(0.0), g.unit)) < 1e-12);
    REQUIRE(vec_max_abs(vec_sub(a.at(1.0), el)) < 1e-10);
  }
}

TEST_CASE("triangles with a unit argument collapse onto paths") {
  std::mt19937 rng(22);
  for (const auto& g : {charted_r(2), charted_heisenberg(), charted_su2()}) {
    INFO(g.name);
    Vec el = g.chart_inv(random_coords(rng, g.dim, 0.6));
    auto from_unit = beta_simplex(g, g.unit, el);
    auto to_unit = beta_simplex(g, el, g.unit);
    auto a = alpha_simplex(g, el);
    for (double t : {0.1, 0.4, 0.8})
      for (double s : {0.05, 0.15}) {
        REQUIRE(vec_max_abs(vec_sub(from_unit.at(t, s), a.at(s))) < 1e-10);
        REQUIRE(vec_max_abs(vec_sub(to_unit.at(t, s), a.at(t + s))) < 1e-10);
      }
  }
}

TEST_CASE("triangle edges trace the expected path triple") {
  std::mt19937 rng(33);
  for (const auto& g : {charted_heisenberg(), charted_su2()}) {
    INFO(g.name);
    Vec el_g = g.chart_inv(random_coords(rng, g.dim, 0.5));
    Vec el_h = g.chart_inv(random_coords(rng, g.dim, 0.5));
    auto edges = simplex_edges(beta_simplex(g, el_g, el_h));
    auto a_g = alpha_simplex(g, el_g);
    auto a_h = alpha_simplex(g, el_h);
    auto a_gh = alpha_simplex(g, g.mult(el_g, el_h));
    for (int i = 0; i <= 8; ++i) {
      double t = i / 8.0;
      REQUIRE(vec_max_abs(vec_sub(edges.start.at(t), a_g.at(t))) < 1e-10);
      REQUIRE(vec_max_abs(vec_sub(edges.far.at(t), g.mult(el_g, a_h.at(t)))) < 1e-10);
      REQUIRE(vec_max_abs(vec_sub(edges.end.at(t), a_gh.at(t))) < 1e-10);
    }
  }
}

TEST_CASE("the additive plane triangle has a closed form") {
  auto g = charted_r(2);
  Vec a{1.0, 0.0}, b{0.0, 1.0};
  auto beta = beta_simplex(g, a, b);
  for (double t : {0.0, 0.25, 0.6})
    for (double s : {0.1, 0.3}) {
      Vec expected{(t + s) * a[0] + s * b[0], (t + s) * a[1] + s * b[1]};
      REQUIRE(vec_max_abs(vec_sub(beta.at(t, s), expected)) < 1e-14);
    }
}

TEST_CASE("the repeated-argument triangle collapses with a doubled parameter") {
  auto g = charted_su2();
  Vec el = g.chart_inv({0.4, -0.2, 0.3});
  auto check = repeated_argument_check(g, el);
  REQUIRE(check.dev_alpha_t_plus_2s < 1e-10);
  REQUIRE(check.dev_alpha_t_plus_s > 1e-2);
}

TEST_CASE("two-chart triangles interpolate between chart lines") {
  auto straight = charted_r(2);
  ChartedLieGroup bent = charted_r(2);
  double c = 0.4;
  bent.name = "r2-bent";
  bent.chart = [c](const Vec& x) { return Vec{x[0] + c * x[1] * x[1] * x[1], x[1]}; };
  bent.chart_inv = [c](const Vec& y) { return Vec{y[0] - c * y[1] * y[1] * y[1], y[1]}; };

  Vec el{0.8, 1.1};
  auto boundary = gamma_boundary_check(straight, bent, el);
  REQUIRE(boundary.dev_start_vs_first_line < 1e-12);
  REQUIRE(boundary.dev_end_vs_second_line < 1e-12);
  REQUIRE(boundary.dev_far_vs_constant < 1e-12);

  // the interior genuinely leaves both lines
  auto gamma = gamma_simplex(straight, bent, el);
  Vec mid = gamma.at(0.3, 0.3);
  auto a1 = alpha_simplex(straight, el);
  double off = 1e9;
  for (int i = 0; i <= 40; ++i) off = std::min(off, vec_max_abs(vec_sub(mid, a1.at(i / 40.0))));
  REQUIRE(off > 1e-3);
}

TEST_CASE("the two-chart triangle is continuous at its collapsed corner") {
  auto straight = charted_r(2);
  ChartedLieGroup bent = charted_r(2);
  bent.chart = [](const Vec& x) { return Vec{x[0] + 0.25 * x[1] * x[1] * x[1], x[1]}; };
  bent.chart_inv = [](const Vec& y) { return Vec{y[0] - 0.25 * y[1] * y[1] * y[1], y[1]}; };
  auto gamma = gamma_simplex(straight, bent, {0.6, 0.9});
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    REQUIRE(vec_max_abs(gamma.at(eps, eps)) < 4.0 * eps);
  }
  REQUIRE(vec_max_abs(gamma.at(0.0, 0.0)) == 0.0);
}

TEST_CASE("leaving the chart is refused with the offending parameters") {
  auto g = charted_circle();
  Vec quarter{0.0, 1.0};  // e^{i pi/2}
  Vec minus_one{-1.0, 0.0};

  bool refused = false;
  try {
    alpha_simplex(g, minus_one);
  } catch (const Refusal& r) {
    refused = true;
    REQUIRE(r.report.has("simplex.element-outside-chart"));
  }
  REQUIRE(refused);

  auto beta = beta_simplex(g, quarter, quarter);
  refused = false;
  try {
    beta.at(0.3, 1.0);  // the product passes through -1 at s = 1
  } catch (const Refusal& r) {
    refused = true;
    REQUIRE(r.report.has("simplex.domain-escape"));
    REQUIRE(r.report.findings[0].witness.find("s=1") != std::string::npos);
  }
  REQUIRE(refused);
}
