#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "catext/charted_group.hpp"
#include "catext/derived_bracket.hpp"

using namespace catext;

namespace {

Vec random_coords(std::mt19937& rng, int n, double radius) {
  std::uniform_real_distribution<double> c(-radius, radius);
  Vec out(n);
  for (double& x : out) x = c(rng);
  return out;
}

std::vector<ChartedLieGroup> all_builtins() {
  return {charted_r(1), charted_r(2),  charted_r(3),    charted_heisenberg(),
          charted_su2(), charted_u2(), charted_circle()};
}

}  // namespace

TEST_CASE("charts invert and group laws hold on sampled points") {
  std::mt19937 rng(101);
  for (const auto& g : all_builtins()) {
    INFO(g.name);
    for (int trial = 0; trial < 25; ++trial) {
      Vec x = random_coords(rng, g.dim, 0.8);
      Vec el = g.chart_inv(x);
      REQUIRE(vec_max_abs(vec_sub(g.chart(el), x)) < 1e-10);
      REQUIRE(vec_max_abs(vec_sub(g.mult(el, g.unit), el)) < 1e-12);
      REQUIRE(vec_max_abs(vec_sub(g.mult(g.unit, el), el)) < 1e-12);
      REQUIRE(vec_max_abs(vec_sub(g.mult(el, g.inv(el)), g.unit)) < 1e-12);
      REQUIRE(g.in_domain(el));
    }
    REQUIRE(vec_max_abs(vec_sub(g.chart(g.unit), Vec(g.dim, 0.0))) < 1e-14);
  }
}

TEST_CASE("chart lines are one-parameter subgroups") {
  // local condition: the chart product of tx and sx is (t+s)x
  std::mt19937 rng(555);
  for (const auto& g : all_builtins()) {
    INFO(g.name);
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = random_coords(rng, g.dim, 0.6);
      double t = 0.3, s = 0.45;
      Vec prod = g.chart(g.mult(g.chart_inv(vec_scale(t, x)), g.chart_inv(vec_scale(s, x))));
      REQUIRE(vec_max_abs(vec_sub(prod, vec_scale(t + s, x))) < 1e-10);
    }
  }
}

TEST_CASE("matrix exponential matches the closed form on an axis") {
  auto g = charted_su2();
  double th = 1.3;
  Vec el = g.chart_inv({th, 0.0, 0.0});
  // exp(th * X_1) = cos(th/2) I - i sin(th/2) sigma_1
  REQUIRE(el[0] == Catch::Approx(std::cos(th / 2)).margin(1e-13));
  REQUIRE(el[3] == Catch::Approx(-std::sin(th / 2)).margin(1e-13));
  REQUIRE(el[5] == Catch::Approx(-std::sin(th / 2)).margin(1e-13));
  REQUIRE(el[6] == Catch::Approx(std::cos(th / 2)).margin(1e-13));
  REQUIRE(std::abs(el[1]) < 1e-13);
  REQUIRE(std::abs(el[2]) < 1e-13);
}

TEST_CASE("the log chart survives far from the identity") {
  // principal branch holds out to radius 2*pi, where -I sits
  auto g = charted_su2();
  std::mt19937 rng(777);
  for (double len : {0.5, 1.5, 3.0, 5.0, 6.0}) {
    for (int trial = 0; trial < 6; ++trial) {
      Vec x = random_coords(rng, 3, 1.0);
      double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) + 1e-12;
      for (double& c : x) c *= len / n;
      Vec round = g.chart(g.chart_inv(x));
      REQUIRE(vec_max_abs(vec_sub(round, x)) < 1e-9);
    }
  }
  // -I is the one excluded point
  Vec minus_i{-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0};
  REQUIRE_FALSE(g.in_domain(minus_i));
}

TEST_CASE("determinant of a unitary exponential is the exponential of the trace") {
  auto g = charted_u2();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = random_coords(rng, 4, 0.9);
    Vec el = g.chart_inv(x);
    std::complex<double> a{el[0], el[1]}, b{el[2], el[3]}, c{el[4], el[5]}, d{el[6], el[7]};
    std::complex<double> det = a * d - b * c;
    std::complex<double> expected = std::exp(std::complex<double>(0.0, x[3]));
    REQUIRE(std::abs(det - expected) < 1e-12);
  }
}

TEST_CASE("the registered pullback undoes left translation") {
  // tangent of the curve p * chart_inv(eps * w) at eps = 0 must pull back
  // to w itself
  std::mt19937 rng(909);
  for (const auto& g : all_builtins()) {
    INFO(g.name);
    for (int trial = 0; trial < 8; ++trial) {
      Vec p = g.chart_inv(random_coords(rng, g.dim, 0.5));
      Vec w = random_coords(rng, g.dim, 1.0);
      double eps = 1e-6;
      Vec hi = g.mult(p, g.chart_inv(vec_scale(eps, w)));
      Vec lo = g.mult(p, g.chart_inv(vec_scale(-eps, w)));
      Vec v = vec_scale(1.0 / (2.0 * eps), vec_sub(hi, lo));
      REQUIRE(vec_max_abs(vec_sub(g.pullback(p, v), w)) < 1e-8);
    }
  }
}

TEST_CASE("derived brackets of the chart products match the registered brackets") {
  std::mt19937 rng(404);
  for (const auto& g : all_builtins()) {
    INFO(g.name);
    BracketTable derived = derived_bracket(chart_product(g), g.dim, 1e-3);
    BracketTable expected(g.dim, std::vector<Vec>(g.dim, Vec(g.dim, 0.0)));
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        Vec ei(g.dim, 0.0), ej(g.dim, 0.0);
        ei[i] = 1.0;
        ej[j] = 1.0;
        Vec br = g.bracket(ei, ej);
        for (int k = 0; k < g.dim; ++k) expected[k][i][j] = br[k];
      }
    REQUIRE(bracket_table_distance(derived, expected) < 1e-4);
    // skewness of the derived table is structural
    for (int k = 0; k < g.dim; ++k)
      for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
          REQUIRE(derived[k][i][j] == Catch::Approx(-derived[k][j][i]).margin(0.0));
  }
}

TEST_CASE("cocycle tables evaluate bilinearly") {
  std::vector<std::vector<Vec>> table(2, std::vector<Vec>(3, Vec(3, 0.0)));
  table[0][0][1] = 2.0;
  table[0][1][0] = -2.0;
  table[1][1][2] = 1.0;
  table[1][2][1] = -1.0;
  auto om = lie_cocycle_from_table(table);
  REQUIRE(om.n == 3);
  REQUIRE(om.m == 2);
  Vec v = om.omega({1.0, 2.0, 0.5}, {0.0, 3.0, 1.0});
  REQUIRE(v[0] == Catch::Approx(2.0 * 1.0 * 3.0 - 2.0 * 2.0 * 0.0));
  REQUIRE(v[1] == Catch::Approx(2.0 * 1.0 - 0.5 * 3.0));
  REQUIRE_THROWS_AS(lie_cocycle_from_table({}), std::invalid_argument);
}

TEST_CASE("builtin lookup covers the catalogue and rejects strangers") {
  for (const char* name : {"r1", "r2", "r3", "heisenberg", "su2", "u2", "circle"})
    REQUIRE(charted_builtin(name).name == name);
  REQUIRE_THROWS_AS(charted_builtin("so3"), std::invalid_argument);
}
