#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catext {

using Vec = std::vector<double>;

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec vec_scale(double c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline double vec_max_abs(const Vec& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

// Lie group carried as a subset of R^embed_dim with a chart onto a
// neighbourhood of 0 in R^dim. The chart must send the unit to 0 with
// identity differential there, so chart coordinates double as Lie algebra
// coordinates. pullback(p, V) is the differential of left translation by
// p^{-1} applied to an embedded tangent vector at p; bracket is the Lie
// bracket in chart coordinates.
struct ChartedLieGroup {
  std::string name;
  int dim = 0;
  int embed_dim = 0;
  std::function<Vec(const Vec&, const Vec&)> mult;
  std::function<Vec(const Vec&)> inv;
  Vec unit;
  std::function<Vec(const Vec&)> chart;
  std::function<Vec(const Vec&)> chart_inv;
  std::function<bool(const Vec&)> in_domain;
  std::function<Vec(const Vec&, const Vec&)> pullback;
  std::function<Vec(const Vec&, const Vec&)> bracket;
};

// Continuous bilinear map omega: R^n x R^n -> R^m, skew and closed against
// the group's bracket when used as a Lie algebra cocycle.
struct LieAlgebraCocycle {
  int n = 0;
  int m = 0;
  std::function<Vec(const Vec&, const Vec&)> omega;
};

// table[k][i][j] holds the k-th value coordinate of omega(e_i, e_j).
inline LieAlgebraCocycle lie_cocycle_from_table(const std::vector<std::vector<Vec>>& table) {
  int m = static_cast<int>(table.size());
  if (m == 0) throw std::invalid_argument("empty cocycle table");
  int n = static_cast<int>(table[0].size());
  for (const auto& plane : table) {
    if (static_cast<int>(plane.size()) != n) throw std::invalid_argument("ragged cocycle table");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged cocycle table");
  }
  auto data = table;
  return {n, m, [data, n, m](const Vec& x, const Vec& y) {
            Vec out(m, 0.0);
            for (int k = 0; k < m; ++k)
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) out[k] += data[k][i][j] * x[i] * y[j];
            return out;
          }};
}

// Coboundary cocycle b([x,y]) of a linear map b given as m rows over the
// algebra coordinates.
inline LieAlgebraCocycle bracket_coboundary(const ChartedLieGroup& g,
                                            const std::vector<Vec>& b) {
  int m = static_cast<int>(b.size());
  auto br = g.bracket;
  auto rows = b;
  return {g.dim, m, [br, rows, m](const Vec& x, const Vec& y) {
            Vec c = br(x, y);
            Vec out(m, 0.0);
            for (int k = 0; k < m; ++k)
              for (std::size_t j = 0; j < c.size(); ++j) out[k] += rows[k][j] * c[j];
            return out;
          }};
}

namespace detail {

using Cx = std::complex<double>;

// Dense complex 2x2 matrix, row major. Small enough that hand-rolled
// arithmetic beats pulling in a matrix library for the chart maps.
struct M2 {
  Cx a, b, c, d;
};

inline M2 m2_id() { return {1.0, 0.0, 0.0, 1.0}; }

inline M2 m2_mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

inline M2 m2_add(const M2& x, const M2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

inline M2 m2_sub(const M2& x, const M2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

inline M2 m2_smul(Cx s, const M2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

inline M2 m2_adjoint(const M2& x) {
  return {std::conj(x.a), std::conj(x.c), std::conj(x.b), std::conj(x.d)};
}

inline Cx m2_trace(const M2& x) { return x.a + x.d; }

inline Cx m2_det(const M2& x) { return x.a * x.d - x.b * x.c; }

inline double m2_norm(const M2& x) {
  return std::sqrt(std::norm(x.a) + std::norm(x.b) + std::norm(x.c) + std::norm(x.d));
}

// Scaling and squaring with a Taylor tail; the scaled argument has norm
// at most 1/4 so 24 terms leave no representable remainder.
inline M2 m2_exp(M2 x) {
  int k = 0;
  while (m2_norm(x) > 0.25 && k < 64) {
    x = m2_smul(0.5, x);
    ++k;
  }
  M2 term = m2_id();
  M2 sum = term;
  for (int n = 1; n <= 24; ++n) {
    term = m2_smul(1.0 / n, m2_mul(term, x));
    sum = m2_add(sum, term);
  }
  for (int i = 0; i < k; ++i) sum = m2_mul(sum, sum);
  return sum;
}

// Principal square root of a 2x2 matrix without eigenvalues on the closed
// negative real axis; breaks down exactly when trace + 2*sqrt(det) = 0.
inline M2 m2_sqrt(const M2& x) {
  Cx delta = std::sqrt(m2_det(x));
  Cx tau2 = m2_trace(x) + 2.0 * delta;
  double scale = m2_norm(x) + 1.0;
  if (std::abs(tau2) < 1e-14 * scale) throw std::domain_error("matrix square root undefined");
  Cx tau = std::sqrt(tau2);
  M2 out = x;
  out.a += delta;
  out.d += delta;
  return m2_smul(1.0 / tau, out);
}

// Inverse scaling by principal square roots, then the log(1+z) series on a
// remainder of norm at most 1/4.
inline M2 m2_log(M2 x) {
  int k = 0;
  while (m2_norm(m2_sub(x, m2_id())) > 0.25) {
    if (k >= 60) throw std::domain_error("matrix log did not converge");
    x = m2_sqrt(x);
    ++k;
  }
  M2 z = m2_sub(x, m2_id());
  M2 term = z;
  M2 sum = z;
  for (int n = 2; n <= 40; ++n) {
    term = m2_mul(term, z);
    sum = m2_add(sum, m2_smul((n % 2 == 0 ? -1.0 : 1.0) / n, term));
  }
  return m2_smul(std::pow(2.0, k), sum);
}

inline Vec m2_flatten(const M2& x) {
  return {x.a.real(), x.a.imag(), x.b.real(), x.b.imag(),
          x.c.real(), x.c.imag(), x.d.real(), x.d.imag()};
}

inline M2 m2_unflatten(const Vec& v) {
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

// Anti-hermitian basis: X_k = -(i/2) sigma_k for k = 1..3 and X_4 = (i/2) I.
// Coordinates are recovered by c_k = -2 Re tr(M X_k); the real part also
// projects out any hermitian noise in M.
inline M2 m2_basis(int k) {
  const Cx i(0.0, 1.0);
  switch (k) {
    case 0: return {0.0, -0.5 * i, -0.5 * i, 0.0};
    case 1: return {0.0, -0.5, 0.5, 0.0};
    case 2: return {-0.5 * i, 0.0, 0.0, 0.5 * i};
    default: return {0.5 * i, 0.0, 0.0, 0.5 * i};
  }
}

inline M2 m2_from_coords(const Vec& c) {
  M2 out{0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < c.size(); ++k) out = m2_add(out, m2_smul(c[k], m2_basis(static_cast<int>(k))));
  return out;
}

inline Vec m2_to_coords(const M2& m, int dim) {
  Vec out(dim);
  for (int k = 0; k < dim; ++k)
    out[k] = -2.0 * (m2_trace(m2_mul(m, m2_basis(k)))).real();
  return out;
}

inline Vec cross3(const Vec& x, const Vec& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

inline ChartedLieGroup matrix_group(std::string name, int dim) {
  ChartedLieGroup g;
  g.name = std::move(name);
  g.dim = dim;
  g.embed_dim = 8;
  g.mult = [](const Vec& x, const Vec& y) {
    return m2_flatten(m2_mul(m2_unflatten(x), m2_unflatten(y)));
  };
  g.inv = [](const Vec& x) { return m2_flatten(m2_adjoint(m2_unflatten(x))); };
  g.unit = m2_flatten(m2_id());
  g.chart = [dim](const Vec& x) { return m2_to_coords(m2_log(m2_unflatten(x)), dim); };
  g.chart_inv = [](const Vec& c) { return m2_flatten(m2_exp(m2_from_coords(c))); };
  g.in_domain = [](const Vec& x) {
    try {
      m2_log(m2_unflatten(x));
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  };
  g.pullback = [dim](const Vec& p, const Vec& v) {
    return m2_to_coords(m2_mul(m2_adjoint(m2_unflatten(p)), m2_unflatten(v)), dim);
  };
  // [X_i, X_j] = eps_ijk X_k on the sigma part; the central X_4 drops out
  g.bracket = [dim](const Vec& x, const Vec& y) {
    Vec c = cross3({x[0], x[1], x[2]}, {y[0], y[1], y[2]});
    if (dim == 4) c.push_back(0.0);
    return c;
  };
  return g;
}

}  // namespace detail

// Additive group of R^n; the chart is the identity and everything is exact.
inline ChartedLieGroup charted_r(int n) {
  ChartedLieGroup g;
  g.name = "r" + std::to_string(n);
  g.dim = n;
  g.embed_dim = n;
  g.mult = [](const Vec& x, const Vec& y) { return vec_add(x, y); };
  g.inv = [](const Vec& x) { return vec_scale(-1.0, x); };
  g.unit = Vec(n, 0.0);
  g.chart = [](const Vec& x) { return x; };
  g.chart_inv = [](const Vec& x) { return x; };
  g.in_domain = [](const Vec&) { return true; };
  g.pullback = [](const Vec&, const Vec& v) { return v; };
  g.bracket = [n](const Vec&, const Vec&) { return Vec(n, 0.0); };
  return g;
}

// Heisenberg group in exponential coordinates (x1, x2, z): the product is
// a + b + [a,b]/2 with bracket (0, 0, a1*b2 - a2*b1), and that formula is
// exact because the algebra is two-step nilpotent.
inline ChartedLieGroup charted_heisenberg() {
  auto br = [](const Vec& a, const Vec& b) {
    return Vec{0.0, 0.0, a[0] * b[1] - a[1] * b[0]};
  };
  ChartedLieGroup g;
  g.name = "heisenberg";
  g.dim = 3;
  g.embed_dim = 3;
  g.mult = [br](const Vec& x, const Vec& y) {
    return vec_add(vec_add(x, y), vec_scale(0.5, br(x, y)));
  };
  g.inv = [](const Vec& x) { return vec_scale(-1.0, x); };
  g.unit = Vec(3, 0.0);
  g.chart = [](const Vec& x) { return x; };
  g.chart_inv = [](const Vec& x) { return x; };
  g.in_domain = [](const Vec&) { return true; };
  // left translation by p^{-1} = -p has constant differential V - [p,V]/2
  g.pullback = [br](const Vec& p, const Vec& v) {
    return vec_sub(v, vec_scale(0.5, br(p, v)));
  };
  g.bracket = br;
  return g;
}

inline ChartedLieGroup charted_su2() { return detail::matrix_group("su2", 3); }

inline ChartedLieGroup charted_u2() { return detail::matrix_group("u2", 4); }

// Unit circle in R^2 with the angle chart on (-pi, pi); -1 sits outside the
// chart domain.
inline ChartedLieGroup charted_circle() {
  ChartedLieGroup g;
  g.name = "circle";
  g.dim = 1;
  g.embed_dim = 2;
  g.mult = [](const Vec& x, const Vec& y) {
    return Vec{x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
  };
  g.inv = [](const Vec& x) { return Vec{x[0], -x[1]}; };
  g.unit = {1.0, 0.0};
  g.chart = [](const Vec& x) {
    if (x[0] <= -1.0 + 1e-12 && std::abs(x[1]) < 1e-6)
      throw std::domain_error("angle chart undefined at -1");
    return Vec{std::atan2(x[1], x[0])};
  };
  g.chart_inv = [](const Vec& c) { return Vec{std::cos(c[0]), std::sin(c[0])}; };
  g.in_domain = [](const Vec& x) { return !(x[0] <= -1.0 + 1e-12 && std::abs(x[1]) < 1e-6); };
  g.pullback = [](const Vec& p, const Vec& v) { return Vec{p[0] * v[1] - p[1] * v[0]}; };
  g.bracket = [](const Vec&, const Vec&) { return Vec{0.0}; };
  return g;
}

inline ChartedLieGroup charted_builtin(const std::string& name) {
  if (name == "r1") return charted_r(1);
  if (name == "r2") return charted_r(2);
  if (name == "r3") return charted_r(3);
  if (name == "heisenberg") return charted_heisenberg();
  if (name == "su2") return charted_su2();
  if (name == "u2") return charted_u2();
  if (name == "circle") return charted_circle();
  throw std::invalid_argument("unknown group: " + name);
}

}  // namespace catext
