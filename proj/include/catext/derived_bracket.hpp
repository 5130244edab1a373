#pragma once

#include <functional>
#include <stdexcept>

#include "catext/charted_group.hpp"

namespace catext {

// table[k][i][j]: k-th coordinate of the bracket of basis vectors i and j.
// Same layout as the cocycle tables, so a derived bracket can feed back in
// as structure constants.
using BracketTable = std::vector<std::vector<Vec>>;

// Chart-level local product x * y = chart(chart_inv(x) * chart_inv(y)).
inline std::function<Vec(const Vec&, const Vec&)> chart_product(const ChartedLieGroup& g) {
  ChartedLieGroup grp = g;
  return [grp](const Vec& x, const Vec& y) {
    return grp.chart(grp.mult(grp.chart_inv(x), grp.chart_inv(y)));
  };
}

// Bracket of a locally smooth product on R^n near 0: the antisymmetrized
// mixed second derivative of m(t e_i, s e_j) at the origin, by central
// differences of half-width fd_step. Skew by construction; second order
// accurate in the step.
inline BracketTable derived_bracket(const std::function<Vec(const Vec&, const Vec&)>& product,
                                    int n, double fd_step = 1e-3) {
  if (fd_step <= 0.0) throw std::invalid_argument("differentiation step must be positive");
  BracketTable table(n, std::vector<Vec>(n, Vec(n, 0.0)));
  auto basis = [n](int i, double c) {
    Vec v(n, 0.0);
    v[i] = c;
    return v;
  };
  double h = fd_step;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto mixed = [&](int a, int b) {
        Vec out = product(basis(a, h), basis(b, h));
        out = vec_sub(out, product(basis(a, h), basis(b, -h)));
        out = vec_sub(out, product(basis(a, -h), basis(b, h)));
        out = vec_add(out, product(basis(a, -h), basis(b, -h)));
        return vec_scale(1.0 / (4.0 * h * h), out);
      };
      Vec br = vec_sub(mixed(i, j), mixed(j, i));
      for (int k = 0; k < n; ++k) {
        table[k][i][j] = br[k];
        table[k][j][i] = -br[k];
      }
    }
  return table;
}

// Evaluate a bracket table on coordinate vectors.
inline Vec bracket_apply(const BracketTable& table, const Vec& x, const Vec& y) {
  int m = static_cast<int>(table.size());
  int n = m == 0 ? 0 : static_cast<int>(table[0].size());
  Vec out(m, 0.0);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[k] += table[k][i][j] * x[i] * y[j];
  return out;
}

inline double bracket_table_distance(const BracketTable& a, const BracketTable& b) {
  double dev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < a[k].size(); ++i)
      for (std::size_t j = 0; j < a[k][i].size(); ++j)
        dev = std::max(dev, std::abs(a[k][i][j] - b[k][i][j]));
  return dev;
}

}  // namespace catext
