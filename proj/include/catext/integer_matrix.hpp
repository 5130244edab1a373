#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

namespace catext {

// Arbitrary precision: bar-complex reductions blow past 64 bits even for small
// groups once unimodular transforms accumulate.
using Int = boost::multiprecision::cpp_int;

struct ZMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static ZMat identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static ZMat from_rows(const std::vector<std::vector<long long>>& rows_in) {
    int r = static_cast<int>(rows_in.size());
    int c = r ? static_cast<int>(rows_in[0].size()) : 0;
    ZMat m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows_in[i].size()) != c)
        throw std::invalid_argument("ragged matrix literal");
      for (int j = 0; j < c; ++j) m(i, j) = rows_in[i][j];
    }
    return m;
  }

  std::vector<Int> col(int j) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline ZMat mul(const ZMat& x, const ZMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  ZMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

inline std::vector<Int> matvec(const ZMat& m, const std::vector<Int>& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Int> out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0 && v[j] != 0) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

inline bool is_identity(const ZMat& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

inline ZMat hconcat(const ZMat& x, const ZMat& y) {
  if (x.rows != y.rows && x.cols != 0 && y.cols != 0)
    throw std::invalid_argument("hconcat row mismatch");
  int r = x.cols ? x.rows : y.rows;
  ZMat z(r, x.cols + y.cols);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
  }
  return z;
}

// u * m * v = d with u, v unimodular and d diagonal, nonnegative, each entry
// dividing the next. u_inv and v_inv are maintained alongside so unimodularity
// is certified by multiplication rather than determinant evaluation.
struct SmithDecomposition {
  ZMat u, d, v, u_inv, v_inv;
  int rank = 0;

  std::vector<Int> diag() const {
    std::vector<Int> out;
    int n = d.rows < d.cols ? d.rows : d.cols;
    for (int i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
  }
};

inline SmithDecomposition smith_normal_form(const ZMat& m) {
  SmithDecomposition s;
  s.d = m;
  s.u = ZMat::identity(m.rows);
  s.u_inv = ZMat::identity(m.rows);
  s.v = ZMat::identity(m.cols);
  s.v_inv = ZMat::identity(m.cols);
  ZMat& d = s.d;

  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d(i, c), d(j, c));
    for (int c = 0; c < s.u.cols; ++c) std::swap(s.u(i, c), s.u(j, c));
    for (int r = 0; r < s.u_inv.rows; ++r) std::swap(s.u_inv(r, i), s.u_inv(r, j));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d(r, i), d(r, j));
    for (int r = 0; r < s.v.rows; ++r) std::swap(s.v(r, i), s.v(r, j));
    for (int c = 0; c < s.v_inv.cols; ++c) std::swap(s.v_inv(i, c), s.v_inv(j, c));
  };
  // row i += k * row j;  u_inv gets the inverse column op
  auto row_add = [&](int i, int j, const Int& k) {
    if (k == 0) return;
    for (int c = 0; c < d.cols; ++c) d(i, c) += k * d(j, c);
    for (int c = 0; c < s.u.cols; ++c) s.u(i, c) += k * s.u(j, c);
    for (int r = 0; r < s.u_inv.rows; ++r) s.u_inv(r, j) -= k * s.u_inv(r, i);
  };
  auto col_add = [&](int i, int j, const Int& k) {
    if (k == 0) return;
    for (int r = 0; r < d.rows; ++r) d(r, i) += k * d(r, j);
    for (int r = 0; r < s.v.rows; ++r) s.v(r, i) += k * s.v(r, j);
    for (int c = 0; c < s.v_inv.cols; ++c) s.v_inv(j, c) -= k * s.v_inv(i, c);
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < d.cols; ++c) d(i, c) = -d(i, c);
    for (int c = 0; c < s.u.cols; ++c) s.u(i, c) = -s.u(i, c);
    for (int r = 0; r < s.u_inv.rows; ++r) s.u_inv(r, i) = -s.u_inv(r, i);
  };

  int n = d.rows < d.cols ? d.rows : d.cols;
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j)
          if (d(i, j) != 0 &&
              (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) { t = n; break; }  // remaining block is zero
      row_swap(t, pi);
      col_swap(t, pj);

      bool dirty = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide everything below-right; drag a bad row up and retry
      int bi = -1;
      for (int i = t + 1; i < d.rows && bi < 0; ++i)
        for (int j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) { bi = i; break; }
      if (bi < 0) break;
      row_add(t, bi, 1);
    }
    if (t >= n) break;
  }

  for (int i = 0; i < n; ++i)
    if (d(i, i) < 0) row_negate(i);
  for (int i = 0; i < n; ++i)
    if (d(i, i) != 0) ++s.rank;
  return s;
}

// Integer solution of m x = b, if one exists.
inline std::optional<std::vector<Int>> solve_integer(const SmithDecomposition& s,
                                                     const std::vector<Int>& b) {
  std::vector<Int> ub = matvec(s.u, b);
  std::vector<Int> y(s.d.cols, 0);
  int n = s.d.rows < s.d.cols ? s.d.rows : s.d.cols;
  for (int i = 0; i < s.d.rows; ++i) {
    Int di = i < n ? s.d(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  return matvec(s.v, y);
}

inline std::optional<std::vector<Int>> solve_integer(const ZMat& m, const std::vector<Int>& b) {
  return solve_integer(smith_normal_form(m), b);
}

// Basis of { x : m x = 0 }, one basis vector per column.
inline ZMat integer_kernel_basis(const ZMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  ZMat out(m.cols, m.cols - s.rank);
  for (int j = s.rank; j < m.cols; ++j)
    for (int i = 0; i < m.cols; ++i) out(i, j - s.rank) = s.v(i, j);
  return out;
}

// Basis of the lattice spanned by the columns of m: the nonzero columns of
// u_inv * d. Independent by unimodularity of u_inv.
inline ZMat column_lattice_basis(const ZMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  ZMat out(m.rows, s.rank);
  for (int j = 0; j < s.rank; ++j)
    for (int i = 0; i < m.rows; ++i) out(i, j) = s.u_inv(i, j) * s.d(j, j);
  return out;
}

}  // namespace catext
