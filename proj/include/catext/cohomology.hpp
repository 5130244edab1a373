#pragma once

#include <optional>
#include <vector>

#include "catext/cochain.hpp"

namespace catext {

inline constexpr int kMaxCohomologyDegree = 4;
inline constexpr long long kMaxCochainCoordinates = 200000;

// Coordinate layout for C^n as a free Z-module: tuple index major, coefficient
// generator minor.
inline long long cochain_coordinates(const GAction& a, int degree) {
  return pow_ll(a.group.order - 1, degree) * a.module.gens();
}

inline std::vector<Int> vectorize(const Cochain& c) {
  std::vector<Int> v;
  v.reserve(c.values.size() * c.coeff().gens());
  for (const auto& val : c.values)
    for (const auto& x : val) v.push_back(x);
  return v;
}

inline Cochain unvectorize(int degree, const GAction& a, const std::vector<Int>& v) {
  Cochain c = Cochain::zero(degree, a);
  int q = a.module.gens();
  for (long long t = 0; t < c.tuples(); ++t) {
    El e(q);
    for (int j = 0; j < q; ++j) e[j] = v[t * q + j];
    c.values[t] = a.module.reduce(e);
  }
  return c;
}

// Matrix of d: C^n -> C^{n+1} over the coordinate layout. Built blockwise:
// the leading term contributes the action matrix of g0, every merge term and
// the final face contribute signed identity blocks.
inline ZMat bar_differential_matrix(const GAction& a, int n) {
  int m = a.group.order;
  int q = a.module.gens();
  long long t_in = pow_ll(m - 1, n), t_out = pow_ll(m - 1, n + 1);
  ZMat d(static_cast<int>(t_out * q), static_cast<int>(t_in * q));
  auto add_block = [&](long long to, long long ti, const ZMat& blk, int sign) {
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c)
        if (blk(r, c) != 0) d(static_cast<int>(to * q + r), static_cast<int>(ti * q + c)) += sign * blk(r, c);
  };
  ZMat id = ZMat::identity(q);
  for (long long idx = 0; idx < t_out; ++idx) {
    std::vector<int> t = cochain_tuple_at(idx, n + 1, m);
    add_block(idx, cochain_tuple_index(std::vector<int>(t.begin() + 1, t.end()), m), a.at(t[0]), 1);
    for (int i = 0; i < n; ++i) {
      std::vector<int> s;
      for (int j = 0; j < i; ++j) s.push_back(t[j]);
      s.push_back(a.group.mul(t[i], t[i + 1]));
      for (int j = i + 2; j <= n; ++j) s.push_back(t[j]);
      if (s[i] == 0) continue;
      add_block(idx, cochain_tuple_index(s, m), id, i % 2 == 0 ? -1 : 1);
    }
    add_block(idx, cochain_tuple_index(std::vector<int>(t.begin(), t.end() - 1), m), id,
              n % 2 == 0 ? -1 : 1);
  }
  return d;
}

// Block-diagonal torsion relations of C^n: one copy of the coefficient
// relation matrix per tuple.
inline ZMat cochain_relation_matrix(const GAction& a, int degree) {
  int q = a.module.gens();
  int k = static_cast<int>(a.module.torsion.size());
  long long t = pow_ll(a.group.order - 1, degree);
  ZMat r(static_cast<int>(t * q), static_cast<int>(t * k));
  for (long long i = 0; i < t; ++i)
    for (int j = 0; j < k; ++j)
      r(static_cast<int>(i * q + a.module.rank + j), static_cast<int>(i * k + j)) =
          a.module.torsion[j];
  return r;
}

struct CohomologyResult {
  int degree = 0;
  FgAbelianGroup group;                // canonical invariant-factor form
  std::vector<Cochain> representatives;  // torsion generators first, then free
};

namespace detail {

// Cocycle lattice of degree n: basis of { c in Z^{N_n} : d c lies in the
// relation lattice of C^{n+1} }.
inline ZMat cocycle_lattice_basis(const GAction& a, int n) {
  ZMat w = hconcat(bar_differential_matrix(a, n), cochain_relation_matrix(a, n + 1));
  ZMat ker = integer_kernel_basis(w);
  long long nn = cochain_coordinates(a, n);
  ZMat x_part(static_cast<int>(nn), ker.cols);
  for (int j = 0; j < ker.cols; ++j)
    for (long long i = 0; i < nn; ++i) x_part(static_cast<int>(i), j) = ker(static_cast<int>(i), j);
  return column_lattice_basis(x_part);
}

// Coboundary-plus-relation lattice hitting C^n: columns of d_{n-1} and the
// torsion relations of C^n itself.
inline ZMat coboundary_lattice(const GAction& a, int n) {
  ZMat rel = cochain_relation_matrix(a, n);
  if (n == 0) return rel;
  return hconcat(bar_differential_matrix(a, n - 1), rel);
}

inline void guard_size(const GAction& a, int degree) {
  if (degree < 0) throw Refusal("cochain degree must be nonnegative");
  if (degree > kMaxCohomologyDegree)
    throw Refusal("cochain degree exceeds the supported cap of 4");
  if (cochain_coordinates(a, degree + 1) > kMaxCochainCoordinates)
    throw Refusal("instance too large for the dense lattice reduction");
}

}  // namespace detail

// H^n as cocycle lattice / coboundary lattice, with representative lifts.
inline CohomologyResult cohomology_group(const GAction& a, int degree) {
  detail::guard_size(a, degree);
  {
    Report ar = verify_action(a);
    if (!ar.passed()) throw Refusal("module action is not a valid group action", ar);
  }
  ZMat k_basis = detail::cocycle_lattice_basis(a, degree);
  ZMat b = detail::coboundary_lattice(a, degree);

  auto sk = smith_normal_form(k_basis);
  ZMat y(k_basis.cols, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    auto sol = solve_integer(sk, b.col(j));
    if (!sol) throw std::logic_error("coboundary escapes the cocycle lattice");
    for (int i = 0; i < k_basis.cols; ++i) y(i, j) = (*sol)[i];
  }
  PresentedGroup p = quotient_presentation(k_basis.cols, y);

  CohomologyResult out;
  out.degree = degree;
  out.group = p.group;
  for (const auto& lift : p.generator_lifts)
    out.representatives.push_back(unvectorize(degree, a, matvec(k_basis, lift)));
  return out;
}

inline CohomologyResult cohomology_group(const FiniteGroup& g, const FgAbelianGroup& coeff,
                                         int degree) {
  return cohomology_group(GAction::trivial(g, coeff), degree);
}

// Whether dc = 0, checked on the cochain itself.
inline bool is_cocycle(const Cochain& c) { return d_gp(c).is_zero(); }

// Solves c = d b (modulo coefficient torsion) and returns the witness b.
// Refuses inputs that are not cocycles.
inline std::optional<Cochain> is_coboundary(const Cochain& c) {
  detail::guard_size(c.action, c.degree);
  if (c.degree < 1) throw Refusal("coboundary test needs degree >= 1");
  if (!is_cocycle(c)) {
    Report rep;
    Cochain dc = d_gp(c);
    for (long long i = 0; i < dc.tuples(); ++i)
      if (!dc.coeff().is_zero(dc.values[i]))
        rep.fail("cochain.not-a-cocycle",
                 tuple_to_str(cochain_tuple_at(i, dc.degree, dc.group().order)));
    rep.sort();
    throw Refusal("input cochain is not a cocycle", rep);
  }
  Cochain reduced = c;
  reduced.reduce_all();
  ZMat b = detail::coboundary_lattice(c.action, c.degree);
  auto sol = solve_integer(b, vectorize(reduced));
  if (!sol) return std::nullopt;
  long long prev = cochain_coordinates(c.action, c.degree - 1);
  std::vector<Int> head(sol->begin(), sol->begin() + prev);
  return unvectorize(c.degree - 1, c.action, head);
}

// Central extension of g by the finite module z along a 2-cochain f:
//   (a,x) * (b,y) = (a + b + f(x,y), x y)
// with element index a_idx * |g| + x so the unit lands at 0. Associativity of
// the result is exactly the cocycle identity for f, so non-cocycles are
// refused with the violating triples.
inline FiniteGroup twisted_product_unchecked(const FgAbelianGroup& z, const FiniteGroup& g,
                                             const Cochain& f) {
  if (f.degree != 2) throw std::invalid_argument("twisting cochain must have degree 2");
  long long zn = z.enum_size();
  int n = static_cast<int>(zn) * g.order;
  FiniteGroup out;
  out.order = n;
  out.table.resize(static_cast<std::size_t>(n) * n);
  out.inverse.assign(n, 0);
  auto idx = [&](long long a, int x) { return static_cast<int>(a) * g.order + x; };
  for (long long a = 0; a < zn; ++a)
    for (int x = 0; x < g.order; ++x)
      for (long long b = 0; b < zn; ++b)
        for (int y = 0; y < g.order; ++y) {
          El sum = z.add(z.add(z.element_at(a), z.element_at(b)), f.value_at({x, y}));
          out.table[static_cast<std::size_t>(idx(a, x)) * n + idx(b, y)] =
              idx(z.index_of(sum), g.mul(x, y));
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out.table[static_cast<std::size_t>(i) * n + j] == 0) {
        out.inverse[i] = j;
        break;
      }
  return out;
}

inline FiniteGroup twisted_product(const FgAbelianGroup& z, const FiniteGroup& g,
                                   const Cochain& f) {
  if (f.degree != 2) throw std::invalid_argument("twisting cochain must have degree 2");
  if (!(f.coeff() == z) || f.group().table != g.table)
    throw std::invalid_argument("cochain group or coefficients mismatch");
  Cochain df = d_gp(f);
  if (!df.is_zero()) {
    Report rep;
    for (long long i = 0; i < df.tuples(); ++i)
      if (!df.coeff().is_zero(df.values[i]))
        rep.fail("cochain.not-a-cocycle", tuple_to_str(cochain_tuple_at(i, 3, g.order)));
    rep.sort();
    throw Refusal("twisting cochain is not a 2-cocycle", rep);
  }
  return twisted_product_unchecked(z, g, f);
}

}  // namespace catext
