#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "catext/report.hpp"

namespace catext {

inline std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Group as a dense multiplication table over element indices. Index 0 is the
// unit. The inverse array is redundant but keeps hot loops table-driven.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;    // table[i*order+j] = index of g_i * g_j
  std::vector<int> inverse;  // inverse[i] = index of g_i^-1

  int mul(int i, int j) const { return table[static_cast<std::size_t>(i) * order + j]; }
  int inv(int i) const { return inverse[i]; }

  int mul3(int i, int j, int k) const { return mul(mul(i, j), k); }

  int element_order(int i) const {
    int x = i, n = 1;
    while (x != 0) {
      x = mul(x, i);
      ++n;
    }
    return n;
  }
};

// Builds the inverse array best-effort (first j with i*j = unit, else 0) so
// that malformed tables can still be handed to verify_finite_group.
inline FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows) {
  FiniteGroup g;
  g.order = static_cast<int>(rows.size());
  g.table.reserve(static_cast<std::size_t>(g.order) * g.order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != g.order)
      throw std::invalid_argument("multiplication table is not square");
    for (int x : row) g.table.push_back(x);
  }
  g.inverse.assign(g.order, 0);
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) {
      int x = g.table[static_cast<std::size_t>(i) * g.order + j];
      if (x == 0) { g.inverse[i] = j; break; }
    }
  return g;
}

inline FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group needs n >= 1");
  FiniteGroup g;
  g.order = n;
  g.table.resize(static_cast<std::size_t>(n) * n);
  g.inverse.resize(n);
  for (int i = 0; i < n; ++i) {
    g.inverse[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) g.table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  }
  return g;
}

// S3 on {0,1,2}; element = permutation in one-line notation, indexed
// lexicographically so the identity lands at index 0.
inline FiniteGroup symmetric_group_3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    throw std::logic_error("permutation lookup failed");
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];  // (p_i . p_j)(x) = p_i[p_j[x]]
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      rows[i][j] = find(comp);
    }
  return group_from_table(rows);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.table.resize(static_cast<std::size_t>(g.order) * g.order);
  g.inverse.resize(g.order);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1) {
      g.inverse[idx(x1, y1)] = idx(a.inv(x1), b.inv(y1));
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[static_cast<std::size_t>(idx(x1, y1)) * g.order + idx(x2, y2)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
    }
  return g;
}

// Full axiom sweep, O(order^3) on purpose: witnesses name exact cells.
inline Report verify_finite_group(const FiniteGroup& g) {
  Report rep;
  int n = g.order;
  if (n <= 0) {
    rep.fail("group.order", "()");
    return rep;
  }
  if (static_cast<int>(g.table.size()) != n * n || static_cast<int>(g.inverse.size()) != n) {
    rep.fail("group.table-shape", "()");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) < 0 || g.mul(i, j) >= n) rep.fail("group.table-range", tuple_str({i, j}));
  if (!rep.passed()) return rep;

  for (int i = 0; i < n; ++i) {
    if (g.mul(0, i) != i) rep.fail("group.unit", tuple_str({0, i}));
    if (g.mul(i, 0) != i) rep.fail("group.unit", tuple_str({i, 0}));
  }
  for (int i = 0; i < n; ++i) {
    if (g.inv(i) < 0 || g.inv(i) >= n) {
      rep.fail("group.inverse-range", tuple_str({i}));
      continue;
    }
    if (g.mul(i, g.inv(i)) != 0 || g.mul(g.inv(i), i) != 0)
      rep.fail("group.inverse", tuple_str({i}));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
          rep.fail("group.associativity", tuple_str({i, j, k}));
  rep.sort();
  return rep;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int i = 0; i < g.order; ++i)
    for (int j = i + 1; j < g.order; ++j)
      if (g.mul(i, j) != g.mul(j, i)) return false;
  return true;
}

inline std::vector<int> subgroup_generated(const FiniteGroup& g, std::vector<int> gens) {
  std::vector<char> in(g.order, 0);
  in[0] = 1;
  std::vector<int> frontier{0};
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      frontier.push_back(x);
    }
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      int p = g.mul(frontier[i], frontier[j]);
      if (!in[p]) {
        in[p] = 1;
        frontier.push_back(p);
      }
    }
  std::vector<int> out;
  for (int i = 0; i < g.order; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// Quotient by a normal subgroup, as a table on least-index coset
// representatives. coset_of[i] gives the quotient index of element i.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> coset_of;
  std::vector<int> reps;
};

inline QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  QuotientGroup q;
  q.coset_of.assign(g.order, -1);
  for (int i = 0; i < g.order; ++i) {
    if (q.coset_of[i] >= 0) continue;
    int c = static_cast<int>(q.reps.size());
    q.reps.push_back(i);
    for (int h : normal_subgroup) {
      int e = g.mul(i, h);
      if (q.coset_of[e] >= 0 && q.coset_of[e] != c)
        throw std::invalid_argument("cosets are not disjoint; subgroup input malformed");
      q.coset_of[e] = c;
    }
  }
  int m = static_cast<int>(q.reps.size());
  q.group.order = m;
  q.group.table.resize(static_cast<std::size_t>(m) * m);
  q.group.inverse.resize(m);
  for (int a = 0; a < m; ++a) {
    q.group.inverse[a] = q.coset_of[g.inv(q.reps[a])];
    for (int b = 0; b < m; ++b)
      q.group.table[static_cast<std::size_t>(a) * m + b] = q.coset_of[g.mul(q.reps[a], q.reps[b])];
  }
  // well-definedness: products of whole cosets must land in one coset
  for (int a = 0; a < m; ++a)
    for (int h : normal_subgroup)
      for (int b = 0; b < m; ++b) {
        int p = g.mul(g.mul(q.reps[a], h), q.reps[b]);
        if (q.coset_of[p] != q.group.table[static_cast<std::size_t>(a) * m + b])
          throw std::invalid_argument("quotient multiplication not well defined");
      }
  return q;
}

// Invariant factors d_1 | d_2 | ... | d_k of a finite abelian group, smallest
// first, each >= 2. Peels a maximal-order cyclic summand and recurses on the
// quotient; valid because a cyclic subgroup of maximal order splits off.
inline std::vector<int> abelian_invariants(const FiniteGroup& g_in) {
  if (!is_abelian(g_in)) throw std::invalid_argument("abelian_invariants needs an abelian group");
  std::vector<int> factors;
  FiniteGroup g = g_in;
  while (g.order > 1) {
    int best = 1, best_ord = 1;
    for (int i = 1; i < g.order; ++i) {
      int o = g.element_order(i);
      if (o > best_ord) {
        best_ord = o;
        best = i;
      }
    }
    factors.push_back(best_ord);
    g = quotient_group(g, subgroup_generated(g, {best})).group;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

// Multiset of element orders; equal statistics identify abelian groups of
// equal order up to isomorphism.
inline std::map<int, int> order_statistics(const FiniteGroup& g) {
  std::map<int, int> stats;
  for (int i = 0; i < g.order; ++i) ++stats[g.element_order(i)];
  return stats;
}

// Relabels elements by perm (perm[0] must fix the unit).
inline FiniteGroup permuted_copy(const FiniteGroup& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order || perm[0] != 0)
    throw std::invalid_argument("permutation must fix the unit index");
  FiniteGroup out;
  out.order = g.order;
  out.table.resize(g.table.size());
  out.inverse.resize(g.order);
  for (int i = 0; i < g.order; ++i) {
    out.inverse[perm[i]] = perm[g.inv(i)];
    for (int j = 0; j < g.order; ++j)
      out.table[static_cast<std::size_t>(perm[i]) * g.order + perm[j]] = perm[g.mul(i, j)];
  }
  return out;
}

}  // namespace catext
