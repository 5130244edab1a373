#pragma once

#include <string>
#include <vector>

#include "catext/abelian.hpp"
#include "catext/finite_group.hpp"

namespace catext {

// Action of a finite group on a finitely generated abelian module, one integer
// matrix per group element in generator coordinates.
struct GAction {
  FiniteGroup group;
  FgAbelianGroup module;
  std::vector<ZMat> act;

  static GAction trivial(FiniteGroup g, FgAbelianGroup m) {
    GAction a{std::move(g), std::move(m), {}};
    a.act.assign(a.group.order, ZMat::identity(a.module.gens()));
    return a;
  }

  const ZMat& at(int g) const { return act[g]; }

  El apply(int g, const El& v) const { return module.reduce(matvec(act[g], v)); }
};

// act[0] must be the identity map and act[i]*act[j] must equal act[i*j] as
// maps; together these force every act[g] to be an automorphism.
inline Report verify_action(const GAction& a) {
  Report rep;
  if (static_cast<int>(a.act.size()) != a.group.order) {
    rep.fail("action.shape", "()");
    return rep;
  }
  int q = a.module.gens();
  for (int g = 0; g < a.group.order; ++g)
    if (a.act[g].rows != q || a.act[g].cols != q) {
      rep.fail("action.shape", tuple_str({g}));
      return rep;
    }
  for (int g = 0; g < a.group.order; ++g) {
    AbelianHom h{a.module, a.module, a.act[g]};
    if (!verify_hom(h).passed()) rep.fail("action.well-defined", tuple_str({g}));
  }
  for (int j = 0; j < q; ++j) {
    El e = a.module.zero();
    e[j] = 1;
    if (a.apply(0, e) != a.module.reduce(e)) rep.fail("action.unit", tuple_str({j}));
  }
  for (int g = 0; g < a.group.order; ++g)
    for (int h = 0; h < a.group.order; ++h)
      for (int j = 0; j < q; ++j) {
        El e = a.module.zero();
        e[j] = 1;
        if (a.apply(g, a.apply(h, e)) != a.apply(a.group.mul(g, h), e))
          rep.fail("action.composition", tuple_str({g, h, j}));
      }
  rep.sort();
  return rep;
}

inline long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Tuples over the non-unit elements {1..order-1}, lexicographic with the
// first slot slowest.
inline std::vector<int> cochain_tuple_at(long long idx, int degree, int order) {
  std::vector<int> t(degree);
  for (int i = degree - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % (order - 1)) + 1;
    idx /= (order - 1);
  }
  return t;
}

inline long long cochain_tuple_index(const std::vector<int>& t, int order) {
  long long idx = 0;
  for (int g : t) idx = idx * (order - 1) + (g - 1);
  return idx;
}

inline std::string tuple_to_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Normalized cochain: a dense table over tuples of non-unit elements. A value
// on any tuple containing the unit is implicitly zero and never stored.
struct Cochain {
  int degree = 0;
  GAction action;  // carries both the group and the coefficient module
  std::vector<El> values;

  const FiniteGroup& group() const { return action.group; }
  const FgAbelianGroup& coeff() const { return action.module; }

  long long tuples() const { return pow_ll(group().order - 1, degree); }

  static Cochain zero(int degree, GAction a) {
    Cochain c{degree, std::move(a), {}};
    c.values.assign(c.tuples(), c.coeff().zero());
    return c;
  }

  // lookup with unit-argument normalization
  El value_at(const std::vector<int>& t) const {
    for (int g : t)
      if (g == 0) return coeff().zero();
    return values[cochain_tuple_index(t, group().order)];
  }

  void set(const std::vector<int>& t, const El& v) {
    for (int g : t)
      if (g == 0) throw std::invalid_argument("cannot store a value on a unit-argument tuple");
    values[cochain_tuple_index(t, group().order)] = coeff().reduce(v);
  }

  bool is_zero() const {
    for (const auto& v : values)
      if (!coeff().is_zero(v)) return false;
    return true;
  }

  void reduce_all() {
    for (auto& v : values) v = coeff().reduce(v);
  }
};

inline bool compatible(const Cochain& a, const Cochain& b) {
  return a.degree == b.degree && a.group().order == b.group().order &&
         a.group().table == b.group().table && a.coeff() == b.coeff();
}

inline Cochain cochain_add(const Cochain& a, const Cochain& b) {
  if (!compatible(a, b)) throw std::invalid_argument("cochain mismatch");
  Cochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a.coeff().add(a.values[i], b.values[i]);
  return out;
}

inline Cochain cochain_sub(const Cochain& a, const Cochain& b) {
  if (!compatible(a, b)) throw std::invalid_argument("cochain mismatch");
  Cochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a.coeff().sub(a.values[i], b.values[i]);
  return out;
}

inline Cochain cochain_smul(const Int& k, const Cochain& c) {
  Cochain out = c;
  for (auto& v : out.values) v = c.coeff().smul(k, v);
  return out;
}

inline bool cochain_equal(const Cochain& a, const Cochain& b) {
  if (!compatible(a, b)) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.coeff().reduce(a.values[i]) != b.coeff().reduce(b.values[i])) return false;
  return true;
}

// Group differential on normalized cochains:
//   (df)(g0..gn) = g0.f(g1..gn) - sum_i (-1)^i f(..,g_i g_{i+1},..) - (-1)^n f(g0..g_{n-1})
// Terms whose merged argument is the unit drop out, which is exactly what
// keeps normalized cochains normalized.
inline Cochain d_gp(const Cochain& c) {
  int n = c.degree;
  int m = c.group().order;
  Cochain out = Cochain::zero(n + 1, c.action);
  for (long long idx = 0; idx < out.tuples(); ++idx) {
    std::vector<int> t = cochain_tuple_at(idx, n + 1, m);
    El acc = c.action.apply(t[0], c.value_at(std::vector<int>(t.begin() + 1, t.end())));
    for (int i = 0; i < n; ++i) {
      std::vector<int> s;
      s.reserve(n);
      for (int j = 0; j < i; ++j) s.push_back(t[j]);
      s.push_back(c.group().mul(t[i], t[i + 1]));
      for (int j = i + 2; j <= n; ++j) s.push_back(t[j]);
      if (s[i] == 0) continue;
      El v = c.value_at(s);
      acc = (i % 2 == 0) ? c.coeff().sub(acc, v) : c.coeff().add(acc, v);
    }
    El v = c.value_at(std::vector<int>(t.begin(), t.end() - 1));
    acc = (n % 2 == 0) ? c.coeff().sub(acc, v) : c.coeff().add(acc, v);
    out.values[idx] = acc;
  }
  return out;
}

}  // namespace catext
