#pragma once

#include <array>
#include <vector>

#include "catext/cohomology.hpp"

namespace catext {

// Pushes cochain values through a coefficient homomorphism.
inline Cochain apply_hom(const AbelianHom& h, const Cochain& c, const GAction& target_action) {
  if (!(h.source == c.coeff())) throw std::invalid_argument("cochain coefficients mismatch");
  Cochain out = Cochain::zero(c.degree, target_action);
  for (std::size_t i = 0; i < c.values.size(); ++i) out.values[i] = h.apply(c.values[i]);
  return out;
}

// Mixed-radix encoding of a finite-coefficient cochain: one digit per tuple,
// digit = element index, first tuple least significant.
inline long long cochain_code(const Cochain& c) {
  long long zs = c.coeff().enum_size(), code = 0;
  for (long long i = static_cast<long long>(c.values.size()) - 1; i >= 0; --i)
    code = code * zs + c.coeff().index_of(c.values[i]);
  return code;
}

inline Cochain cochain_from_code(int degree, const GAction& a, long long code) {
  Cochain c = Cochain::zero(degree, a);
  long long zs = a.module.enum_size();
  for (auto& v : c.values) {
    v = a.module.element_at(code % zs);
    code /= zs;
  }
  return c;
}

struct ConePair {
  Cochain f;      // degree 2, coefficients in the target of tau
  Cochain theta;  // degree 3, coefficients in the source of tau
};

// Equivalence classes of pairs (F, Theta) with dF = tau(Theta), dTheta = 0,
// modulo F -> F + d(phi) + tau(psi), Theta -> Theta + d(psi). Brute force over
// the full finite pair space; class representatives are least-index.
struct ConeClasses {
  GAction z_action, a_action;
  long long valid_pairs = 0;
  std::vector<ConePair> representatives;
  std::vector<long long> class_sizes;
  // every valid pair, as (f_code, theta_code), with its class id
  std::vector<std::array<long long, 2>> members;
  std::vector<int> member_class;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

inline ConeClasses cone_h2(const FiniteGroup& g, const AbelianHom& tau) {
  if (!tau.source.finite() || !tau.target.finite())
    throw Refusal("cone classification needs finite coefficient groups");
  {
    Report wf = verify_hom(tau);
    if (!wf.passed()) throw Refusal("tau is not well defined", wf);
  }
  ConeClasses out;
  out.z_action = GAction::trivial(g, tau.target);
  out.a_action = GAction::trivial(g, tau.source);
  long long zs = tau.target.enum_size(), as = tau.source.enum_size();
  long long t1 = pow_ll(g.order - 1, 1), t2 = pow_ll(g.order - 1, 2), t3 = pow_ll(g.order - 1, 3);

  auto ipow_guard = [](long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
      if (r > 2000000 / b) return static_cast<long long>(-1);
      r *= b;
    }
    return r;
  };
  long long n_f = ipow_guard(zs, t2), n_th = ipow_guard(as, t3);
  if (n_f < 0 || n_th < 0 || n_f > 1000000 / n_th)
    throw Refusal("pair space exceeds the brute-force budget");
  long long total = n_f * n_th;

  // validity precomputation per side: dF code and (tau Theta code, dTheta == 0)
  std::vector<long long> df_code(n_f);
  for (long long fi = 0; fi < n_f; ++fi)
    df_code[fi] = cochain_code(d_gp(cochain_from_code(2, out.z_action, fi)));
  std::vector<long long> tau_th_code(n_th);
  std::vector<char> th_closed(n_th);
  for (long long ti = 0; ti < n_th; ++ti) {
    Cochain th = cochain_from_code(3, out.a_action, ti);
    tau_th_code[ti] = cochain_code(apply_hom(tau, th, out.z_action));
    th_closed[ti] = d_gp(th).is_zero() ? 1 : 0;
  }

  std::vector<int> dense(total, -1);
  for (long long fi = 0; fi < n_f; ++fi)
    for (long long ti = 0; ti < n_th; ++ti)
      if (th_closed[ti] && df_code[fi] == tau_th_code[ti]) {
        dense[fi * n_th + ti] = static_cast<int>(out.members.size());
        out.members.push_back({fi, ti});
      }
  out.valid_pairs = static_cast<long long>(out.members.size());

  // generator moves of the equivalence group: basis 1-cochains phi in Z and
  // basis 2-cochains psi in A; orbit connectivity under the abelian group
  // follows from repeated single-generator unions
  struct Delta {
    Cochain df;      // added to F
    Cochain dtheta;  // added to Theta
  };
  std::vector<Delta> deltas;
  for (long long t = 0; t < t1; ++t)
    for (int j = 0; j < tau.target.gens(); ++j) {
      Cochain phi = Cochain::zero(1, out.z_action);
      El e = tau.target.zero();
      e[j] = 1;
      phi.values[t] = e;
      deltas.push_back({d_gp(phi), Cochain::zero(3, out.a_action)});
    }
  for (long long t = 0; t < t2; ++t)
    for (int j = 0; j < tau.source.gens(); ++j) {
      Cochain psi = Cochain::zero(2, out.a_action);
      El e = tau.source.zero();
      e[j] = 1;
      psi.values[t] = e;
      deltas.push_back({apply_hom(tau, psi, out.z_action), d_gp(psi)});
    }

  detail::UnionFind uf(static_cast<int>(out.members.size()));
  for (std::size_t p = 0; p < out.members.size(); ++p) {
    Cochain f = cochain_from_code(2, out.z_action, out.members[p][0]);
    Cochain th = cochain_from_code(3, out.a_action, out.members[p][1]);
    for (const auto& d : deltas) {
      long long fi2 = cochain_code(cochain_add(f, d.df));
      long long ti2 = cochain_code(cochain_add(th, d.dtheta));
      int q = dense[fi2 * n_th + ti2];
      if (q < 0) throw std::logic_error("equivalence move left the valid pair set");
      uf.unite(static_cast<int>(p), q);
    }
  }

  // classes in least-member order
  std::vector<int> root_to_class;
  std::vector<int> class_of_root(out.members.size(), -1);
  out.member_class.assign(out.members.size(), -1);
  for (std::size_t p = 0; p < out.members.size(); ++p) {
    int r = uf.find(static_cast<int>(p));
    if (class_of_root[r] < 0) {
      class_of_root[r] = static_cast<int>(out.representatives.size());
      out.representatives.push_back({cochain_from_code(2, out.z_action, out.members[p][0]),
                                     cochain_from_code(3, out.a_action, out.members[p][1])});
      out.class_sizes.push_back(0);
    }
    out.member_class[p] = class_of_root[r];
    ++out.class_sizes[class_of_root[r]];
  }
  return out;
}

// Middle-node exactness of .. -> H^2(Z) -> classes -> H^3(A) -> ..:
// a class maps to zero on the right iff its Theta bounds; it comes from the
// left iff some member has Theta = 0. The two must agree class by class.
struct LesExactness {
  ConeClasses classes;
  std::vector<char> in_kernel, in_image;
  Report report;
};

inline LesExactness les_exactness_check(const FiniteGroup& g, const AbelianHom& tau) {
  LesExactness out;
  out.classes = cone_h2(g, tau);
  int nc = static_cast<int>(out.classes.representatives.size());
  out.in_kernel.assign(nc, 0);
  out.in_image.assign(nc, 0);
  for (int i = 0; i < nc; ++i)
    out.in_kernel[i] = is_coboundary(out.classes.representatives[i].theta).has_value() ? 1 : 0;
  for (std::size_t p = 0; p < out.classes.members.size(); ++p)
    if (out.classes.members[p][1] == 0) out.in_image[out.classes.member_class[p]] = 1;
  for (int i = 0; i < nc; ++i)
    if (out.in_kernel[i] != out.in_image[i])
      out.report.fail("cone.les-exactness", "(class " + std::to_string(i) + ")");
  out.report.sort();
  return out;
}

}  // namespace catext
