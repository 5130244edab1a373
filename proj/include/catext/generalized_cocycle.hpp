#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catext/cone.hpp"

namespace catext {

// Pair (F, Theta) over an abelian hom tau: A -> Z with trivial base action:
// d F = tau(Theta) and d Theta = 0, both over the same finite base group.
struct GeneralizedCocycle {
  AbelianHom tau;
  Cochain f;      // degree 2, Z coefficients
  Cochain theta;  // degree 3, A coefficients

  const FiniteGroup& base() const { return f.group(); }
};

inline bool action_is_trivial(const GAction& a) {
  for (const auto& m : a.act)
    if (!is_identity(m)) return false;
  return true;
}

inline bool same_hom(const AbelianHom& a, const AbelianHom& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  if (a.matrix.rows != b.matrix.rows || a.matrix.cols != b.matrix.cols) return false;
  for (int j = 0; j < a.matrix.cols; ++j)
    if (!a.target.is_zero(a.target.sub(a.matrix.col(j), b.matrix.col(j)))) return false;
  return true;
}

inline Report verify_generalized_cocycle(const GeneralizedCocycle& gc) {
  Report rep;
  {
    Report wf = verify_hom(gc.tau);
    if (!wf.passed()) {
      rep.merge(wf);
      rep.sort();
      return rep;
    }
  }
  bool shape_ok = gc.f.degree == 2 && gc.theta.degree == 3 && gc.f.coeff() == gc.tau.target &&
                  gc.theta.coeff() == gc.tau.source && gc.f.group().order == gc.theta.group().order &&
                  gc.f.group().table == gc.theta.group().table;
  if (!shape_ok) {
    rep.fail("cocycle.shape", "()");
    return rep;
  }
  if (!action_is_trivial(gc.f.action) || !action_is_trivial(gc.theta.action)) {
    rep.fail("cocycle.action-trivial", "()");
    return rep;
  }

  int m = gc.base().order;
  Cochain df = d_gp(gc.f);
  Cochain tau_theta = apply_hom(gc.tau, gc.theta, gc.f.action);
  for (long long i = 0; i < df.tuples(); ++i)
    if (!df.coeff().is_zero(df.coeff().sub(df.values[i], tau_theta.values[i])))
      rep.fail("cocycle.coboundary", tuple_to_str(cochain_tuple_at(i, 3, m)));
  Cochain dth = d_gp(gc.theta);
  for (long long i = 0; i < dth.tuples(); ++i)
    if (!dth.coeff().is_zero(dth.values[i]))
      rep.fail("cocycle.closed", tuple_to_str(cochain_tuple_at(i, 4, m)));
  rep.sort();
  return rep;
}

// Witness that source = target shifted by (phi, psi):
//   F = F' + d phi + tau(psi),  Theta = Theta' + d psi.
struct CocycleMorphism {
  GeneralizedCocycle source, target;
  Cochain phi;  // degree 1, Z coefficients
  Cochain psi;  // degree 2, A coefficients
};

inline Report verify_cocycle_morphism(const CocycleMorphism& m) {
  Report rep;
  rep.merge(verify_generalized_cocycle(m.source));
  rep.merge(verify_generalized_cocycle(m.target));
  if (!rep.passed()) {
    rep.sort();
    return rep;
  }
  bool shape_ok = same_hom(m.source.tau, m.target.tau) &&
                  m.source.base().table == m.target.base().table && m.phi.degree == 1 &&
                  m.psi.degree == 2 && m.phi.coeff() == m.source.tau.target &&
                  m.psi.coeff() == m.source.tau.source &&
                  m.phi.group().table == m.source.base().table &&
                  m.psi.group().table == m.source.base().table &&
                  action_is_trivial(m.phi.action) && action_is_trivial(m.psi.action);
  if (!shape_ok) {
    rep.fail("cocycle-morphism.shape", "()");
    rep.sort();
    return rep;
  }
  int n = m.source.base().order;
  Cochain f_rhs = cochain_add(cochain_add(m.target.f, d_gp(m.phi)),
                              apply_hom(m.source.tau, m.psi, m.phi.action));
  for (long long i = 0; i < f_rhs.tuples(); ++i)
    if (!f_rhs.coeff().is_zero(f_rhs.coeff().sub(m.source.f.values[i], f_rhs.values[i])))
      rep.fail("cocycle-morphism.f", tuple_to_str(cochain_tuple_at(i, 2, n)));
  Cochain th_rhs = cochain_add(m.target.theta, d_gp(m.psi));
  for (long long i = 0; i < th_rhs.tuples(); ++i)
    if (!th_rhs.coeff().is_zero(th_rhs.coeff().sub(m.source.theta.values[i], th_rhs.values[i])))
      rep.fail("cocycle-morphism.theta", tuple_to_str(cochain_tuple_at(i, 3, n)));
  rep.sort();
  return rep;
}

inline CocycleMorphism identity_cocycle_morphism(const GeneralizedCocycle& gc) {
  return {gc, gc, Cochain::zero(1, gc.f.action), Cochain::zero(2, gc.theta.action)};
}

// Shifts a target pair by (phi, psi); the result is a valid morphism by
// construction whenever the target is a valid generalized cocycle.
inline CocycleMorphism shifted_cocycle_morphism(const GeneralizedCocycle& target,
                                                const Cochain& phi, const Cochain& psi) {
  GeneralizedCocycle src = target;
  src.f = cochain_add(cochain_add(target.f, d_gp(phi)),
                      apply_hom(target.tau, psi, target.f.action));
  src.theta = cochain_add(target.theta, d_gp(psi));
  return {std::move(src), target, phi, psi};
}

// gamma mediates between parallel morphism data:
//   target.phi = source.phi + tau(gamma),  source.psi = target.psi + d gamma.
struct CocycleTwoMorphism {
  CocycleMorphism source, target;
  Cochain gamma;  // degree 1, A coefficients
};

inline Report verify_cocycle_two_morphism(const CocycleTwoMorphism& t) {
  Report rep;
  rep.merge(verify_cocycle_morphism(t.source));
  rep.merge(verify_cocycle_morphism(t.target));
  if (!rep.passed()) {
    rep.sort();
    return rep;
  }
  bool parallel = cochain_equal(t.source.source.f, t.target.source.f) &&
                  cochain_equal(t.source.source.theta, t.target.source.theta) &&
                  cochain_equal(t.source.target.f, t.target.target.f) &&
                  cochain_equal(t.source.target.theta, t.target.target.theta);
  bool shape_ok = parallel && t.gamma.degree == 1 &&
                  t.gamma.coeff() == t.source.source.tau.source &&
                  t.gamma.group().table == t.source.source.base().table &&
                  action_is_trivial(t.gamma.action);
  if (!shape_ok) {
    rep.fail("cocycle-2morphism.shape", "()");
    rep.sort();
    return rep;
  }
  int n = t.source.source.base().order;
  const AbelianHom& tau = t.source.source.tau;
  Cochain phi_rhs = cochain_add(t.source.phi, apply_hom(tau, t.gamma, t.source.phi.action));
  for (long long i = 0; i < phi_rhs.tuples(); ++i)
    if (!phi_rhs.coeff().is_zero(phi_rhs.coeff().sub(t.target.phi.values[i], phi_rhs.values[i])))
      rep.fail("cocycle-2morphism.phi", tuple_to_str(cochain_tuple_at(i, 1, n)));
  Cochain psi_rhs = cochain_add(t.target.psi, d_gp(t.gamma));
  for (long long i = 0; i < psi_rhs.tuples(); ++i)
    if (!psi_rhs.coeff().is_zero(psi_rhs.coeff().sub(t.source.psi.values[i], psi_rhs.values[i])))
      rep.fail("cocycle-2morphism.psi", tuple_to_str(cochain_tuple_at(i, 2, n)));
  rep.sort();
  return rep;
}

// From an ordinary 2-cocycle valued in the quotient by an injective inclusion
// A -> Z: compose with a set-level section of the projection (one Z element
// per quotient element, section[0] = 0) and measure its coboundary in A.
inline GeneralizedCocycle cocycle_from_ordinary(const AbelianHom& inclusion, const Cochain& f_bar,
                                                const std::vector<El>& section) {
  HomDecomposition dec = hom_decompose(inclusion);
  if (dec.kernel.gens() != 0) throw Refusal("inclusion has a nontrivial kernel");
  if (f_bar.degree != 2) throw std::invalid_argument("quotient cochain must have degree 2");
  if (!(f_bar.coeff() == dec.cokernel))
    throw std::invalid_argument("cochain coefficients must match the quotient presentation");
  if (!action_is_trivial(f_bar.action)) throw Refusal("quotient cochain must carry the trivial action");
  if (!dec.cokernel.finite()) throw Refusal("quotient must be finite to tabulate a section");
  long long nq = dec.cokernel.enum_size();
  if (static_cast<long long>(section.size()) != nq)
    throw std::invalid_argument("section must list one lift per quotient element");
  if (!inclusion.target.is_zero(inclusion.target.reduce(section[0])))
    throw Refusal("section must send zero to zero");
  for (long long i = 0; i < nq; ++i) {
    El back = cokernel_coords(dec, section[i]);
    if (dec.cokernel.index_of(back) != i)
      throw Refusal("section does not split the projection at element " + std::to_string(i));
  }
  {
    Cochain dfb = d_gp(f_bar);
    if (!dfb.is_zero()) {
      Report rep;
      for (long long i = 0; i < dfb.tuples(); ++i)
        if (!dfb.coeff().is_zero(dfb.values[i]))
          rep.fail("cochain.not-a-cocycle", tuple_to_str(cochain_tuple_at(i, 3, f_bar.group().order)));
      rep.sort();
      throw Refusal("quotient cochain is not a cocycle", rep);
    }
  }

  GeneralizedCocycle out;
  out.tau = inclusion;
  out.f = Cochain::zero(2, GAction::trivial(f_bar.action.group, inclusion.target));
  for (std::size_t i = 0; i < out.f.values.size(); ++i)
    out.f.values[i] =
        inclusion.target.reduce(section[f_bar.coeff().index_of(f_bar.values[i])]);
  Cochain df = d_gp(out.f);
  out.theta = Cochain::zero(3, GAction::trivial(f_bar.action.group, inclusion.source));
  for (std::size_t i = 0; i < out.theta.values.size(); ++i) {
    auto pre = hom_preimage(inclusion, df.values[i]);
    // the projection of d(section . f) is d(f) = 0, so values stay in the image
    if (!pre) throw std::logic_error("section coboundary escapes the inclusion image");
    out.theta.values[i] = *pre;
  }
  return out;
}

}  // namespace catext
