#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catext/generalized_cocycle.hpp"
#include "catext/two_group.hpp"

namespace catext {

// The 2-group built on objects Z x G and morphisms A x Z x G, together with
// the strict abelian 2-group of tau and the two structure functors around it.
struct CentralExtensionSeq {
  TwoGroup z_part;  // strict 2-group of the crossed module A -> Z
  TwoGroup total;
  FiniteGroup base;
  std::vector<int> iota_obj, iota_mor;  // z_part index -> total index
  std::vector<int> q_obj, q_mor;        // total index -> base element
  GeneralizedCocycle cocycle;           // construction data
};

// Morphism (a,x,g): (x,g) -> (tau(a)+x, g); tensor twists by F, the
// associator holds Theta. Composition stacks the A part along a fixed fiber.
inline CentralExtensionSeq extension_from_cocycle(const GeneralizedCocycle& gc) {
  {
    Report r = verify_generalized_cocycle(gc);
    if (!r.passed()) throw Refusal("generalized cocycle identities fail", r);
  }
  if (!gc.tau.source.finite() || !gc.tau.target.finite())
    throw Refusal("extension needs finite coefficient groups");
  const FiniteGroup& g = gc.base();
  FiniteGroup az = gc.tau.source.to_finite_group();
  FiniteGroup zz = gc.tau.target.to_finite_group();
  int na = az.order, nz = zz.order, ng = g.order;
  if (static_cast<long long>(na) * nz * ng > kMaxTwoGroupMorphisms)
    throw Refusal("extension too large");

  std::vector<int> tau_idx(na);
  for (int a = 0; a < na; ++a)
    tau_idx[a] = static_cast<int>(gc.tau.target.index_of(gc.tau.apply(gc.tau.source.element_at(a))));
  std::vector<std::vector<int>> f_idx(ng, std::vector<int>(ng));
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2)
      f_idx[g1][g2] = static_cast<int>(gc.tau.target.index_of(gc.f.value_at({g1, g2})));
  std::vector<int> th_idx(static_cast<std::size_t>(ng) * ng * ng);
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2)
      for (int g3 = 0; g3 < ng; ++g3)
        th_idx[(static_cast<std::size_t>(g1) * ng + g2) * ng + g3] =
            static_cast<int>(gc.tau.source.index_of(gc.theta.value_at({g1, g2, g3})));

  CentralExtensionSeq seq;
  seq.base = g;
  seq.cocycle = gc;
  TwoGroup& t = seq.total;
  t.n_obj = nz * ng;
  t.n_mor = na * nz * ng;
  t.allocate();
  auto oi = [&](int x, int gi) { return x * ng + gi; };
  auto mi = [&](int a, int x, int gi) { return (a * nz + x) * ng + gi; };
  // -x - F(g, g^-1) is the object inverse's Z slot
  auto inv_x = [&](int x, int gi) { return zz.inv(zz.mul(x, f_idx[gi][g.inv(gi)])); };

  for (int x = 0; x < nz; ++x)
    for (int gi = 0; gi < ng; ++gi) {
      int o = oi(x, gi);
      t.idm[o] = mi(0, x, gi);
      t.inv_obj[o] = oi(inv_x(x, gi), g.inv(gi));
      for (int y = 0; y < nz; ++y)
        for (int hj = 0; hj < ng; ++hj)
          t.tens_obj[static_cast<std::size_t>(o) * t.n_obj + oi(y, hj)] =
              oi(zz.mul(zz.mul(x, y), f_idx[gi][hj]), g.mul(gi, hj));
    }
  for (int a = 0; a < na; ++a)
    for (int x = 0; x < nz; ++x)
      for (int gi = 0; gi < ng; ++gi) {
        int m = mi(a, x, gi);
        t.src[m] = oi(x, gi);
        t.tgt[m] = oi(zz.mul(tau_idx[a], x), gi);
        t.inv_mor[m] = mi(az.inv(a), inv_x(x, gi), g.inv(gi));
      }
  for (int m1 = 0; m1 < t.n_mor; ++m1) {
    int a1 = m1 / (nz * ng), x1 = (m1 / ng) % nz, g1 = m1 % ng;
    // composable successors share the fiber and start at the target slot
    for (int a2 = 0; a2 < na; ++a2) {
      int m2 = mi(a2, zz.mul(tau_idx[a1], x1), g1);
      t.comp[static_cast<std::size_t>(m2) * t.n_mor + m1] = mi(az.mul(a1, a2), x1, g1);
    }
    for (int m2 = 0; m2 < t.n_mor; ++m2) {
      int a2 = m2 / (nz * ng), x2 = (m2 / ng) % nz, g2 = m2 % ng;
      t.tens_mor[static_cast<std::size_t>(m1) * t.n_mor + m2] =
          mi(az.mul(a1, a2), zz.mul(zz.mul(x1, x2), f_idx[g1][g2]), g.mul(g1, g2));
    }
  }
  for (int o1 = 0; o1 < t.n_obj; ++o1)
    for (int o2 = 0; o2 < t.n_obj; ++o2)
      for (int o3 = 0; o3 < t.n_obj; ++o3) {
        int x = o1 / ng, g1 = o1 % ng, y = o2 / ng, g2 = o2 % ng, z = o3 / ng, g3 = o3 % ng;
        int xs = zz.mul(zz.mul(zz.mul(x, y), z), zz.mul(f_idx[g1][g2], f_idx[g.mul(g1, g2)][g3]));
        t.assoc[(static_cast<std::size_t>(o1) * t.n_obj + o2) * t.n_obj + o3] =
            mi(th_idx[(static_cast<std::size_t>(g1) * ng + g2) * ng + g3], xs, g.mul3(g1, g2, g3));
      }

  seq.z_part = strict_2group_from_crossed_module(crossed_module_from_hom(gc.tau));
  seq.iota_obj.resize(seq.z_part.n_obj);
  for (int x = 0; x < nz; ++x) seq.iota_obj[x] = oi(x, 0);
  seq.iota_mor.resize(seq.z_part.n_mor);
  for (int a = 0; a < na; ++a)
    for (int x = 0; x < nz; ++x) seq.iota_mor[a * nz + x] = mi(a, x, 0);
  seq.q_obj.resize(t.n_obj);
  seq.q_mor.resize(t.n_mor);
  for (int o = 0; o < t.n_obj; ++o) seq.q_obj[o] = o % ng;
  for (int m = 0; m < t.n_mor; ++m) seq.q_mor[m] = m % ng;
  return seq;
}

// Structure-map invariants of the sequence. The 2-group axioms themselves are
// verify_2group's job; this sweep covers the functors, exactness at the
// middle, and centrality of the embedded part.
inline Report verify_central_extension(const CentralExtensionSeq& seq) {
  Report rep;
  const TwoGroup& z = seq.z_part;
  const TwoGroup& t = seq.total;
  bool shape_ok = static_cast<int>(seq.iota_obj.size()) == z.n_obj &&
                  static_cast<int>(seq.iota_mor.size()) == z.n_mor &&
                  static_cast<int>(seq.q_obj.size()) == t.n_obj &&
                  static_cast<int>(seq.q_mor.size()) == t.n_mor && seq.base.order > 0;
  if (shape_ok) {
    for (int o : seq.iota_obj) shape_ok = shape_ok && o >= 0 && o < t.n_obj;
    for (int m : seq.iota_mor) shape_ok = shape_ok && m >= 0 && m < t.n_mor;
    for (int gi : seq.q_obj) shape_ok = shape_ok && gi >= 0 && gi < seq.base.order;
    for (int gi : seq.q_mor) shape_ok = shape_ok && gi >= 0 && gi < seq.base.order;
  }
  if (!shape_ok) {
    rep.fail("extension.shape", "()");
    return rep;
  }

  if (seq.iota_obj[0] != 0) rep.fail("extension.iota-unit", tuple_str({0}));
  for (int m = 0; m < z.n_mor; ++m)
    if (t.src[seq.iota_mor[m]] != seq.iota_obj[z.src[m]] ||
        t.tgt[seq.iota_mor[m]] != seq.iota_obj[z.tgt[m]])
      rep.fail("extension.iota-endpoints", tuple_str({m}));
  for (int o = 0; o < z.n_obj; ++o)
    if (seq.iota_mor[z.idm[o]] != t.idm[seq.iota_obj[o]])
      rep.fail("extension.iota-identity", tuple_str({o}));
  for (int m2 = 0; m2 < z.n_mor; ++m2)
    for (int m1 = 0; m1 < z.n_mor; ++m1) {
      int c = z.compose_raw(m2, m1);
      if (c < 0) continue;
      if (seq.iota_mor[c] != t.compose_raw(seq.iota_mor[m2], seq.iota_mor[m1]))
        rep.fail("extension.iota-composition", tuple_str({m2, m1}));
    }
  for (int a = 0; a < z.n_obj; ++a)
    for (int b = 0; b < z.n_obj; ++b)
      if (seq.iota_obj[z.tobj(a, b)] != t.tobj(seq.iota_obj[a], seq.iota_obj[b]))
        rep.fail("extension.iota-tensor", tuple_str({a, b}));
  for (int a = 0; a < z.n_mor; ++a)
    for (int b = 0; b < z.n_mor; ++b)
      if (seq.iota_mor[z.tmor(a, b)] != t.tmor(seq.iota_mor[a], seq.iota_mor[b]))
        rep.fail("extension.iota-tensor", tuple_str({a, b}));
  {
    std::vector<char> seen_obj(t.n_obj, 0), seen_mor(t.n_mor, 0);
    for (int o = 0; o < z.n_obj; ++o) {
      if (seen_obj[seq.iota_obj[o]]) rep.fail("extension.iota-injective", tuple_str({o}));
      seen_obj[seq.iota_obj[o]] = 1;
    }
    for (int m = 0; m < z.n_mor; ++m) {
      if (seen_mor[seq.iota_mor[m]]) rep.fail("extension.iota-injective", tuple_str({m}));
      seen_mor[seq.iota_mor[m]] = 1;
    }
  }

  if (seq.q_obj[0] != 0) rep.fail("extension.q-unit", tuple_str({0}));
  for (int m = 0; m < t.n_mor; ++m)
    if (seq.q_mor[m] != seq.q_obj[t.src[m]] || seq.q_mor[m] != seq.q_obj[t.tgt[m]])
      rep.fail("extension.q-endpoints", tuple_str({m}));
  for (int m2 = 0; m2 < t.n_mor; ++m2)
    for (int m1 = 0; m1 < t.n_mor; ++m1) {
      int c = t.compose_raw(m2, m1);
      if (c < 0) continue;
      if (seq.q_mor[c] != seq.q_mor[m1]) rep.fail("extension.q-composition", tuple_str({m2, m1}));
    }
  for (int a = 0; a < t.n_obj; ++a)
    for (int b = 0; b < t.n_obj; ++b)
      if (seq.q_obj[t.tobj(a, b)] != seq.base.mul(seq.q_obj[a], seq.q_obj[b]))
        rep.fail("extension.q-tensor", tuple_str({a, b}));
  for (int a = 0; a < t.n_mor; ++a)
    for (int b = 0; b < t.n_mor; ++b)
      if (seq.q_mor[t.tmor(a, b)] != seq.base.mul(seq.q_mor[a], seq.q_mor[b]))
        rep.fail("extension.q-tensor", tuple_str({a, b}));
  {
    std::vector<char> hit(seq.base.order, 0);
    for (int m = 0; m < t.n_mor; ++m) hit[seq.q_mor[m]] = 1;
    for (int gi = 0; gi < seq.base.order; ++gi)
      if (!hit[gi]) rep.fail("extension.q-surjective", tuple_str({gi}));
  }

  // middle exactness: the q-fiber over the unit is exactly the iota image
  {
    std::vector<char> im_obj(t.n_obj, 0), im_mor(t.n_mor, 0);
    for (int o : seq.iota_obj) im_obj[o] = 1;
    for (int m : seq.iota_mor) im_mor[m] = 1;
    for (int o = 0; o < t.n_obj; ++o)
      if (im_obj[o] != (seq.q_obj[o] == 0)) rep.fail("extension.exactness-objects", tuple_str({o}));
    for (int m = 0; m < t.n_mor; ++m)
      if (im_mor[m] != (seq.q_mor[m] == 0)) rep.fail("extension.exactness-morphisms", tuple_str({m}));
  }

  for (int zm = 0; zm < z.n_mor; ++zm)
    for (int m = 0; m < t.n_mor; ++m)
      if (t.tmor(seq.iota_mor[zm], m) != t.tmor(m, seq.iota_mor[zm]))
        rep.fail("extension.centrality", tuple_str({zm, m}));
  rep.sort();
  return rep;
}

// Isomorphism-class shadow of the sequence: the quotient Z/tau(A), the group
// of object classes of the total 2-group, and the maps between them.
struct SkeletonAndBand {
  FgAbelianGroup skel_z;
  FiniteGroup band;
  std::vector<int> band_class_of;  // total object -> band element
  std::vector<int> skel_to_band;   // skel_z enumeration index -> band element
  std::vector<int> band_to_base;   // band element -> base element
  Report report;
};

inline SkeletonAndBand skeleton_and_band(const CentralExtensionSeq& seq) {
  SkeletonAndBand out;
  HomDecomposition dec = hom_decompose(seq.cocycle.tau);
  out.skel_z = dec.cokernel;
  SkeletonResult sk = skeleton_group(seq.total);
  out.band = sk.group;
  out.band_class_of = sk.class_of;
  for (int b = 0; b < out.band.order; ++b) out.band_to_base.push_back(seq.q_obj[sk.reps[b]]);

  const FgAbelianGroup& zg = seq.cocycle.tau.target;
  long long nq = out.skel_z.enum_size();
  for (long long i = 0; i < nq; ++i) {
    El q = out.skel_z.element_at(i);
    El lift = zg.zero();
    for (std::size_t j = 0; j < q.size(); ++j)
      lift = zg.add(lift, zg.smul(q[j], dec.cokernel_lifts[j]));
    int x = static_cast<int>(zg.index_of(lift));
    out.skel_to_band.push_back(out.band_class_of[x * seq.base.order]);
  }

  Report& rep = out.report;
  // injection skel_z -> band: unital homomorphism, one-to-one
  if (nq > 0 && out.skel_to_band[0] != 0) rep.fail("band.injection-unit", tuple_str({0}));
  for (long long i = 0; i < nq; ++i)
    for (long long j = 0; j < nq; ++j) {
      long long sum = out.skel_z.index_of(
          out.skel_z.add(out.skel_z.element_at(i), out.skel_z.element_at(j)));
      if (out.skel_to_band[sum] != out.band.mul(out.skel_to_band[i], out.skel_to_band[j]))
        rep.fail("band.injection-hom", tuple_str({static_cast<int>(i), static_cast<int>(j)}));
    }
  {
    std::vector<char> seen(out.band.order, 0);
    for (long long i = 0; i < nq; ++i) {
      if (seen[out.skel_to_band[i]])
        rep.fail("band.injection-injective", tuple_str({static_cast<int>(i)}));
      seen[out.skel_to_band[i]] = 1;
    }
  }
  // projection band -> base: surjective homomorphism
  for (int b1 = 0; b1 < out.band.order; ++b1)
    for (int b2 = 0; b2 < out.band.order; ++b2)
      if (out.band_to_base[out.band.mul(b1, b2)] !=
          seq.base.mul(out.band_to_base[b1], out.band_to_base[b2]))
        rep.fail("band.projection-hom", tuple_str({b1, b2}));
  {
    std::vector<char> hit(seq.base.order, 0);
    for (int b = 0; b < out.band.order; ++b) hit[out.band_to_base[b]] = 1;
    for (int gi = 0; gi < seq.base.order; ++gi)
      if (!hit[gi]) rep.fail("band.projection-surjective", tuple_str({gi}));
  }
  // kernel of the projection is exactly the injected quotient
  {
    std::vector<char> im(out.band.order, 0);
    for (long long i = 0; i < nq; ++i) im[out.skel_to_band[i]] = 1;
    for (int b = 0; b < out.band.order; ++b)
      if (im[b] != (out.band_to_base[b] == 0)) rep.fail("band.exactness", tuple_str({b}));
  }
  for (long long i = 0; i < nq; ++i)
    for (int b = 0; b < out.band.order; ++b)
      if (out.band.mul(out.skel_to_band[i], b) != out.band.mul(b, out.skel_to_band[i]))
        rep.fail("band.centrality", tuple_str({static_cast<int>(i), b}));
  rep.sort();
  return out;
}

// Monoidal functor between the extensions of the two ends of a cocycle
// morphism: objects shift by phi, the structure morphism carries psi.
struct ExtensionMorphism {
  CentralExtensionSeq source, target;
  TwoGroupFunctor functor;
};

inline ExtensionMorphism morphism_from_pair(const CocycleMorphism& m) {
  {
    Report r = verify_cocycle_morphism(m);
    if (!r.passed()) throw Refusal("cocycle morphism identities fail", r);
  }
  ExtensionMorphism out;
  out.source = extension_from_cocycle(m.source);
  out.target = extension_from_cocycle(m.target);
  const FiniteGroup& g = out.source.base;
  const FgAbelianGroup& zg = m.source.tau.target;
  FiniteGroup zz = zg.to_finite_group();
  int ng = g.order, nz = zz.order;
  int na = static_cast<int>(m.source.tau.source.enum_size());

  std::vector<int> phi_idx(ng), f2_x(static_cast<std::size_t>(ng) * ng), psi_idx;
  for (int gi = 0; gi < ng; ++gi)
    phi_idx[gi] = static_cast<int>(zg.index_of(m.phi.value_at({gi})));
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2) {
      // phi(g1) + phi(g2) + F'(g1,g2): the Z slot of the structure morphism
      El v = zg.add(zg.add(m.phi.value_at({g1}), m.phi.value_at({g2})), m.target.f.value_at({g1, g2}));
      f2_x[static_cast<std::size_t>(g1) * ng + g2] = static_cast<int>(zg.index_of(v));
      psi_idx.push_back(static_cast<int>(m.source.tau.source.index_of(m.psi.value_at({g1, g2}))));
    }

  auto oi = [&](int x, int gi) { return x * ng + gi; };
  auto mi = [&](int a, int x, int gi) { return (a * nz + x) * ng + gi; };
  TwoGroupFunctor& fn = out.functor;
  fn.obj_map.resize(out.source.total.n_obj);
  fn.mor_map.resize(out.source.total.n_mor);
  fn.f2.resize(static_cast<std::size_t>(out.source.total.n_obj) * out.source.total.n_obj);
  for (int x = 0; x < nz; ++x)
    for (int gi = 0; gi < ng; ++gi) fn.obj_map[oi(x, gi)] = oi(zz.mul(x, phi_idx[gi]), gi);
  for (int a = 0; a < na; ++a)
    for (int x = 0; x < nz; ++x)
      for (int gi = 0; gi < ng; ++gi)
        fn.mor_map[mi(a, x, gi)] = mi(a, zz.mul(x, phi_idx[gi]), gi);
  for (int o1 = 0; o1 < out.source.total.n_obj; ++o1)
    for (int o2 = 0; o2 < out.source.total.n_obj; ++o2) {
      int x = o1 / ng, g1 = o1 % ng, y = o2 / ng, g2 = o2 % ng;
      int slot = zz.mul(zz.mul(x, y), f2_x[static_cast<std::size_t>(g1) * ng + g2]);
      fn.f2[static_cast<std::size_t>(o1) * out.source.total.n_obj + o2] =
          mi(psi_idx[static_cast<std::size_t>(g1) * ng + g2], slot, g.mul(g1, g2));
    }
  return out;
}

// Generic monoidal-functor verification plus compatibility with both
// structure functors of the sequences.
inline Report verify_extension_morphism(const ExtensionMorphism& em) {
  Report rep = verify_2group_morphism(em.source.total, em.target.total, em.functor);
  bool same_z = em.source.z_part.n_obj == em.target.z_part.n_obj &&
                em.source.z_part.n_mor == em.target.z_part.n_mor;
  if (!same_z) {
    rep.fail("extension-morphism.shape", "()");
    rep.sort();
    return rep;
  }
  for (int o = 0; o < em.source.z_part.n_obj; ++o)
    if (em.functor.obj_map[em.source.iota_obj[o]] != em.target.iota_obj[o])
      rep.fail("extension-morphism.iota", tuple_str({o}));
  for (int m = 0; m < em.source.z_part.n_mor; ++m)
    if (em.functor.mor_map[em.source.iota_mor[m]] != em.target.iota_mor[m])
      rep.fail("extension-morphism.iota", tuple_str({m}));
  for (int o = 0; o < em.source.total.n_obj; ++o)
    if (em.target.q_obj[em.functor.obj_map[o]] != em.source.q_obj[o])
      rep.fail("extension-morphism.q", tuple_str({o}));
  for (int m = 0; m < em.source.total.n_mor; ++m)
    if (em.target.q_mor[em.functor.mor_map[m]] != em.source.q_mor[m])
      rep.fail("extension-morphism.q", tuple_str({m}));
  rep.sort();
  return rep;
}

// Transformation between parallel extension morphisms with component
// (gamma(g), x + phi_A(g), g) at the object (x, g).
inline TwoGroupTransformation two_morphism_from_gamma(const ExtensionMorphism& a,
                                                      const Cochain& gamma) {
  const FiniteGroup& g = a.source.base;
  const FgAbelianGroup& zg = a.source.cocycle.tau.target;
  const FgAbelianGroup& ag = a.source.cocycle.tau.source;
  if (gamma.degree != 1 || !(gamma.coeff() == ag))
    throw std::invalid_argument("need a degree 1 cochain valued in the kernel-side group");
  FiniteGroup zz = zg.to_finite_group();
  int ng = g.order, nz = zz.order;
  TwoGroupTransformation tr;
  tr.component.resize(a.source.total.n_obj);
  for (int x = 0; x < nz; ++x)
    for (int gi = 0; gi < ng; ++gi) {
      int a_idx = static_cast<int>(ag.index_of(gamma.value_at({gi})));
      int x_shift = a.functor.obj_map[x * ng + gi] / ng;
      tr.component[x * ng + gi] = (a_idx * nz + x_shift) * ng + gi;
    }
  return tr;
}

}  // namespace catext
