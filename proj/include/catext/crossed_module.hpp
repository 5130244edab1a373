#pragma once

#include <vector>

#include "catext/abelian.hpp"
#include "catext/finite_group.hpp"
#include "catext/report.hpp"

namespace catext {

// tau: H -> G with G acting on H; both groups as dense tables, the action as
// one permutation row per group element.
struct CrossedModule {
  FiniteGroup h, g;
  std::vector<int> tau;                  // tau[hi] in G
  std::vector<std::vector<int>> action;  // action[gi][hi] in H
};

inline Report verify_crossed_module(const CrossedModule& cm) {
  Report rep;
  rep.merge(verify_finite_group(cm.h));
  rep.merge(verify_finite_group(cm.g));
  if (!rep.passed()) return rep;
  int nh = cm.h.order, ng = cm.g.order;
  if (static_cast<int>(cm.tau.size()) != nh || static_cast<int>(cm.action.size()) != ng) {
    rep.fail("crossed-module.shape", "()");
    return rep;
  }
  for (int gi = 0; gi < ng; ++gi)
    if (static_cast<int>(cm.action[gi].size()) != nh) {
      rep.fail("crossed-module.shape", tuple_str({gi}));
      return rep;
    }
  for (int hi = 0; hi < nh; ++hi)
    if (cm.tau[hi] < 0 || cm.tau[hi] >= ng) {
      rep.fail("crossed-module.tau-range", tuple_str({hi}));
      return rep;
    }
  for (int gi = 0; gi < ng; ++gi)
    for (int hi = 0; hi < nh; ++hi)
      if (cm.action[gi][hi] < 0 || cm.action[gi][hi] >= nh) {
        rep.fail("crossed-module.action-range", tuple_str({gi, hi}));
        return rep;
      }

  if (cm.tau[0] != 0) rep.fail("crossed-module.tau-hom", tuple_str({0}));
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      if (cm.tau[cm.h.mul(a, b)] != cm.g.mul(cm.tau[a], cm.tau[b]))
        rep.fail("crossed-module.tau-hom", tuple_str({a, b}));

  for (int gi = 0; gi < ng; ++gi) {
    std::vector<char> seen(nh, 0);
    for (int hi = 0; hi < nh; ++hi) seen[cm.action[gi][hi]] = 1;
    for (int hi = 0; hi < nh; ++hi)
      if (!seen[hi]) {
        rep.fail("crossed-module.action-bijective", tuple_str({gi}));
        break;
      }
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nh; ++b)
        if (cm.action[gi][cm.h.mul(a, b)] != cm.h.mul(cm.action[gi][a], cm.action[gi][b]))
          rep.fail("crossed-module.action-homomorphism", tuple_str({gi, a, b}));
  }

  for (int hi = 0; hi < nh; ++hi)
    if (cm.action[0][hi] != hi) rep.fail("crossed-module.action-unit", tuple_str({hi}));
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2)
      for (int hi = 0; hi < nh; ++hi)
        if (cm.action[g1][cm.action[g2][hi]] != cm.action[cm.g.mul(g1, g2)][hi])
          rep.fail("crossed-module.action-composition", tuple_str({g1, g2, hi}));

  // tau(g.h) = g tau(h) g^-1
  for (int gi = 0; gi < ng; ++gi)
    for (int hi = 0; hi < nh; ++hi)
      if (cm.tau[cm.action[gi][hi]] != cm.g.mul3(gi, cm.tau[hi], cm.g.inv(gi)))
        rep.fail("crossed-module.equivariance", tuple_str({gi, hi}));

  // tau(h).h' = h h' h^-1
  for (int hi = 0; hi < nh; ++hi)
    for (int hj = 0; hj < nh; ++hj)
      if (cm.action[cm.tau[hi]][hj] != cm.h.mul3(hi, hj, cm.h.inv(hi)))
        rep.fail("crossed-module.peiffer", tuple_str({hi, hj}));

  // consequences of the axioms, kept as their own checks for diagnostics
  for (int hi = 0; hi < nh; ++hi) {
    if (cm.tau[hi] != 0) continue;
    for (int hj = 0; hj < nh; ++hj)
      if (cm.h.mul(hi, hj) != cm.h.mul(hj, hi))
        rep.fail("crossed-module.kernel-central", tuple_str({hi, hj}));
  }
  {
    std::vector<char> in_image(ng, 0);
    for (int hi = 0; hi < nh; ++hi) in_image[cm.tau[hi]] = 1;
    for (int gi = 0; gi < ng; ++gi)
      for (int hi = 0; hi < nh; ++hi)
        if (!in_image[cm.g.mul3(gi, cm.tau[hi], cm.g.inv(gi))])
          rep.fail("crossed-module.image-normal", tuple_str({gi, hi}));
  }
  rep.sort();
  return rep;
}

// G acting on itself by conjugation, tau the identity.
inline CrossedModule conjugation_crossed_module(const FiniteGroup& g) {
  CrossedModule cm;
  cm.h = g;
  cm.g = g;
  cm.tau.resize(g.order);
  for (int i = 0; i < g.order; ++i) cm.tau[i] = i;
  cm.action.assign(g.order, std::vector<int>(g.order));
  for (int gi = 0; gi < g.order; ++gi)
    for (int hi = 0; hi < g.order; ++hi) cm.action[gi][hi] = g.mul3(gi, hi, g.inv(gi));
  return cm;
}

// Finite abelian hom tau: A -> Z as a crossed module with trivial action;
// element indices follow the dense enumerations of A and Z.
inline CrossedModule crossed_module_from_hom(const AbelianHom& tau) {
  CrossedModule cm;
  cm.h = tau.source.to_finite_group();
  cm.g = tau.target.to_finite_group();
  cm.tau.resize(cm.h.order);
  for (long long i = 0; i < cm.h.order; ++i)
    cm.tau[i] = static_cast<int>(tau.target.index_of(tau.apply(tau.source.element_at(i))));
  cm.action.assign(cm.g.order, {});
  for (int gi = 0; gi < cm.g.order; ++gi) {
    cm.action[gi].resize(cm.h.order);
    for (int hi = 0; hi < cm.h.order; ++hi) cm.action[gi][hi] = hi;
  }
  return cm;
}

}  // namespace catext
