#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "catext/cochain.hpp"
#include "catext/crossed_module.hpp"
#include "catext/report.hpp"

namespace catext {

inline constexpr int kMaxTwoGroupMorphisms = 1024;

struct NotComposable : std::runtime_error {
  int f2, f1;
  NotComposable(int f2_, int f1_)
      : std::runtime_error("morphisms " + std::to_string(f2_) + " and " + std::to_string(f1_) +
                           " are not composable"),
        f2(f2_),
        f1(f1_) {}
};

// Strict-unital weak 2-group on dense index tables. Object 0 is the unit;
// composition is partial with -1 marking undefined cells; the associator is a
// total table over object triples.
struct TwoGroup {
  int n_obj = 0, n_mor = 0;
  std::vector<int> src, tgt;      // per morphism
  std::vector<int> idm;           // per object
  std::vector<int> comp;          // comp[f2 * n_mor + f1] = f2 after f1, or -1
  std::vector<int> tens_obj;      // n_obj * n_obj
  std::vector<int> tens_mor;      // n_mor * n_mor, total
  std::vector<int> inv_obj;       // per object
  std::vector<int> inv_mor;       // per morphism
  std::vector<int> assoc;         // per object triple (g*n_obj + h)*n_obj + k

  int compose_raw(int f2, int f1) const {
    return comp[static_cast<std::size_t>(f2) * n_mor + f1];
  }
  // checked accessor: structured error on non-composable arguments
  int compose(int f2, int f1) const {
    int r = compose_raw(f2, f1);
    if (r < 0) throw NotComposable(f2, f1);
    return r;
  }
  int tobj(int a, int b) const { return tens_obj[static_cast<std::size_t>(a) * n_obj + b]; }
  int tmor(int a, int b) const { return tens_mor[static_cast<std::size_t>(a) * n_mor + b]; }
  int alpha(int a, int b, int c) const {
    return assoc[(static_cast<std::size_t>(a) * n_obj + b) * n_obj + c];
  }

  void allocate() {
    src.assign(n_mor, 0);
    tgt.assign(n_mor, 0);
    idm.assign(n_obj, 0);
    comp.assign(static_cast<std::size_t>(n_mor) * n_mor, -1);
    tens_obj.assign(static_cast<std::size_t>(n_obj) * n_obj, 0);
    tens_mor.assign(static_cast<std::size_t>(n_mor) * n_mor, 0);
    inv_obj.assign(n_obj, 0);
    inv_mor.assign(n_mor, 0);
    assoc.assign(static_cast<std::size_t>(n_obj) * n_obj * n_obj, 0);
  }
};

// Partition of objects into isomorphism classes: objects are connected when
// some morphism runs between them. Returns least-index class representatives
// through `reps` and a class id per object.
inline std::vector<int> object_iso_classes(const TwoGroup& t, std::vector<int>* reps = nullptr) {
  std::vector<int> parent(t.n_obj);
  for (int i = 0; i < t.n_obj; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < t.n_mor; ++f) {
    int a = find(t.src[f]), b = find(t.tgt[f]);
    if (a != b) parent[a < b ? b : a] = a < b ? a : b;
  }
  std::vector<int> class_of(t.n_obj, -1), rep_list;
  for (int i = 0; i < t.n_obj; ++i) {
    int r = find(i);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(rep_list.size());
      rep_list.push_back(r);
    }
    class_of[i] = class_of[r];
  }
  if (reps) *reps = rep_list;
  return class_of;
}

// Full axiom sweep. Failures carry the axiom class and the witness indices;
// the two associator checks that valid weak instances may break are reported
// at informational severity.
inline Report verify_2group(const TwoGroup& t) {
  Report rep;
  if (t.n_obj <= 0 || t.n_mor <= 0) {
    rep.fail("structure.size", "()");
    return rep;
  }
  if (t.n_mor > kMaxTwoGroupMorphisms) throw Refusal("2-group too large to verify");
  auto in_obj = [&](int o) { return o >= 0 && o < t.n_obj; };
  auto in_mor = [&](int m) { return m >= 0 && m < t.n_mor; };
  bool shape_ok =
      static_cast<int>(t.src.size()) == t.n_mor && static_cast<int>(t.tgt.size()) == t.n_mor &&
      static_cast<int>(t.idm.size()) == t.n_obj &&
      t.comp.size() == static_cast<std::size_t>(t.n_mor) * t.n_mor &&
      t.tens_obj.size() == static_cast<std::size_t>(t.n_obj) * t.n_obj &&
      t.tens_mor.size() == static_cast<std::size_t>(t.n_mor) * t.n_mor &&
      static_cast<int>(t.inv_obj.size()) == t.n_obj &&
      static_cast<int>(t.inv_mor.size()) == t.n_mor &&
      t.assoc.size() == static_cast<std::size_t>(t.n_obj) * t.n_obj * t.n_obj;
  if (!shape_ok) {
    rep.fail("structure.shape", "()");
    return rep;
  }
  for (int f = 0; f < t.n_mor; ++f)
    if (!in_obj(t.src[f]) || !in_obj(t.tgt[f]) || !in_mor(t.inv_mor[f]))
      rep.fail("structure.range", tuple_str({f}));
  for (int o = 0; o < t.n_obj; ++o)
    if (!in_mor(t.idm[o]) || !in_obj(t.inv_obj[o])) rep.fail("structure.range", tuple_str({o}));
  for (int a = 0; a < t.n_mor; ++a)
    for (int b = 0; b < t.n_mor; ++b) {
      if (t.compose_raw(a, b) != -1 && !in_mor(t.compose_raw(a, b)))
        rep.fail("structure.range", tuple_str({a, b}));
      if (!in_mor(t.tmor(a, b))) rep.fail("structure.range", tuple_str({a, b}));
    }
  for (int a = 0; a < t.n_obj; ++a)
    for (int b = 0; b < t.n_obj; ++b) {
      if (!in_obj(t.tobj(a, b))) rep.fail("structure.range", tuple_str({a, b}));
      for (int c = 0; c < t.n_obj; ++c)
        if (!in_mor(t.alpha(a, b, c))) rep.fail("structure.range", tuple_str({a, b, c}));
    }
  if (!rep.passed()) {
    rep.sort();
    return rep;
  }

  // category axioms
  for (int o = 0; o < t.n_obj; ++o) {
    int i = t.idm[o];
    if (t.src[i] != o || t.tgt[i] != o) rep.fail("category.identity-endpoints", tuple_str({o}));
  }
  for (int f2 = 0; f2 < t.n_mor; ++f2)
    for (int f1 = 0; f1 < t.n_mor; ++f1) {
      int c = t.compose_raw(f2, f1);
      bool should = t.tgt[f1] == t.src[f2];
      if (should != (c >= 0)) {
        rep.fail("category.composition-defined", tuple_str({f2, f1}));
        continue;
      }
      if (c >= 0 && (t.src[c] != t.src[f1] || t.tgt[c] != t.tgt[f2]))
        rep.fail("category.composition-endpoints", tuple_str({f2, f1}));
    }
  for (int f = 0; f < t.n_mor; ++f) {
    int from_right = t.compose_raw(f, t.idm[t.src[f]]);
    int from_left = t.compose_raw(t.idm[t.tgt[f]], f);
    if (from_right != f || from_left != f) rep.fail("category.identity-law", tuple_str({f}));
  }
  for (int f3 = 0; f3 < t.n_mor; ++f3)
    for (int f2 = 0; f2 < t.n_mor; ++f2) {
      if (t.tgt[f2] != t.src[f3]) continue;
      int c32 = t.compose_raw(f3, f2);
      for (int f1 = 0; f1 < t.n_mor; ++f1) {
        if (t.tgt[f1] != t.src[f2]) continue;
        int c21 = t.compose_raw(f2, f1);
        if (c21 < 0 || c32 < 0) {
          rep.fail("category.associativity", tuple_str({f3, f2, f1}));
          continue;
        }
        int left = t.compose_raw(f3, c21);
        int right = t.compose_raw(c32, f1);
        if (left != right || left < 0) rep.fail("category.associativity", tuple_str({f3, f2, f1}));
      }
    }
  for (int f = 0; f < t.n_mor; ++f) {
    bool invertible = false;
    for (int g = 0; g < t.n_mor && !invertible; ++g)
      invertible = t.compose_raw(g, f) == t.idm[t.src[f]] && t.compose_raw(f, g) == t.idm[t.tgt[f]];
    if (!invertible) rep.fail("category.morphism-invertible", tuple_str({f}));
  }

  // tensor functor
  int unit_id = t.idm[0];
  for (int a = 0; a < t.n_mor; ++a)
    for (int b = 0; b < t.n_mor; ++b) {
      int m = t.tmor(a, b);
      if (t.src[m] != t.tobj(t.src[a], t.src[b]) || t.tgt[m] != t.tobj(t.tgt[a], t.tgt[b]))
        rep.fail("tensor.endpoints", tuple_str({a, b}));
    }
  for (int a = 0; a < t.n_obj; ++a)
    for (int b = 0; b < t.n_obj; ++b)
      if (t.tmor(t.idm[a], t.idm[b]) != t.idm[t.tobj(a, b)])
        rep.fail("tensor.identity", tuple_str({a, b}));
  {
    std::vector<std::pair<int, int>> composable;
    for (int f2 = 0; f2 < t.n_mor; ++f2)
      for (int f1 = 0; f1 < t.n_mor; ++f1)
        if (t.compose_raw(f2, f1) >= 0) composable.push_back({f2, f1});
    if (composable.size() > 20000) throw Refusal("2-group too large to verify");
    for (const auto& [f2, f1] : composable)
      for (const auto& [h2, h1] : composable) {
        int lhs = t.tmor(t.compose_raw(f2, f1), t.compose_raw(h2, h1));
        int rhs = t.compose_raw(t.tmor(f2, h2), t.tmor(f1, h1));
        if (lhs != rhs) rep.fail("tensor.interchange", tuple_str({f2, f1, h2, h1}));
      }
  }

  // strict unit
  for (int o = 0; o < t.n_obj; ++o)
    if (t.tobj(0, o) != o || t.tobj(o, 0) != o) rep.fail("unit.object", tuple_str({o}));
  for (int f = 0; f < t.n_mor; ++f)
    if (t.tmor(unit_id, f) != f || t.tmor(f, unit_id) != f) rep.fail("unit.morphism", tuple_str({f}));

  // inverses
  for (int o = 0; o < t.n_obj; ++o)
    if (t.tobj(o, t.inv_obj[o]) != 0 || t.tobj(t.inv_obj[o], o) != 0)
      rep.fail("inverse.object", tuple_str({o}));
  for (int f = 0; f < t.n_mor; ++f)
    if (t.tmor(f, t.inv_mor[f]) != unit_id || t.tmor(t.inv_mor[f], f) != unit_id)
      rep.fail("inverse.morphism", tuple_str({f}));
  for (int f = 0; f < t.n_mor; ++f)
    if (t.src[t.inv_mor[f]] != t.inv_obj[t.src[f]] || t.tgt[t.inv_mor[f]] != t.inv_obj[t.tgt[f]])
      rep.fail("inversion.endpoints", tuple_str({f}));
  for (int o = 0; o < t.n_obj; ++o)
    if (t.inv_mor[t.idm[o]] != t.idm[t.inv_obj[o]]) rep.fail("inversion.identity", tuple_str({o}));
  for (int f2 = 0; f2 < t.n_mor; ++f2)
    for (int f1 = 0; f1 < t.n_mor; ++f1) {
      if (t.compose_raw(f2, f1) < 0) continue;
      int lhs = t.inv_mor[t.compose_raw(f2, f1)];
      int rhs = t.compose_raw(t.inv_mor[f2], t.inv_mor[f1]);
      if (lhs != rhs) rep.fail("inversion.composition", tuple_str({f2, f1}));
    }

  // associator
  for (int a = 0; a < t.n_obj; ++a)
    for (int b = 0; b < t.n_obj; ++b)
      for (int c = 0; c < t.n_obj; ++c) {
        int al = t.alpha(a, b, c);
        if (t.src[al] != t.tobj(t.tobj(a, b), c) || t.tgt[al] != t.tobj(a, t.tobj(b, c)))
          rep.fail("associator.endpoints", tuple_str({a, b, c}));
      }
  for (int f1 = 0; f1 < t.n_mor; ++f1)
    for (int f2 = 0; f2 < t.n_mor; ++f2)
      for (int f3 = 0; f3 < t.n_mor; ++f3) {
        int pre = t.tmor(t.tmor(f1, f2), f3);
        int post = t.tmor(f1, t.tmor(f2, f3));
        int lhs = t.compose_raw(t.alpha(t.tgt[f1], t.tgt[f2], t.tgt[f3]), pre);
        int rhs = t.compose_raw(post, t.alpha(t.src[f1], t.src[f2], t.src[f3]));
        if (lhs != rhs || lhs < 0) rep.fail("associator.naturality", tuple_str({f1, f2, f3}));
      }
  for (int a = 0; a < t.n_obj; ++a)
    for (int b = 0; b < t.n_obj; ++b)
      for (int c = 0; c < t.n_obj; ++c)
        for (int d = 0; d < t.n_obj; ++d) {
          // alpha_{a,b,c tens d} after alpha_{a tens b,c,d}
          int lhs = t.compose_raw(t.alpha(a, b, t.tobj(c, d)), t.alpha(t.tobj(a, b), c, d));
          int step1 = t.tmor(t.alpha(a, b, c), t.idm[d]);
          int step2 = t.compose_raw(t.alpha(a, t.tobj(b, c), d), step1);
          int rhs = step2 < 0 ? -1 : t.compose_raw(t.tmor(t.idm[a], t.alpha(b, c, d)), step2);
          if (lhs != rhs || lhs < 0) rep.fail("associator.pentagon", tuple_str({a, b, c, d}));
        }
  for (int a = 0; a < t.n_obj; ++a)
    for (int b = 0; b < t.n_obj; ++b)
      for (int c = 0; c < t.n_obj; ++c) {
        if (a != 0 && b != 0 && c != 0) continue;
        if (t.alpha(a, b, c) != t.idm[t.tobj(t.tobj(a, b), c)])
          rep.fail("associator.unit-argument", tuple_str({a, b, c}));
      }

  // the zigzag variants hold in the strictified picture but can fail for
  // genuinely weak instances; informational only
  for (int a = 0; a < t.n_obj; ++a) {
    int ab = t.inv_obj[a];
    if (t.alpha(a, ab, a) != t.idm[t.tobj(t.tobj(a, ab), a)])
      rep.info("associator.inverse-zigzag", tuple_str({a, ab, a}));
    if (t.alpha(ab, a, ab) != t.idm[t.tobj(t.tobj(ab, a), ab)])
      rep.info("associator.inverse-zigzag", tuple_str({ab, a, ab}));
  }
  {
    std::vector<int> class_of = object_iso_classes(t);
    int unit_class = class_of[0];
    for (int a = 0; a < t.n_obj; ++a)
      for (int b = 0; b < t.n_obj; ++b)
        for (int c = 0; c < t.n_obj; ++c) {
          if (class_of[a] != unit_class || class_of[b] != unit_class ||
              class_of[c] != unit_class)
            continue;
          if (a == 0 || b == 0 || c == 0) continue;  // covered by the hard check
          if (t.alpha(a, b, c) != t.idm[t.tobj(t.tobj(a, b), c)])
            rep.info("associator.unit-isomorphic", tuple_str({a, b, c}));
        }
  }
  rep.sort();
  return rep;
}

// Objects G, morphisms H x G with (h,g): g -> tau(h) g, composition stacking
// h's, tensor (h1,g1)(h2,g2) = (h1 * g1.h2, g1 g2). The associator is
// identity. Morphism index = h * |G| + g so the unit identity sits at 0.
inline TwoGroup strict_2group_from_crossed_module(const CrossedModule& cm) {
  {
    Report r = verify_crossed_module(cm);
    if (!r.passed()) throw Refusal("crossed module axioms fail", r);
  }
  int ng = cm.g.order, nh = cm.h.order;
  if (nh * ng > kMaxTwoGroupMorphisms) throw Refusal("crossed module too large");
  TwoGroup t;
  t.n_obj = ng;
  t.n_mor = nh * ng;
  t.allocate();
  auto mi = [&](int h, int g) { return h * ng + g; };
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g) {
      int m = mi(h, g);
      t.src[m] = g;
      t.tgt[m] = cm.g.mul(cm.tau[h], g);
      t.inv_mor[m] = mi(cm.action[cm.g.inv(g)][cm.h.inv(h)], cm.g.inv(g));
    }
  for (int g = 0; g < ng; ++g) {
    t.idm[g] = mi(0, g);
    t.inv_obj[g] = cm.g.inv(g);
    for (int g2 = 0; g2 < ng; ++g2) t.tens_obj[static_cast<std::size_t>(g) * ng + g2] = cm.g.mul(g, g2);
  }
  for (int h2 = 0; h2 < nh; ++h2)
    for (int g2 = 0; g2 < ng; ++g2)
      for (int h1 = 0; h1 < nh; ++h1)
        for (int g1 = 0; g1 < ng; ++g1) {
          int m2 = mi(h2, g2), m1 = mi(h1, g1);
          if (g2 == t.tgt[m1]) t.comp[static_cast<std::size_t>(m2) * t.n_mor + m1] = mi(cm.h.mul(h2, h1), g1);
          t.tens_mor[static_cast<std::size_t>(m1) * t.n_mor + m2] =
              mi(cm.h.mul(h1, cm.action[g1][h2]), cm.g.mul(g1, g2));
        }
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      for (int c = 0; c < ng; ++c)
        t.assoc[(static_cast<std::size_t>(a) * ng + b) * ng + c] = t.idm[cm.g.mul3(a, b, c)];
  return t;
}

// Objects G, morphisms A x G all endomorphisms, associator the 3-cochain.
// Pentagon holds exactly when theta is a cocycle for the module action.
inline TwoGroup skeletal_2group_from_3cocycle_unchecked(const Cochain& theta) {
  if (theta.degree != 3) throw std::invalid_argument("associator data must have degree 3");
  if (!theta.coeff().finite()) throw Refusal("skeletal model needs finite coefficients");
  const FiniteGroup& g = theta.group();
  long long na = theta.coeff().enum_size();
  int ng = g.order;
  if (na * ng > kMaxTwoGroupMorphisms) throw Refusal("skeletal model too large");
  const FgAbelianGroup& a_grp = theta.coeff();
  TwoGroup t;
  t.n_obj = ng;
  t.n_mor = static_cast<int>(na) * ng;
  t.allocate();
  auto mi = [&](long long a, int gg) { return static_cast<int>(a) * ng + gg; };
  for (long long a = 0; a < na; ++a)
    for (int gg = 0; gg < ng; ++gg) {
      int m = mi(a, gg);
      t.src[m] = gg;
      t.tgt[m] = gg;
      El inv_val = a_grp.neg(theta.action.apply(g.inv(gg), a_grp.element_at(a)));
      t.inv_mor[m] = mi(a_grp.index_of(inv_val), g.inv(gg));
    }
  for (int gg = 0; gg < ng; ++gg) {
    t.idm[gg] = mi(0, gg);
    t.inv_obj[gg] = g.inv(gg);
    for (int g2 = 0; g2 < ng; ++g2) t.tens_obj[static_cast<std::size_t>(gg) * ng + g2] = g.mul(gg, g2);
  }
  for (long long a1 = 0; a1 < na; ++a1)
    for (int g1 = 0; g1 < ng; ++g1)
      for (long long a2 = 0; a2 < na; ++a2)
        for (int g2 = 0; g2 < ng; ++g2) {
          int m1 = mi(a1, g1), m2 = mi(a2, g2);
          if (g1 == g2)
            t.comp[static_cast<std::size_t>(m2) * t.n_mor + m1] =
                mi(a_grp.index_of(a_grp.add(a_grp.element_at(a1), a_grp.element_at(a2))), g1);
          El tens = a_grp.add(a_grp.element_at(a1), theta.action.apply(g1, a_grp.element_at(a2)));
          t.tens_mor[static_cast<std::size_t>(m1) * t.n_mor + m2] = mi(a_grp.index_of(tens), g.mul(g1, g2));
        }
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      for (int c = 0; c < ng; ++c)
        t.assoc[(static_cast<std::size_t>(a) * ng + b) * ng + c] =
            mi(a_grp.index_of(theta.value_at({a, b, c})), g.mul3(a, b, c));
  return t;
}

inline TwoGroup skeletal_2group_from_3cocycle(const Cochain& theta) {
  if (theta.degree != 3) throw std::invalid_argument("associator data must have degree 3");
  Cochain dt = d_gp(theta);
  if (!dt.is_zero()) {
    Report rep;
    for (long long i = 0; i < dt.tuples(); ++i)
      if (!dt.coeff().is_zero(dt.values[i]))
        rep.fail("cochain.not-a-cocycle",
                 tuple_to_str(cochain_tuple_at(i, 4, theta.group().order)));
    rep.sort();
    throw Refusal("associator data is not a 3-cocycle", rep);
  }
  return skeletal_2group_from_3cocycle_unchecked(theta);
}

// Group structure on object isomorphism classes. Verified, not assumed: if
// tensoring is not constant on classes the input was not a valid 2-group.
struct SkeletonResult {
  FiniteGroup group;
  std::vector<int> class_of;  // object -> skeleton element
  std::vector<int> reps;      // skeleton element -> least object index
};

inline SkeletonResult skeleton_group(const TwoGroup& t) {
  SkeletonResult out;
  out.class_of = object_iso_classes(t, &out.reps);
  int n = static_cast<int>(out.reps.size());
  if (out.class_of[0] != 0) throw std::logic_error("unit class must be class 0");
  out.group.order = n;
  out.group.table.assign(static_cast<std::size_t>(n) * n, 0);
  out.group.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    out.group.inverse[a] = out.class_of[t.inv_obj[out.reps[a]]];
    for (int b = 0; b < n; ++b)
      out.group.table[static_cast<std::size_t>(a) * n + b] =
          out.class_of[t.tobj(out.reps[a], out.reps[b])];
  }
  // well-definedness across the whole classes
  for (int x = 0; x < t.n_obj; ++x)
    for (int y = 0; y < t.n_obj; ++y) {
      int expect = out.group.table[static_cast<std::size_t>(out.class_of[x]) * n + out.class_of[y]];
      if (out.class_of[t.tobj(x, y)] != expect)
        throw Refusal("tensor product is not constant on isomorphism classes");
    }
  return out;
}

// Monoidal functor data between 2-groups on index tables. f2 holds the
// structure morphism (in the target) per source object pair.
struct TwoGroupFunctor {
  std::vector<int> obj_map;  // per source object
  std::vector<int> mor_map;  // per source morphism
  std::vector<int> f2;       // per source object pair (a * n_obj + b)
};

inline Report verify_2group_morphism(const TwoGroup& s, const TwoGroup& t,
                                     const TwoGroupFunctor& fn) {
  Report rep;
  auto f2_at = [&](int a, int b) { return fn.f2[static_cast<std::size_t>(a) * s.n_obj + b]; };
  bool shape_ok = static_cast<int>(fn.obj_map.size()) == s.n_obj &&
                  static_cast<int>(fn.mor_map.size()) == s.n_mor &&
                  fn.f2.size() == static_cast<std::size_t>(s.n_obj) * s.n_obj;
  if (shape_ok) {
    for (int o : fn.obj_map) shape_ok = shape_ok && o >= 0 && o < t.n_obj;
    for (int m : fn.mor_map) shape_ok = shape_ok && m >= 0 && m < t.n_mor;
    for (int m : fn.f2) shape_ok = shape_ok && m >= 0 && m < t.n_mor;
  }
  if (!shape_ok) {
    rep.fail("2group-morphism.shape", "()");
    return rep;
  }

  if (fn.obj_map[0] != 0) rep.fail("2group-morphism.unit-object", tuple_str({0}));
  for (int m = 0; m < s.n_mor; ++m)
    if (t.src[fn.mor_map[m]] != fn.obj_map[s.src[m]] ||
        t.tgt[fn.mor_map[m]] != fn.obj_map[s.tgt[m]])
      rep.fail("2group-morphism.endpoints", tuple_str({m}));
  for (int o = 0; o < s.n_obj; ++o)
    if (fn.mor_map[s.idm[o]] != t.idm[fn.obj_map[o]])
      rep.fail("2group-morphism.identity", tuple_str({o}));
  for (int m2 = 0; m2 < s.n_mor; ++m2)
    for (int m1 = 0; m1 < s.n_mor; ++m1) {
      int c = s.compose_raw(m2, m1);
      if (c < 0) continue;
      if (fn.mor_map[c] != t.compose_raw(fn.mor_map[m2], fn.mor_map[m1]))
        rep.fail("2group-morphism.composition", tuple_str({m2, m1}));
    }
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b) {
      int f2 = f2_at(a, b);
      if (t.src[f2] != t.tobj(fn.obj_map[a], fn.obj_map[b]) ||
          t.tgt[f2] != fn.obj_map[s.tobj(a, b)])
        rep.fail("2group-morphism.f2-endpoints", tuple_str({a, b}));
    }
  for (int a = 0; a < s.n_obj; ++a) {
    if (f2_at(a, 0) != t.idm[fn.obj_map[s.tobj(a, 0)]])
      rep.fail("2group-morphism.unit", tuple_str({a, 0}));
    if (f2_at(0, a) != t.idm[fn.obj_map[s.tobj(0, a)]])
      rep.fail("2group-morphism.unit", tuple_str({0, a}));
  }
  for (int m1 = 0; m1 < s.n_mor; ++m1)
    for (int m2 = 0; m2 < s.n_mor; ++m2) {
      int lhs = t.compose_raw(f2_at(s.tgt[m1], s.tgt[m2]), t.tmor(fn.mor_map[m1], fn.mor_map[m2]));
      int rhs = t.compose_raw(fn.mor_map[s.tmor(m1, m2)], f2_at(s.src[m1], s.src[m2]));
      if (lhs != rhs || lhs < 0) rep.fail("2group-morphism.naturality", tuple_str({m1, m2}));
    }
  // coherence square against both associators
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b)
      for (int c = 0; c < s.n_obj; ++c) {
        int step_l = t.compose_raw(f2_at(s.tobj(a, b), c), t.tmor(f2_at(a, b), t.idm[fn.obj_map[c]]));
        int lhs = step_l < 0 ? -1 : t.compose_raw(fn.mor_map[s.alpha(a, b, c)], step_l);
        int step_r = t.compose_raw(t.tmor(t.idm[fn.obj_map[a]], f2_at(b, c)),
                                   t.alpha(fn.obj_map[a], fn.obj_map[b], fn.obj_map[c]));
        int rhs = step_r < 0 ? -1 : t.compose_raw(f2_at(a, s.tobj(b, c)), step_r);
        if (lhs != rhs || lhs < 0) rep.fail("2group-morphism.coherence", tuple_str({a, b, c}));
      }
  // pairing with the inverse object is not forced by the axioms
  for (int a = 0; a < s.n_obj; ++a)
    if (f2_at(a, s.inv_obj[a]) != t.idm[fn.obj_map[s.tobj(a, s.inv_obj[a])]])
      rep.info("2group-morphism.inverse-pairing", tuple_str({a, s.inv_obj[a]}));
  rep.sort();
  return rep;
}

// Natural transformation data between parallel monoidal functors: one target
// morphism per source object.
struct TwoGroupTransformation {
  std::vector<int> component;
};

inline Report verify_2group_transformation(const TwoGroup& s, const TwoGroup& t,
                                           const TwoGroupFunctor& a, const TwoGroupFunctor& b,
                                           const TwoGroupTransformation& tr) {
  Report rep;
  bool shape_ok = static_cast<int>(tr.component.size()) == s.n_obj;
  if (shape_ok)
    for (int m : tr.component) shape_ok = shape_ok && m >= 0 && m < t.n_mor;
  if (!shape_ok) {
    rep.fail("2group-transform.shape", "()");
    return rep;
  }
  auto f2_at = [&](const TwoGroupFunctor& fn, int x, int y) {
    return fn.f2[static_cast<std::size_t>(x) * s.n_obj + y];
  };
  for (int o = 0; o < s.n_obj; ++o)
    if (t.src[tr.component[o]] != a.obj_map[o] || t.tgt[tr.component[o]] != b.obj_map[o])
      rep.fail("2group-transform.endpoints", tuple_str({o}));
  for (int m = 0; m < s.n_mor; ++m) {
    int lhs = t.compose_raw(tr.component[s.tgt[m]], a.mor_map[m]);
    int rhs = t.compose_raw(b.mor_map[m], tr.component[s.src[m]]);
    if (lhs != rhs || lhs < 0) rep.fail("2group-transform.naturality", tuple_str({m}));
  }
  for (int x = 0; x < s.n_obj; ++x)
    for (int y = 0; y < s.n_obj; ++y) {
      int lhs = t.compose_raw(f2_at(b, x, y), t.tmor(tr.component[x], tr.component[y]));
      int rhs = t.compose_raw(tr.component[s.tobj(x, y)], f2_at(a, x, y));
      if (lhs != rhs || lhs < 0) rep.fail("2group-transform.monoidal", tuple_str({x, y}));
    }
  rep.sort();
  return rep;
}

// The tensor action of morphisms out of the unit's class on all morphisms.
// For a valid 2-group this action is free and its orbits under the
// source-fiber subgroup reproduce the objects.
inline Report hidden_action_check(const TwoGroup& t) {
  Report rep;
  std::vector<int> class_of = object_iso_classes(t);
  int unit_class = class_of[0];
  std::vector<int> unit_mors;  // morphisms between objects isomorphic to the unit
  for (int f = 0; f < t.n_mor; ++f)
    if (class_of[t.src[f]] == unit_class && class_of[t.tgt[f]] == unit_class)
      unit_mors.push_back(f);

  // closure under tensor and inverses: a group, with id at the unit identity
  {
    std::vector<char> in(t.n_mor, 0);
    for (int f : unit_mors) in[f] = 1;
    if (!in[t.idm[0]]) rep.fail("hidden-action.group-identity", tuple_str({t.idm[0]}));
    for (int a : unit_mors) {
      if (!in[t.inv_mor[a]]) rep.fail("hidden-action.group-inverse", tuple_str({a}));
      for (int b : unit_mors)
        if (!in[t.tmor(a, b)]) rep.fail("hidden-action.group-closure", tuple_str({a, b}));
    }
  }

  // freeness: only the unit identity stabilizes anything
  for (int a : unit_mors)
    for (int f = 0; f < t.n_mor; ++f)
      if (t.tmor(a, f) == f && a != t.idm[0]) rep.fail("hidden-action.freeness", tuple_str({a, f}));

  // orbits of the source-fiber subgroup over the unit object
  std::vector<int> sub;
  for (int f = 0; f < t.n_mor; ++f)
    if (t.src[f] == 0 && class_of[t.tgt[f]] == unit_class) sub.push_back(f);
  // orbit of f under left tensor by sub should be exactly the source fiber
  for (int f = 0; f < t.n_mor; ++f) {
    std::vector<char> orbit(t.n_mor, 0);
    for (int a : sub) orbit[t.tmor(a, f)] = 1;
    for (int m = 0; m < t.n_mor; ++m) {
      bool same_fiber = t.src[m] == t.src[f];
      if (orbit[m] && !same_fiber) rep.fail("hidden-action.orbit-escapes-fiber", tuple_str({f, m}));
      if (!orbit[m] && same_fiber) rep.fail("hidden-action.orbit-misses-fiber", tuple_str({f, m}));
    }
  }
  rep.sort();
  return rep;
}

}  // namespace catext
