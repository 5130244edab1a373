#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catext/finite_group.hpp"
#include "catext/integer_matrix.hpp"
#include "catext/report.hpp"

namespace catext {

// Element of a finitely generated abelian group, as coordinates over the
// generators: free coordinates first, then one per invariant factor.
using El = std::vector<Int>;

inline std::string el_str(const El& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2, so the
// presentation is canonical and equality of groups is equality of data.
struct FgAbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;

  int gens() const { return rank + static_cast<int>(torsion.size()); }
  bool finite() const { return rank == 0; }

  bool canonical() const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2) return false;
      if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) return false;
    }
    return rank >= 0;
  }

  Int size() const {
    if (!finite()) throw std::logic_error("size() of an infinite group");
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
  }

  El zero() const { return El(gens(), 0); }

  El reduce(El v) const {
    if (static_cast<int>(v.size()) != gens())
      throw std::invalid_argument("element has wrong coordinate count");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      Int& c = v[rank + i];
      c %= torsion[i];
      if (c < 0) c += torsion[i];
    }
    return v;
  }

  El add(const El& a, const El& b) const {
    El v(gens());
    for (int i = 0; i < gens(); ++i) v[i] = a[i] + b[i];
    return reduce(std::move(v));
  }

  El neg(const El& a) const {
    El v(gens());
    for (int i = 0; i < gens(); ++i) v[i] = -a[i];
    return reduce(std::move(v));
  }

  El sub(const El& a, const El& b) const { return add(a, neg(b)); }

  El smul(const Int& k, const El& a) const {
    El v(gens());
    for (int i = 0; i < gens(); ++i) v[i] = k * a[i];
    return reduce(std::move(v));
  }

  bool is_zero(const El& a) const {
    for (const auto& c : reduce(a))
      if (c != 0) return false;
    return true;
  }

  // Dense enumeration, finite groups only; mixed-radix with the first torsion
  // coordinate slowest so index 0 is the zero element.
  long long enum_size() const {
    if (!finite()) throw std::logic_error("cannot enumerate an infinite group");
    Int n = size();
    if (n > 1000000) throw std::logic_error("group too large to enumerate");
    return n.convert_to<long long>();
  }

  El element_at(long long idx) const {
    El v(gens(), 0);
    for (int i = static_cast<int>(torsion.size()) - 1; i >= 0; --i) {
      Int d = torsion[i];
      v[rank + i] = Int(idx) % d;
      idx = (Int(idx) / d).convert_to<long long>();
    }
    return v;
  }

  long long index_of(const El& v_in) const {
    El v = reduce(v_in);
    Int idx = 0;
    for (std::size_t i = 0; i < torsion.size(); ++i) idx = idx * torsion[i] + v[rank + i];
    return idx.convert_to<long long>();
  }

  // Multiplication table over the enumeration order, for handing finite
  // abelian groups to table-based machinery.
  FiniteGroup to_finite_group() const {
    long long n = enum_size();
    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.table.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    for (long long i = 0; i < n; ++i) {
      El a = element_at(i);
      g.inverse[i] = static_cast<int>(index_of(neg(a)));
      for (long long j = 0; j < n; ++j)
        g.table[static_cast<std::size_t>(i) * n + j] =
            static_cast<int>(index_of(add(a, element_at(j))));
    }
    return g;
  }

  bool operator==(const FgAbelianGroup& o) const = default;
};

inline FgAbelianGroup trivial_group() { return {}; }

inline FgAbelianGroup free_abelian(int r) { return {r, {}}; }

inline FgAbelianGroup cyclic(const Int& n) {
  if (n < 1) throw std::invalid_argument("cyclic needs n >= 1");
  if (n == 1) return {};
  return {0, {n}};
}

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  // canonicalize: merge torsion through the invariant factors of the product
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  if (all.empty()) return {a.rank + b.rank, {}};
  int k = static_cast<int>(all.size());
  ZMat rel(k, k);
  for (int i = 0; i < k; ++i) rel(i, i) = all[i];
  auto s = smith_normal_form(rel);
  std::vector<Int> merged;
  for (const auto& d : s.diag())
    if (d > 1) merged.push_back(d);
  return {a.rank + b.rank, merged};
}

// Homomorphism as the matrix whose column j is the image of generator j of the
// source, in target coordinates.
struct AbelianHom {
  FgAbelianGroup source, target;
  ZMat matrix;  // target.gens() x source.gens()

  El apply(const El& x) const { return target.reduce(catext::matvec(matrix, x)); }

  static AbelianHom identity(const FgAbelianGroup& g) {
    return {g, g, ZMat::identity(g.gens())};
  }

  static AbelianHom zero(const FgAbelianGroup& s, const FgAbelianGroup& t) {
    return {s, t, ZMat(t.gens(), s.gens())};
  }
};

inline AbelianHom compose(const AbelianHom& f, const AbelianHom& g) {
  if (!(g.target == f.source)) throw std::invalid_argument("hom composition mismatch");
  return {g.source, f.target, mul(f.matrix, g.matrix)};
}

// Well-definedness: each source relation d_j e_j must map to zero in the
// target (free coordinates exactly zero, torsion coordinates zero mod d).
inline Report verify_hom(const AbelianHom& h) {
  Report rep;
  if (h.matrix.rows != h.target.gens() || h.matrix.cols != h.source.gens()) {
    rep.fail("hom.shape", "()");
    return rep;
  }
  if (!h.source.canonical()) rep.fail("hom.source-canonical", "()");
  if (!h.target.canonical()) rep.fail("hom.target-canonical", "()");
  for (std::size_t j = 0; j < h.source.torsion.size(); ++j) {
    El gen = h.source.zero();
    gen[h.source.rank + j] = h.source.torsion[j];
    El img = h.target.reduce(catext::matvec(h.matrix, gen));
    if (!h.target.is_zero(img))
      rep.fail("hom.well-defined", "(torsion-gen " + std::to_string(j) + ")");
  }
  rep.sort();
  return rep;
}

// Relation matrix of the target: columns d_j e_j.
inline ZMat relation_matrix(const FgAbelianGroup& g) {
  ZMat r(g.gens(), static_cast<int>(g.torsion.size()));
  for (std::size_t j = 0; j < g.torsion.size(); ++j) r(g.rank + static_cast<int>(j), j) = g.torsion[j];
  return r;
}

// A subquotient presented by generators (columns, in ambient coordinates) and
// a relation matrix over those generators. Carries enough of the reduction to
// compute coordinates of ambient elements.
struct PresentedGroup {
  FgAbelianGroup group;           // canonical answer
  std::vector<El> generator_lifts;  // ambient element per reported generator
  // coordinate extraction: coords_i(v) = (u*v)_i mod d_i (torsion) or exact (free)
  ZMat u;
  std::vector<Int> diag;  // invariant factor per reported torsion generator
  std::vector<int> pick;  // row of u per reported generator, free rows first
                          // to match the element layout of `group`

  El coords(const El& ambient_presentation_vector) const {
    El y = catext::matvec(u, ambient_presentation_vector);
    std::size_t nfree = pick.size() - diag.size();
    El out;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      Int c = y[pick[i]];
      if (i >= nfree) {
        c %= diag[i - nfree];
        if (c < 0) c += diag[i - nfree];
      }
      out.push_back(c);
    }
    return out;
  }
};

// Quotient Z^n / column-lattice(rel), with generator lifts back to Z^n.
inline PresentedGroup quotient_presentation(int n, const ZMat& rel) {
  auto s = smith_normal_form(rel);
  PresentedGroup p;
  p.u = s.u;
  std::vector<int> torsion_rows, free_rows;
  for (int i = 0; i < n; ++i) {
    Int d = i < s.rank ? s.d(i, i) : Int(0);
    if (d == 0)
      free_rows.push_back(i);
    else if (d > 1)
      torsion_rows.push_back(i);
  }
  for (int i : free_rows) p.pick.push_back(i);
  for (int i : torsion_rows) {
    p.diag.push_back(s.d(i, i));
    p.pick.push_back(i);
  }
  p.group.rank = static_cast<int>(free_rows.size());
  for (int i : torsion_rows) p.group.torsion.push_back(s.d(i, i));
  for (int i : p.pick) p.generator_lifts.push_back(s.u_inv.col(i));
  return p;
}

struct HomDecomposition {
  FgAbelianGroup kernel, image, cokernel;
  // witnesses, one per generator of the respective group
  std::vector<El> kernel_generators;    // elements of the source
  std::vector<El> image_generators;     // elements of the target
  std::vector<El> image_preimages;      // source elements mapping onto image_generators
  std::vector<El> cokernel_lifts;       // target elements projecting onto cokernel generators
  PresentedGroup cokernel_presentation; // for projecting arbitrary target elements
};

// Kernel, image and cokernel of h, all in canonical invariant-factor form.
// Everything reduces to Smith decompositions of three lattices:
//   K = preimage of the target relation lattice (x with h(x) ~ 0),
//   image = Z^{n_s} / K,  kernel = K / source relations,  coker = Z^{n_t} / (im h + rel).
inline HomDecomposition hom_decompose(const AbelianHom& h) {
  {
    Report wf = verify_hom(h);
    if (!wf.passed()) throw Refusal("homomorphism is not well defined", wf);
  }
  const int ns = h.source.gens(), nt = h.target.gens();
  HomDecomposition out;

  ZMat rel_s = relation_matrix(h.source);
  ZMat rel_t = relation_matrix(h.target);

  // K via the x-projection of ker [M | rel_t]
  ZMat w = hconcat(h.matrix, rel_t);
  ZMat ker_w = integer_kernel_basis(w);
  ZMat k_gen(ns, ker_w.cols);
  for (int j = 0; j < ker_w.cols; ++j)
    for (int i = 0; i < ns; ++i) k_gen(i, j) = ker_w(i, j);
  ZMat k_basis = column_lattice_basis(k_gen);  // ns x rk, independent columns

  // image = Z^{ns} / K
  {
    PresentedGroup p = quotient_presentation(ns, k_basis);
    out.image = p.group;
    for (const auto& lift : p.generator_lifts) {
      out.image_preimages.push_back(h.source.reduce(lift));
      out.image_generators.push_back(h.apply(lift));
    }
  }

  // kernel = K / im rel_s, in coordinates of k_basis
  {
    auto sk = smith_normal_form(k_basis);
    ZMat y(k_basis.cols, rel_s.cols);
    for (int j = 0; j < rel_s.cols; ++j) {
      auto sol = solve_integer(sk, rel_s.col(j));
      if (!sol) throw std::logic_error("source relation escapes the preimage lattice");
      for (int i = 0; i < k_basis.cols; ++i) y(i, j) = (*sol)[i];
    }
    PresentedGroup p = quotient_presentation(k_basis.cols, y);
    out.kernel = p.group;
    for (const auto& lift : p.generator_lifts)
      out.kernel_generators.push_back(h.source.reduce(catext::matvec(k_basis, lift)));
  }

  // cokernel = Z^{nt} / (columns of M and rel_t)
  {
    PresentedGroup p = quotient_presentation(nt, w);
    out.cokernel = p.group;
    for (const auto& lift : p.generator_lifts) out.cokernel_lifts.push_back(h.target.reduce(lift));
    out.cokernel_presentation = std::move(p);
  }
  return out;
}

// Coordinates of a target element in the cokernel of the decomposed hom.
inline El cokernel_coords(const HomDecomposition& d, const El& target_element) {
  return d.cokernel_presentation.coords(target_element);
}

// Some source element mapping to v, or nothing when v misses the image.
// Unique up to ker(h); exactly unique for injective h.
inline std::optional<El> hom_preimage(const AbelianHom& h, const El& v) {
  ZMat b = hconcat(h.matrix, relation_matrix(h.target));
  auto sol = solve_integer(b, v);
  if (!sol) return std::nullopt;
  return h.source.reduce(El(sol->begin(), sol->begin() + h.source.gens()));
}

}  // namespace catext
