#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "catext/extension.hpp"

using namespace catext;

namespace {

AbelianHom doubling_hom() { return {cyclic(2), cyclic(4), ZMat::from_rows({{2}})}; }

GeneralizedCocycle doubling_pair(long long f_value) {
  auto tau = doubling_hom();
  auto g = cyclic_group(2);
  GeneralizedCocycle gc{tau, Cochain::zero(2, GAction::trivial(g, tau.target)),
                        Cochain::zero(3, GAction::trivial(g, tau.source))};
  gc.f.set({1, 1}, {f_value});
  return gc;
}

}  // namespace

TEST_CASE("every accepted pair assembles into a verified extension sequence") {
  for (long long v = 0; v < 4; ++v) {
    auto seq = extension_from_cocycle(doubling_pair(v));
    auto total = verify_2group(seq.total);
    INFO("F(1,1) = " << v << "\n" << total.summary());
    REQUIRE(total.findings.empty());
    REQUIRE(verify_2group(seq.z_part).findings.empty());
    auto rep = verify_central_extension(seq);
    INFO(rep.summary());
    REQUIRE(rep.findings.empty());
    REQUIRE(hidden_action_check(seq.total).findings.empty());
  }
}

TEST_CASE("invalid pairs are refused before any structure is built") {
  auto gc = doubling_pair(0);
  gc.theta.set({1, 1, 1}, {1});
  bool refused = false;
  try {
    extension_from_cocycle(gc);
  } catch (const Refusal& r) {
    refused = true;
    REQUIRE(r.report.has("cocycle.coboundary"));
  }
  REQUIRE(refused);
}

TEST_CASE("the band of the zero pair is the direct product") {
  auto sb = skeleton_and_band(extension_from_cocycle(doubling_pair(0)));
  INFO(sb.report.summary());
  REQUIRE(sb.report.findings.empty());
  REQUIRE(sb.skel_z == cyclic(2));
  REQUIRE(abelian_invariants(sb.band) == std::vector<int>{2, 2});
}

TEST_CASE("an injected subgroup that is everything collapses the band to the base") {
  // tau the identity on Z/2: the middle group retracts onto its base
  auto tau = AbelianHom::identity(cyclic(2));
  auto g = cyclic_group(2);
  GeneralizedCocycle gc{tau, Cochain::zero(2, GAction::trivial(g, tau.target)),
                        Cochain::zero(3, GAction::trivial(g, tau.source))};
  auto seq = extension_from_cocycle(gc);
  REQUIRE(verify_2group(seq.total).findings.empty());
  REQUIRE(verify_central_extension(seq).findings.empty());
  auto sb = skeleton_and_band(seq);
  INFO(sb.report.summary());
  REQUIRE(sb.report.findings.empty());
  REQUIRE(sb.skel_z == trivial_group());
  REQUIRE(sb.band.order == 2);
  // the projection to the base is then an isomorphism
  std::set<int> image(sb.band_to_base.begin(), sb.band_to_base.end());
  REQUIRE(image.size() == 2);
}

TEST_CASE("a nonzero pairing twists the band away from the product") {
  // no 2-morphisms at all: A = 0, so objects carry the whole structure and
  // the band is the group of objects up to (here trivial) isomorphism
  auto tau = AbelianHom::zero(trivial_group(), cyclic(4));
  auto g = cyclic_group(2);
  GeneralizedCocycle gc{tau, Cochain::zero(2, GAction::trivial(g, tau.target)),
                        Cochain::zero(3, GAction::trivial(g, tau.source))};
  gc.f.set({1, 1}, {2});
  auto seq = extension_from_cocycle(gc);
  REQUIRE(verify_2group(seq.total).findings.empty());
  REQUIRE(verify_central_extension(seq).findings.empty());
  auto sb = skeleton_and_band(seq);
  INFO(sb.report.summary());
  REQUIRE(sb.report.findings.empty());

  // same multiplication table as the group twisted by the same 2-cocycle
  Cochain f = Cochain::zero(2, GAction::trivial(g, cyclic(4)));
  f.set({1, 1}, {2});
  auto twisted = twisted_product(cyclic(4), g, f);
  REQUIRE(abelian_invariants(sb.band) == abelian_invariants(twisted));
  REQUIRE(abelian_invariants(sb.band) == std::vector<int>{2, 4});
}

TEST_CASE("shifting the pair moves the extension by a verified equivalence") {
  auto target = doubling_pair(1);
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 4; ++trial) {
    Cochain phi = Cochain::zero(1, target.f.action);
    phi.set({1}, {static_cast<long long>(rng() % 4)});
    Cochain psi = Cochain::zero(2, target.theta.action);
    psi.set({1, 1}, {static_cast<long long>(rng() % 2)});
    auto em = morphism_from_pair(shifted_cocycle_morphism(target, phi, psi));
    auto rep = verify_extension_morphism(em);
    INFO(rep.summary());
    REQUIRE(rep.passed());
    for (const auto& f : rep.findings)
      REQUIRE(f.check == "2group-morphism.inverse-pairing");
  }
}

TEST_CASE("the inverse-pairing note appears exactly when psi pairs a dual pair") {
  auto target = doubling_pair(1);
  Cochain phi = Cochain::zero(1, target.f.action);
  phi.set({1}, {1});

  Cochain psi_plain = Cochain::zero(2, target.theta.action);
  auto em = morphism_from_pair(shifted_cocycle_morphism(target, phi, psi_plain));
  auto rep = verify_extension_morphism(em);
  INFO(rep.summary());
  REQUIRE(rep.findings.empty());

  Cochain psi_paired = Cochain::zero(2, target.theta.action);
  psi_paired.set({1, 1}, {1});  // 1 is its own inverse in the base
  auto em2 = morphism_from_pair(shifted_cocycle_morphism(target, phi, psi_paired));
  auto rep2 = verify_extension_morphism(em2);
  REQUIRE(rep2.passed());
  REQUIRE(rep2.has("2group-morphism.inverse-pairing"));
}

TEST_CASE("gamma gives a modification between parallel extension morphisms") {
  // kernel of tau must be nonzero for genuinely distinct parallel data,
  // so take tau = 0 from Z/2 to Z/2 over the base Z/2
  auto tau = AbelianHom::zero(cyclic(2), cyclic(2));
  auto g = cyclic_group(2);
  GeneralizedCocycle gc{tau, Cochain::zero(2, GAction::trivial(g, tau.target)),
                        Cochain::zero(3, GAction::trivial(g, tau.source))};
  Cochain phi = Cochain::zero(1, gc.f.action);
  Cochain psi_a = Cochain::zero(2, gc.theta.action);
  auto ma = morphism_from_pair(shifted_cocycle_morphism(gc, phi, psi_a));
  REQUIRE(verify_extension_morphism(ma).findings.empty());

  SECTION("matching components pass") {
    auto mb = morphism_from_pair(shifted_cocycle_morphism(gc, phi, psi_a));
    Cochain gamma = Cochain::zero(1, gc.theta.action);
    gamma.set({1}, {1});
    // tau = 0 and d(gamma) = 0 here, so the two morphisms coincide and
    // gamma must still satisfy naturality and the monoidal square
    auto tr = two_morphism_from_gamma(ma, gamma);
    auto rep = verify_2group_transformation(ma.source.total, ma.target.total,
                                            ma.functor, mb.functor, tr);
    INFO(rep.summary());
    REQUIRE(rep.findings.empty());
  }

  SECTION("a pairing mismatch is caught by the monoidal square") {
    Cochain psi_b = Cochain::zero(2, gc.theta.action);
    psi_b.set({1, 1}, {1});  // not psi_a - d(gamma) for any gamma
    auto mb = morphism_from_pair(shifted_cocycle_morphism(gc, phi, psi_b));
    REQUIRE(verify_extension_morphism(mb).passed());
    Cochain gamma = Cochain::zero(1, gc.theta.action);
    auto tr = two_morphism_from_gamma(ma, gamma);
    auto rep = verify_2group_transformation(ma.source.total, ma.target.total,
                                            ma.functor, mb.functor, tr);
    REQUIRE_FALSE(rep.passed());
    for (const auto& f : rep.findings)
      if (f.severity == Severity::fail) REQUIRE(f.check == "2group-transform.monoidal");
  }
}

TEST_CASE("single-entry corruption never slips through verification") {
  auto seq = extension_from_cocycle(doubling_pair(2));
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    auto broken = seq;
    auto& t = broken.total;
    switch (rng() % 5) {
      case 0: t.src[rng() % t.n_mor] ^= 1; break;
      case 1: t.tgt[rng() % t.n_mor] ^= 1; break;
      case 2: t.idm[rng() % t.n_obj] ^= 1; break;
      case 3: t.tens_obj[rng() % (t.n_obj * t.n_obj)] ^= 1; break;
      default: t.inv_obj[rng() % t.n_obj] ^= 1; break;
    }
    bool caught = !verify_2group(t).passed() || !verify_central_extension(broken).passed();
    REQUIRE(caught);
  }
}
