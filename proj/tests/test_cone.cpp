#include <catch2/catch_amalgamated.hpp>

#include "catext/cone.hpp"

using namespace catext;

namespace {

AbelianHom doubling_into_z4() { return {cyclic(2), cyclic(4), ZMat::from_rows({{2}})}; }

bool pair_valid(const AbelianHom& tau, const ConePair& p) {
  Cochain tau_theta = apply_hom(tau, p.theta, p.f.action);
  return cochain_equal(d_gp(p.f), tau_theta) && d_gp(p.theta).is_zero();
}

}  // namespace

TEST_CASE("pair classes for doubling Z/2 into Z/4") {
  auto g = cyclic_group(2);
  auto tau = doubling_into_z4();
  auto cc = cone_h2(g, tau);

  // every F is closed over the two-element group and only Theta = 0 maps into
  // the even part, so the valid pairs are (F, 0) for the four F tables
  REQUIRE(cc.valid_pairs == 4);
  REQUIRE(cc.representatives.size() == 2);
  REQUIRE(cc.class_sizes == std::vector<long long>{2, 2});

  for (const auto& rep : cc.representatives) {
    REQUIRE(pair_valid(tau, rep));
    REQUIRE(rep.theta.is_zero());
  }
  // least-index representatives: F(1,1) = 0 and F(1,1) = 1
  REQUIRE(cc.representatives[0].f.value_at({1, 1}) == El{Int(0)});
  REQUIRE(cc.representatives[1].f.value_at({1, 1}) == El{Int(1)});

  // the even and odd tables split into the two classes
  for (std::size_t p = 0; p < cc.members.size(); ++p) {
    Cochain f = cochain_from_code(2, cc.z_action, cc.members[p][0]);
    Int v = f.value_at({1, 1})[0];
    REQUIRE(cc.member_class[p] == (v % 2 == 0 ? 0 : 1));
  }
}

TEST_CASE("pair classes for the identity coefficient map") {
  auto g = cyclic_group(2);
  AbelianHom tau = AbelianHom::identity(cyclic(2));
  auto cc = cone_h2(g, tau);
  // dF = 0 forces Theta = 0 under an injective tau; psi shifts then fuse all F
  REQUIRE(cc.valid_pairs == 2);
  REQUIRE(cc.representatives.size() == 1);
  REQUIRE(cc.class_sizes == std::vector<long long>{2});
  REQUIRE(pair_valid(tau, cc.representatives[0]));
}

TEST_CASE("equivalence moves preserve validity and class") {
  auto g = cyclic_group(2);
  auto tau = doubling_into_z4();
  auto cc = cone_h2(g, tau);
  // apply an arbitrary (phi, psi) shift to each member and confirm the class
  // assignment is stable
  for (long long phi_v = 0; phi_v < 4; ++phi_v)
    for (long long psi_v = 0; psi_v < 2; ++psi_v) {
      Cochain phi = cochain_from_code(1, cc.z_action, phi_v);
      Cochain psi = cochain_from_code(2, cc.a_action, psi_v);
      for (std::size_t p = 0; p < cc.members.size(); ++p) {
        Cochain f = cochain_from_code(2, cc.z_action, cc.members[p][0]);
        Cochain th = cochain_from_code(3, cc.a_action, cc.members[p][1]);
        ConePair shifted{cochain_add(f, cochain_add(d_gp(phi), apply_hom(tau, psi, cc.z_action))),
                         cochain_add(th, d_gp(psi))};
        REQUIRE(pair_valid(tau, shifted));
        long long fi = cochain_code(shifted.f), ti = cochain_code(shifted.theta);
        for (std::size_t q = 0; q < cc.members.size(); ++q)
          if (cc.members[q][0] == fi && cc.members[q][1] == ti)
            REQUIRE(cc.member_class[q] == cc.member_class[p]);
      }
    }
}

TEST_CASE("middle exactness holds for both pinned coefficient maps") {
  auto g = cyclic_group(2);
  SECTION("doubling map") {
    auto les = les_exactness_check(g, doubling_into_z4());
    REQUIRE(les.report.passed());
    REQUIRE(les.classes.representatives.size() == 2);
    for (std::size_t i = 0; i < les.in_kernel.size(); ++i) {
      REQUIRE(les.in_kernel[i] == 1);
      REQUIRE(les.in_image[i] == 1);
    }
  }
  SECTION("identity map") {
    auto les = les_exactness_check(g, AbelianHom::identity(cyclic(2)));
    REQUIRE(les.report.passed());
    REQUIRE(les.classes.representatives.size() == 1);
  }
}

TEST_CASE("kernel membership agrees with brute-force bounding") {
  auto g = cyclic_group(2);
  for (const AbelianHom& tau : {doubling_into_z4(), AbelianHom::identity(cyclic(2))}) {
    auto les = les_exactness_check(g, tau);
    long long n_psi = tau.source.enum_size();  // one tuple in degree 2 over Z/2
    for (std::size_t i = 0; i < les.classes.representatives.size(); ++i) {
      const Cochain& theta = les.classes.representatives[i].theta;
      bool bounded = false;
      for (long long c = 0; c < n_psi; ++c) {
        Cochain psi = cochain_from_code(2, les.classes.a_action, c);
        bounded |= cochain_equal(d_gp(psi), theta);
      }
      REQUIRE(bounded == (les.in_kernel[i] == 1));
    }
  }
}

TEST_CASE("oversized pair spaces are refused") {
  // Z/5 coefficients over Z/4 blow the budget: 5^(9+27) pairs
  auto g = cyclic_group(4);
  REQUIRE_THROWS_AS(cone_h2(g, AbelianHom::identity(cyclic(5))), Refusal);
}
