#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "catext/finite_group.hpp"

using namespace catext;

namespace {

// Oracle: the order statistics of Z/n are phi(d) elements of order d per
// divisor d. Computed from scratch, no group table involved.
std::map<int, int> cyclic_order_stats(int n) {
  std::map<int, int> stats;
  for (int i = 0; i < n; ++i) stats[n / std::gcd(i, n)]++;
  return stats;
}

}  // namespace

TEST_CASE("cyclic groups verify and have the right element orders") {
  for (int n = 1; n <= 8; ++n) {
    auto g = cyclic_group(n);
    REQUIRE(g.order == n);
    REQUIRE(verify_finite_group(g).passed());
    REQUIRE(order_statistics(g) == cyclic_order_stats(n));
  }
  REQUIRE_THROWS_AS(cyclic_group(0), std::invalid_argument);
}

TEST_CASE("symmetric group on three letters") {
  auto s3 = symmetric_group_3();
  REQUIRE(s3.order == 6);
  REQUIRE(verify_finite_group(s3).passed());
  REQUIRE_FALSE(is_abelian(s3));
  // three transpositions, two 3-cycles, one identity
  std::map<int, int> expected{{1, 1}, {2, 3}, {3, 2}};
  REQUIRE(order_statistics(s3) == expected);
}

TEST_CASE("verify_finite_group pinpoints corrupted cells") {
  auto g = cyclic_group(4);
  SECTION("broken associativity") {
    g.table[1 * 4 + 1] = 3;  // 1*1 := 3
    auto rep = verify_finite_group(g);
    REQUIRE_FALSE(rep.passed());
    REQUIRE(rep.has("group."));
  }
  SECTION("broken unit row") {
    g.table[0 * 4 + 2] = 3;
    auto rep = verify_finite_group(g);
    REQUIRE(rep.has("group.unit"));
  }
  SECTION("out of range entry") {
    g.table[5] = 17;
    REQUIRE(verify_finite_group(g).has("group.table-range"));
  }
  SECTION("wrong inverse array") {
    g.inverse[1] = 1;
    REQUIRE(verify_finite_group(g).has("group.inverse"));
  }
}

TEST_CASE("direct products verify and multiply componentwise") {
  auto g = direct_product(cyclic_group(2), cyclic_group(4));
  REQUIRE(g.order == 8);
  REQUIRE(verify_finite_group(g).passed());
  REQUIRE(is_abelian(g));
  // (1,0)*(0,1) = (1,1): indices 4,1 -> 5
  REQUIRE(g.mul(4, 1) == 5);
}

TEST_CASE("abelian invariants recover known decompositions") {
  REQUIRE(abelian_invariants(cyclic_group(1)).empty());
  REQUIRE(abelian_invariants(cyclic_group(6)) == std::vector<int>{6});
  REQUIRE(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(2))) ==
          std::vector<int>{2, 2});
  REQUIRE(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(4))) ==
          std::vector<int>{2, 4});
  // Z/2 x Z/3 = Z/6 in disguise
  REQUIRE(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(3))) ==
          std::vector<int>{6});
  REQUIRE(abelian_invariants(direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                            cyclic_group(4))) == std::vector<int>{2, 2, 4});
  REQUIRE_THROWS_AS(abelian_invariants(symmetric_group_3()), std::invalid_argument);
}

TEST_CASE("abelian invariants are relabeling invariant") {
  std::mt19937 rng(4242);
  auto g = direct_product(cyclic_group(2), cyclic_group(6));
  auto base = abelian_invariants(g);
  REQUIRE(base == std::vector<int>{2, 6});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> perm(g.order);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    auto h = permuted_copy(g, perm);
    REQUIRE(verify_finite_group(h).passed());
    REQUIRE(abelian_invariants(h) == base);
  }
}

TEST_CASE("quotient groups collapse the expected cosets") {
  auto g = cyclic_group(12);
  auto q = quotient_group(g, subgroup_generated(g, {4}));  // <4> has order 3
  REQUIRE(q.group.order == 4);
  REQUIRE(verify_finite_group(q.group).passed());
  REQUIRE(abelian_invariants(q.group) == std::vector<int>{4});

  auto s3 = symmetric_group_3();
  auto a3 = subgroup_generated(s3, {3});  // a 3-cycle generates A3
  REQUIRE(a3.size() == 3);
  auto q2 = quotient_group(s3, a3);
  REQUIRE(q2.group.order == 2);
  REQUIRE(verify_finite_group(q2.group).passed());
}
