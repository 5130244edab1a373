#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "catext/integer_matrix.hpp"

using namespace catext;

namespace {

// Independent rank oracle: Bareiss fraction-free elimination. Shares no code
// with the Smith reduction under test.
int rank_by_bareiss(ZMat m) {
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j)
        m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

ZMat random_matrix(std::mt19937& rng, int max_dim = 6) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-9, 9);
  ZMat m(dim(rng), dim(rng));
  for (auto& x : m.a) x = entry(rng);
  return m;
}

void check_decomposition(const ZMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  INFO("input " << m.rows << "x" << m.cols);

  REQUIRE(is_identity(mul(s.u, s.u_inv)));
  REQUIRE(is_identity(mul(s.v, s.v_inv)));
  REQUIRE(mul(mul(s.u, m), s.v) == s.d);

  auto diag = s.diag();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    REQUIRE(diag[i] >= 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) {
        REQUIRE(diag[i + 1] == 0);
      } else {
        REQUIRE(diag[i + 1] % diag[i] == 0);
      }
    }
  }
  for (int i = 0; i < s.d.rows; ++i)
    for (int j = 0; j < s.d.cols; ++j)
      if (i != j) REQUIRE(s.d(i, j) == 0);

  REQUIRE(s.rank == rank_by_bareiss(m));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SECTION("2x2 with nontrivial invariant factors") {
    auto s = smith_normal_form(ZMat::from_rows({{2, 4}, {6, 8}}));
    REQUIRE(s.diag() == std::vector<Int>{2, 4});
    REQUIRE(s.rank == 2);
  }
  SECTION("identity is already reduced") {
    auto s = smith_normal_form(ZMat::identity(3));
    REQUIRE(s.diag() == std::vector<Int>{1, 1, 1});
    REQUIRE(is_identity(s.d));
  }
  SECTION("zero matrix stays zero") {
    auto s = smith_normal_form(ZMat(2, 3));
    REQUIRE(s.diag() == std::vector<Int>{0, 0});
    REQUIRE(s.rank == 0);
    for (const auto& x : s.d.a) REQUIRE(x == 0);
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) check_decomposition(random_matrix(rng));
}

TEST_CASE("smith normal form handles degenerate shapes") {
  check_decomposition(ZMat(1, 1));
  check_decomposition(ZMat::from_rows({{0, 0, 0}}));
  check_decomposition(ZMat::from_rows({{5}, {0}, {10}}));
  ZMat wide(2, 7);
  wide(0, 3) = 4;
  wide(1, 6) = -6;
  check_decomposition(wide);
}

TEST_CASE("integer solve finds witnesses exactly when solvable") {
  ZMat m = ZMat::from_rows({{2, 0}, {0, 3}});
  REQUIRE(solve_integer(m, {4, 9}).has_value());
  REQUIRE_FALSE(solve_integer(m, {1, 3}).has_value());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    ZMat a = random_matrix(rng, 5);
    std::vector<Int> x(a.cols);
    for (auto& v : x) v = entry(rng);
    std::vector<Int> b = matvec(a, x);
    auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    REQUIRE(matvec(a, *sol) == b);

    // perturbing b off the image lattice must be detected or re-solved exactly
    b[0] += 1;
    auto sol2 = solve_integer(a, b);
    if (sol2) REQUIRE(matvec(a, *sol2) == b);
  }
}

TEST_CASE("kernel basis spans the kernel and nothing else") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    ZMat a = random_matrix(rng, 5);
    ZMat k = integer_kernel_basis(a);
    REQUIRE(k.cols == a.cols - rank_by_bareiss(a));
    for (int j = 0; j < k.cols; ++j) {
      auto img = matvec(a, k.col(j));
      for (const auto& v : img) REQUIRE(v == 0);
    }
    if (k.cols > 0) REQUIRE(rank_by_bareiss(k) == k.cols);
  }
}

TEST_CASE("column lattice basis reproduces membership") {
  ZMat a = ZMat::from_rows({{2, 4}, {0, 6}});
  ZMat basis = column_lattice_basis(a);
  REQUIRE(basis.cols == 2);
  // every original column solvable in the basis, and vice versa
  for (int j = 0; j < a.cols; ++j) REQUIRE(solve_integer(basis, a.col(j)).has_value());
  for (int j = 0; j < basis.cols; ++j) REQUIRE(solve_integer(a, basis.col(j)).has_value());
  // (1,1) is not in the lattice spanned by (2,0) and (4,6)
  REQUIRE_FALSE(solve_integer(basis, {1, 1}).has_value());
}
