#include <gtest/gtest.h>

#include "alia/errors.hpp"
#include "alia/fixtures.hpp"
#include "alia/pre_alia.hpp"
#include "support/generators.hpp"

namespace alia {
namespace {

using fixtures::sample_subadjacent;
using fixtures::truncated_polynomial;

struct Entry {
  std::size_t i, j, k;
  int v;
};

// Double of (d, dualize_delta(delta_r)) for the canonical solution on the
// Sample double, evaluated by an independent oracle from the pairing
// definitions of the coadjoint actions. Basis e1..e4, e1*..e4*.
const std::vector<Entry> kDoubleGolden = {
    {0, 1, 0, 1},
    {0, 2, 3, -2},
    {0, 4, 3, 1},
    {0, 4, 5, -1},
    {0, 7, 0, -1},
    {0, 7, 6, 2},
    {1, 0, 0, -1},
    {1, 2, 2, -1},
    {1, 2, 3, -1},
    {1, 3, 3, -2},
    {1, 4, 2, 2},
    {1, 4, 3, 1},
    {1, 4, 4, 1},
    {1, 5, 3, 2},
    {1, 6, 0, -2},
    {1, 6, 6, 1},
    {1, 7, 0, -1},
    {1, 7, 1, -2},
    {1, 7, 6, 1},
    {1, 7, 7, 2},
    {2, 0, 3, -4},
    {2, 1, 2, -2},
    {2, 1, 3, -2},
    {2, 6, 3, -2},
    {2, 6, 5, 2},
    {2, 7, 2, 2},
    {2, 7, 4, 4},
    {2, 7, 5, 2},
    {3, 1, 3, -4},
    {3, 7, 5, 4},
    {4, 0, 3, 2},
    {4, 0, 5, -2},
    {4, 1, 2, 4},
    {4, 1, 3, 2},
    {4, 1, 4, 2},
    {4, 6, 5, -4},
    {4, 7, 4, -2},
    {4, 7, 5, -2},
    {5, 1, 3, 4},
    {5, 7, 5, -4},
    {6, 1, 0, 2},
    {6, 1, 6, -1},
    {6, 2, 3, -1},
    {6, 2, 5, 1},
    {6, 4, 5, -2},
    {6, 7, 6, 1},
    {7, 0, 0, 1},
    {7, 0, 6, -2},
    {7, 1, 0, 1},
    {7, 1, 1, 2},
    {7, 1, 6, -1},
    {7, 1, 7, -2},
    {7, 2, 2, 1},
    {7, 2, 4, 2},
    {7, 2, 5, 1},
    {7, 3, 5, 2},
    {7, 4, 4, -1},
    {7, 4, 5, -1},
    {7, 5, 5, -2},
    {7, 6, 6, -1},
};

TriangularBialgebra sample_triangular(AlgebraTable* d_out) {
  LiftedSolution sol = canonical_solution(fixtures::sample_pre());
  *d_out = sol.d;
  return triangular_bialgebra(sol.d, sol.r);
}

TEST(Invariance, ZeroBracketPasses) {
  Report r = check_invariance(AlgebraTable(2), BilinearForm(Matrix::identity(2)));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.info.at("nondegenerate"), "true");
  EXPECT_EQ(r.info.at("symmetric"), "true");
}

TEST(Invariance, IdentityFormFailsOnSubadjacent) {
  AlgebraTable a = sample_subadjacent();
  BilinearForm b(Matrix::identity(2));
  Vector e1 = basis_vector(2, 0), e2 = basis_vector(2, 1);
  EXPECT_EQ(b(a.bracket(e1, e2), e1), Scalar(1));
  EXPECT_EQ(b(e1, a.bracket(e1, e2) - a.bracket(e2, e1)), Scalar(2));
  Report r = check_invariance(a, b);
  ASSERT_FALSE(r.pass);
  // First failing triple in lexicographic order: (e1, e1, e2), 0 vs -2.
  EXPECT_EQ(r.witness->index, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Quadratic, IdentityGivesZeroBracket) {
  AlgebraTable m = truncated_polynomial(2);
  BilinearForm b(Matrix{{0, 1}, {1, 0}});
  auto [a, fhat] = quadratic_from_commutative(m, Matrix::identity(2), b);
  EXPECT_EQ(fhat, Matrix::identity(2));
  EXPECT_TRUE(a.is_zero());
}

TEST(Quadratic, MultiplicationByX) {
  AlgebraTable m = truncated_polynomial(2);
  BilinearForm b(Matrix{{0, 1}, {1, 0}});
  Matrix f(2, 2);
  f(1, 0) = 1;
  auto [a, fhat] = quadratic_from_commutative(m, f, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      EXPECT_EQ(b(fhat.column(i), basis_vector(2, j)), b(basis_vector(2, i), f.column(j)));
  EXPECT_TRUE(check_invariance(a, b).pass);
  EXPECT_TRUE(check_quadratic(a, b).pass);
  EXPECT_TRUE(check_left_alia(a).pass);
}

TEST(Quadratic, ZeroMapAndRandomMaps) {
  AlgebraTable m = truncated_polynomial(3);
  BilinearForm b(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  EXPECT_TRUE(quadratic_from_commutative(m, Matrix(3, 3), b).first.is_zero());
  auto rng = testing::make_rng(30);
  for (int t = 0; t < 50; ++t) {
    auto [a, fhat] = quadratic_from_commutative(m, testing::random_matrix(rng, 3, 3), b);
    EXPECT_TRUE(check_quadratic(a, b).pass);
  }
}

TEST(Quadratic, RejectsBadForms) {
  AlgebraTable m = truncated_polynomial(2);
  EXPECT_THROW(quadratic_from_commutative(m, Matrix::identity(2), BilinearForm(Matrix{{1, 0}, {0, 0}})),
               PreconditionError);
  // Symmetric and nondegenerate but B(1 x, x) = 1 differs from B(1, x x) = 0.
  EXPECT_THROW(quadratic_from_commutative(m, Matrix::identity(2), BilinearForm(Matrix::identity(2))),
               PreconditionError);
}

TEST(Coalgebra, ZeroPasses) { EXPECT_TRUE(check_coalgebra(Comultiplication(3)).pass); }

TEST(Coalgebra, DualOfCyclicTableFails) {
  AlgebraTable c = fixtures::cyclic3();
  Comultiplication delta(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) delta[k](i, j) = c(i, j, k);
  EXPECT_EQ(dualize_delta(delta), c);
  EXPECT_FALSE(check_coalgebra(delta).pass);
}

TEST(Coalgebra, EquivalentToDualBracketBeingLeftAlia) {
  auto rng = testing::make_rng(31);
  int passes = 0;
  for (int t = 0; t < 60; ++t) {
    AlgebraTable a = t % 2 ? testing::random_left_alia(rng) : testing::random_table(rng, 2 + t % 3);
    Comultiplication delta(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) delta[k](i, j) = a(i, j, k);
    bool ok = check_coalgebra(delta).pass;
    EXPECT_EQ(ok, check_left_alia(dualize_delta(delta)).pass);
    passes += ok;
  }
  EXPECT_GE(passes, 30);
}

TEST(DualizeDelta, SingleTerm) {
  Comultiplication delta(2);
  delta[0](0, 0) = 1;
  AlgebraTable want(2);
  want(0, 0, 0) = 1;
  EXPECT_EQ(dualize_delta(delta), want);
  EXPECT_TRUE(dualize_delta(Comultiplication(2)).is_zero());
}

TEST(Compat, ZeroAndSample) {
  EXPECT_TRUE(check_bialgebra_compat(sample_subadjacent(), Comultiplication(2)).pass);
  AlgebraTable d;
  TriangularBialgebra tri = sample_triangular(&d);
  EXPECT_TRUE(check_coalgebra(tri.delta).pass);
  EXPECT_TRUE(check_bialgebra_compat(d, tri.delta).pass);
  EXPECT_TRUE(check_bialgebra(d, tri.delta).pass);
}

TEST(Compat, AdHocDeltaFails) {
  Comultiplication delta(2);
  delta[0](0, 1) = 1;
  Report r = check_bialgebra_compat(sample_subadjacent(), delta);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(check_bialgebra(sample_subadjacent(), delta).pass);
}

TEST(DoubleBracket, ZeroDualReducesToCoadjointSemidirect) {
  auto rng = testing::make_rng(32);
  for (int t = 0; t < 20; ++t) {
    AlgebraTable a = testing::random_left_alia(rng);
    EXPECT_EQ(double_bracket(a, AlgebraTable(a.dim())),
              semidirect_product(coadjoint_representation(a)));
  }
  EXPECT_TRUE(double_bracket(AlgebraTable(2), AlgebraTable(2)).is_zero());
  EXPECT_THROW(double_bracket(AlgebraTable(2), AlgebraTable(3)), DimensionError);
}

TEST(DoubleBracket, SampleBialgebraDoubleMatchesOracle) {
  AlgebraTable d;
  TriangularBialgebra tri = sample_triangular(&d);
  AlgebraTable dd = double_bracket(d, tri.dual);
  AlgebraTable want(8);
  for (const auto& e : kDoubleGolden) want(e.i, e.j, e.k) = e.v;
  EXPECT_EQ(dd, want);
  EXPECT_TRUE(check_manin_triple(d, tri.dual, dd).pass);
  EXPECT_TRUE(check_invariance(dd, canonical_form(4)).pass);
}

TEST(CanonicalForm, Shape) {
  EXPECT_EQ(canonical_form(1).matrix(), (Matrix{{0, 1}, {1, 0}}));
  for (std::size_t n = 1; n <= 6; ++n) {
    BilinearForm b = canonical_form(n);
    EXPECT_TRUE(b.is_symmetric());
    EXPECT_TRUE(b.is_nondegenerate());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(b(basis_vector(2 * n, i), basis_vector(2 * n, n + j)), Scalar(i == j ? 1 : 0));
  }
}

TEST(Manin, ZeroTriple) {
  EXPECT_TRUE(check_manin_triple(AlgebraTable(2), AlgebraTable(2), AlgebraTable(4)).pass);
  EXPECT_THROW(check_manin_triple(AlgebraTable(2), AlgebraTable(2), AlgebraTable(3)), DimensionError);
}

TEST(Manin, CorruptedDualEntryFails) {
  AlgebraTable d;
  TriangularBialgebra tri = sample_triangular(&d);
  AlgebraTable dd = double_bracket(d, tri.dual);
  dd(6, 7, 6) += 1;  // [e3*, e4*] gains an e3* component
  Report r = check_manin_triple(d, tri.dual, dd);
  ASSERT_FALSE(r.pass);
  ASSERT_FALSE(r.parts.empty());
  EXPECT_EQ(r.parts[0].check, "subalgebras");
  ASSERT_TRUE(r.parts[0].witness);
  EXPECT_EQ(r.parts[0].witness->index, (std::vector<std::size_t>{6, 7, 6}));
}

TEST(Manin, RandomTriangularBialgebrasGiveManinTriples) {
  auto rng = testing::make_rng(33);
  for (int t = 0; t < 50; ++t) {
    LiftedSolution sol = canonical_solution(testing::random_pre_left_alia(rng));
    TriangularBialgebra tri = triangular_bialgebra(sol.d, sol.r);
    AlgebraTable dd = double_bracket(sol.d, tri.dual);
    EXPECT_TRUE(check_manin_triple(sol.d, tri.dual, dd).pass);
    EXPECT_TRUE(check_invariance(dd, canonical_form(sol.d.dim())).pass);
  }
}

}  // namespace
}  // namespace alia
