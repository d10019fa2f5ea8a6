#include <gtest/gtest.h>

#include "ruelle/liealg.hpp"
#include "ruelle/reps.hpp"

using namespace ruelle;
using namespace ruelle::liealg;

namespace {

Rational trace_product(const linalg::SparseMatrix& x, const linalg::SparseMatrix& y) {
  Rational t;
  for (const auto& [rc, v] : x.entries()) t += v * y.at(rc.second, rc.first);
  return t;
}

std::vector<RankOneGroup> small_groups(int top) {
  std::vector<RankOneGroup> out;
  for (auto f : {Family::RealHyperbolic, Family::ComplexHyperbolic})
    for (int n = 1; n <= top; ++n) out.emplace_back(f, n);
  return out;
}

}  // namespace

TEST(MatrixAlgebra, DimensionsOfSO31) {
  auto alg = build_algebra(RankOneGroup::so(2));
  EXPECT_EQ(alg->dim(), 6);
  auto dims = restricted_grading(*alg);
  EXPECT_EQ(dims.m, 1);
  EXPECT_EQ(dims.a, 1);
  EXPECT_EQ(dims.alpha, 2);
  EXPECT_EQ(dims.minus_alpha, 2);
  EXPECT_EQ(dims.two_alpha, 0);
  EXPECT_EQ(alg->k_basis.size(), 3u);
  EXPECT_EQ(alg->p_basis.size(), 3u);
}

TEST(MatrixAlgebra, DimensionsOfSU21) {
  auto alg = build_algebra(RankOneGroup::su(1));
  EXPECT_EQ(alg->dim(), 8);
  auto dims = restricted_grading(*alg);
  EXPECT_EQ(dims.m, 1);
  EXPECT_EQ(dims.alpha, 2);
  EXPECT_EQ(dims.two_alpha, 1);
}

// Killing form is a multiple of the trace form: n tr on so(n+1,1) and
// (n+2) tr_R on the realified su(n+1,1).
TEST(MatrixAlgebra, KillingIsTraceMultiple) {
  for (const auto& g : small_groups(3)) {
    auto alg = build_algebra(g);
    Rational c = g.family == Family::RealHyperbolic ? Rational(g.n) : Rational(g.n + 2);
    for (int i = 0; i < alg->dim(); ++i)
      for (int j = 0; j < alg->dim(); ++j)
        EXPECT_EQ(alg->killing(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                  c * trace_product(alg->basis[static_cast<std::size_t>(i)], alg->basis[static_cast<std::size_t>(j)]))
            << g.name() << " " << i << " " << j;
  }
  EXPECT_EQ(build_algebra(RankOneGroup::so(2))->boost_normsq, Rational(4));
  EXPECT_EQ(build_algebra(RankOneGroup::su(1))->boost_normsq, Rational(12));
}

TEST(MatrixAlgebra, InnerProductPositiveDefinite) {
  for (const auto& g : small_groups(3)) EXPECT_TRUE(linalg::is_positive_definite(build_algebra(g)->inner)) << g.name();
}

TEST(MatrixAlgebra, StructureChecks) {
  for (const auto& g : small_groups(4)) {
    auto alg = build_algebra(g);
    auto a = verify_antisymmetry(*alg);
    EXPECT_TRUE(a.ok) << g.name() << a.witness;
    auto j = verify_jacobi(*alg);
    EXPECT_TRUE(j.ok) << g.name() << j.witness;
    auto c = verify_cartan_decomposition(*alg);
    EXPECT_TRUE(c.ok) << g.name() << c.witness;
    auto h = verify_horocycle_brackets(*alg);
    EXPECT_TRUE(h.ok) << g.name() << h.witness;
  }
}

TEST(MatrixAlgebra, BracketsMatchMatrixCommutators) {
  for (const auto& g : small_groups(2)) {
    auto alg = build_algebra(g);
    for (int i = 0; i < alg->dim(); ++i)
      for (int j = 0; j < alg->dim(); ++j) {
        auto comm = linalg::commutator(alg->basis[static_cast<std::size_t>(i)], alg->basis[static_cast<std::size_t>(j)]);
        EXPECT_EQ(alg->matrix_of(alg->bracket(alg->unit(i), alg->unit(j))), comm);
      }
  }
}

TEST(MatrixAlgebra, PerturbationIsDetected) {
  auto alg = build_algebra(RankOneGroup::so(1));
  auto bad = perturb_structure(*alg, 0, 1, 0, Rational(1, 7));
  EXPECT_TRUE(verify_antisymmetry(bad).ok);
  auto j = verify_jacobi(bad);
  EXPECT_FALSE(j.ok);
  EXPECT_FALSE(j.witness.empty());
}

TEST(MatrixAlgebra, SizeLimit) {
  EXPECT_THROW(build_algebra(RankOneGroup::so(kMaxN + 1)), SizeLimit);
  EXPECT_NO_THROW(build_algebra(RankOneGroup::so(5)));
}

TEST(MatrixAlgebra, CacheReturnsSameInstance) {
  EXPECT_EQ(build_algebra(RankOneGroup::so(3)).get(), build_algebra(RankOneGroup::so(3)).get());
}

TEST(CasimirGate, DefiningAndSym2AgreeWithWeights) {
  for (int n = 2; n <= 5; ++n) {
    auto g = RankOneGroup::so(n);
    auto alg = build_algebra(g);
    auto K = maximal_compact(g);
    auto M = centralizer_m(g);
    EXPECT_EQ(casimir_scalar(*alg, RepKind::Defining, Subgroup::K), casimir_invariant(spherical_harmonic(K, 1))) << n;
    EXPECT_EQ(casimir_scalar(*alg, RepKind::Defining, Subgroup::M), casimir_invariant(spherical_harmonic(M, 1))) << n;
    EXPECT_EQ(casimir_scalar(*alg, RepKind::Sym2Traceless, Subgroup::K), casimir_invariant(spherical_harmonic(K, 2)))
        << n;
  }
  auto alg1 = build_algebra(RankOneGroup::so(1));
  EXPECT_EQ(casimir_scalar(*alg1, RepKind::Defining, Subgroup::K), Rational(-1, 2));
}

TEST(CasimirGate, FrozenValues) {
  EXPECT_EQ(casimir_scalar(*build_algebra(RankOneGroup::so(3)), RepKind::Defining, Subgroup::M), Rational(-1, 3));
  EXPECT_EQ(casimir_scalar(*build_algebra(RankOneGroup::so(4)), RepKind::Defining, Subgroup::M), Rational(-3, 8));
  EXPECT_EQ(casimir_scalar(*build_algebra(RankOneGroup::so(1)), RepKind::Sym2Traceless, Subgroup::K), Rational(-2));
  EXPECT_EQ(casimir_scalar(*build_algebra(RankOneGroup::so(4)), RepKind::Sym2Traceless, Subgroup::K), Rational(-5, 4));
}

TEST(WeylOracle, TorusSigns) {
  EXPECT_EQ(weyl_torus_signs(*build_algebra(RankOneGroup::so(4))), (std::vector<int>{1, -1}));
  EXPECT_EQ(weyl_torus_signs(*build_algebra(RankOneGroup::so(3))), (std::vector<int>{1}));
  EXPECT_EQ(weyl_torus_signs(*build_algebra(RankOneGroup::so(2))), (std::vector<int>{-1}));
}

// In dimension 3 the Jacobi sum only sees c_ij^k through [e_k, e_k] when k is
// the third index, so that shift is invisible.
TEST(MatrixAlgebra, PerturbationBlindSpotInDimensionThree) {
  auto alg = build_algebra(RankOneGroup::so(1));
  EXPECT_TRUE(verify_jacobi(perturb_structure(*alg, 0, 1, 2, Rational(1, 7))).ok);
}
