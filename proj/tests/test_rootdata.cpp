#include <gtest/gtest.h>

#include "ruelle/liealg.hpp"
#include "ruelle/rootdata.hpp"

using namespace ruelle;

TEST(RankOneGroup, Validation) {
  EXPECT_THROW(RankOneGroup::so(0), DomainError);
  EXPECT_EQ(RankOneGroup::so(2).name(), "SO(3,1)");
  EXPECT_EQ(RankOneGroup::su(1).name(), "SU(2,1)");
  EXPECT_EQ(parse_family("SO"), Family::RealHyperbolic);
  EXPECT_EQ(parse_family("su"), Family::ComplexHyperbolic);
  EXPECT_THROW(parse_family("sp"), UnsupportedFamily);
  EXPECT_THROW(parse_family("f4"), UnsupportedFamily);
  EXPECT_THROW(parse_family("xx"), UnsupportedFamily);
}

TEST(RestrictedRootData, RealHyperbolicN2) {
  auto rd = restricted_root_data(RankOneGroup::so(2));
  EXPECT_EQ(rd.m_alpha, 2);
  EXPECT_EQ(rd.m_2alpha, 0);
  EXPECT_EQ(rd.norm_alpha0_sq, Rational(1, 4));
  EXPECT_EQ(rd.rho_coeff, Rational(1));
  EXPECT_EQ(rd.norm_rho, QuadExt(Rational(1, 2)));
}

TEST(RestrictedRootData, RealHyperbolicN1) {
  EXPECT_EQ(restricted_root_data(RankOneGroup::so(1)).norm_rho, QuadExt::surd(Rational(1, 4), 2));
}

TEST(RestrictedRootData, ComplexHyperbolicN1) {
  auto rd = restricted_root_data(RankOneGroup::su(1));
  EXPECT_EQ(rd.m_alpha, 2);
  EXPECT_EQ(rd.m_2alpha, 1);
  EXPECT_EQ(rd.norm_alpha0_sq, Rational(1, 12));
  EXPECT_EQ(rd.norm_rho, QuadExt::surd(Rational(1, 3), 3));
}

TEST(RestrictedRootData, NormRhoSquaredClosedForm) {
  for (int n = 1; n <= 64; ++n) {
    auto rd = restricted_root_data(RankOneGroup::so(n));
    EXPECT_EQ(rd.norm_rho_sq(), Rational(n, 8)) << n;
    EXPECT_EQ(quad_mul(rd.norm_rho, rd.norm_rho), QuadExt(Rational(n, 8))) << n;
    EXPECT_EQ(rd.m_alpha, n);
  }
}

TEST(RestrictedRootData, RhoIsRationalMultipleOfAlpha0) {
  for (auto f : {Family::RealHyperbolic, Family::ComplexHyperbolic})
    for (int n = 1; n <= 16; ++n) {
      auto rd = restricted_root_data(RankOneGroup(f, n));
      EXPECT_EQ(rd.norm_rho, QuadExt(rd.rho_coeff) * rd.norm_alpha0);
      EXPECT_EQ(rd.norm_alpha0_sq, Rational(1, 2 * rd.m_alpha + 8 * rd.m_2alpha));
      EXPECT_EQ(rd.rho_coeff, Rational(rd.m_alpha + 2 * rd.m_2alpha, 2));
    }
}

// The multiplicity table must agree with the exact ad(E)-eigenspaces of the
// matrix realizations before it can be trusted.
TEST(RestrictedRootData, TableMatchesMatrixOracle) {
  for (auto f : {Family::RealHyperbolic, Family::ComplexHyperbolic})
    for (int n = 1; n <= 4; ++n) {
      RankOneGroup g(f, n);
      auto alg = liealg::build_algebra(g);
      auto dims = liealg::restricted_grading(*alg);
      auto rd = restricted_root_data(g);
      EXPECT_EQ(dims.alpha, rd.m_alpha) << g.name();
      EXPECT_EQ(dims.two_alpha, rd.m_2alpha) << g.name();
      EXPECT_EQ(2 * rd.m_alpha + 2 * rd.m_2alpha + dims.m + 1, alg->dim()) << g.name();
      EXPECT_EQ(liealg::oracle_norm_alpha0_sq(*alg), rd.norm_alpha0_sq) << g.name();
      if (f == Family::RealHyperbolic) {
        EXPECT_EQ(alg->dim(), (n + 2) * (n + 1) / 2);
      }
    }
}

TEST(BandLines, RealHyperbolicN2) {
  auto b = band_lines(RankOneGroup::so(2), 3);
  ASSERT_EQ(b.lines.size(), 4u);
  EXPECT_EQ(b.lines[0], QuadExt(Rational(-1, 2)));
  EXPECT_EQ(b.lines[1], QuadExt(-1));
  EXPECT_EQ(b.lines[2], QuadExt(Rational(-3, 2)));
  EXPECT_EQ(b.lines[3], QuadExt(-2));
  EXPECT_FALSE(b.note.empty());
}

TEST(BandLines, RealHyperbolicN1) {
  auto b = band_lines(RankOneGroup::so(1), 0);
  ASSERT_EQ(b.lines.size(), 1u);
  EXPECT_EQ(b.lines[0], QuadExt::surd(Rational(-1, 4), 2));
}

TEST(BandLines, ComplexHyperbolicN1) {
  auto b = band_lines(RankOneGroup::su(1), 1);
  ASSERT_EQ(b.lines.size(), 2u);
  EXPECT_EQ(b.lines[0], QuadExt::surd(Rational(-1, 3), 3));
  EXPECT_EQ(b.lines[1], QuadExt::surd(Rational(-1, 2), 3));
}

TEST(BandLines, StrictlyDecreasingWithConstantSpacing) {
  for (auto f : {Family::RealHyperbolic, Family::ComplexHyperbolic})
    for (int n = 1; n <= 10; ++n) {
      auto b = band_lines(RankOneGroup(f, n), 6);
      EXPECT_EQ(b.lines[0], -b.norm_rho);
      for (std::size_t k = 1; k < b.lines.size(); ++k) {
        EXPECT_EQ(quad_compare_real(b.lines[k], b.lines[k - 1]), std::strong_ordering::less);
        EXPECT_EQ(b.lines[k - 1] - b.lines[k], b.norm_alpha0);
      }
    }
  EXPECT_THROW(band_lines(RankOneGroup::so(2), -1), DomainError);
}

TEST(Normalization, Examples) {
  auto g = RankOneGroup::so(2);
  auto [l, m] = normalization_convert(g, ComplexQuad(QuadExt(Rational(-1, 2))), ComplexQuad(QuadExt(Rational(1, 4))));
  EXPECT_EQ(l, ComplexQuad(-1));
  EXPECT_EQ(m, ComplexQuad(1));
  EXPECT_EQ(normalization_convert(RankOneGroup::so(5), ComplexQuad(), ComplexQuad()).first, ComplexQuad());
  EXPECT_THROW(normalization_convert(RankOneGroup::su(1), ComplexQuad(), ComplexQuad()), UnsupportedFamily);
}

// Substituting lambda = lambda'/s into -lambda(lambda + 2|rho|) and scaling
// by 2n must give -lambda'(lambda' + n) for the map to be the right one.
TEST(Normalization, SubstitutionOracle) {
  for (int n = 1; n <= 8; ++n) {
    auto g = RankOneGroup::so(n);
    auto rd = restricted_root_data(g);
    for (int p = -6; p <= 6; ++p) {
      ComplexQuad lam(QuadExt(Rational(p, 3)), QuadExt(Rational(1, 2)));
      ComplexQuad mu = -(lam * (lam + ComplexQuad(QuadExt(2) * rd.norm_rho)));
      auto [ld, md] = normalization_convert(g, lam, mu);
      EXPECT_EQ(md, -(ld * (ld + ComplexQuad(n))));
      auto [lb, mb] = normalization_revert(g, ld, md);
      EXPECT_EQ(lb, lam);
      EXPECT_EQ(mb, mu);
    }
    EXPECT_EQ(normalization_convert(g, ComplexQuad(-rd.norm_rho), ComplexQuad()).first,
              ComplexQuad(QuadExt(Rational(-n, 2))));
  }
}
