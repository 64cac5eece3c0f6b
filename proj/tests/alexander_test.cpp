#include <gtest/gtest.h>

#include <numeric>

#include "kfk/alexander.hpp"
#include "kfk/braid.hpp"
#include "kfk/fibration.hpp"

using namespace kfk;

namespace {
const Word kFigure1 = Word::parse("yxyxxyxxYXYXXYXX");
}

TEST(Laurent, ArithmeticAndNormalization) {
  const LaurentPoly1 a{{0, -1}, {1, 1}};
  const LaurentPoly1 b{{-3, 2}, {-1, -5}};
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ((a * a).str(), "0:1 1:-2 2:1");
  EXPECT_EQ(b.normalized().str(), "0:-2 2:5");
  EXPECT_EQ(LaurentPoly1::parse("0:-1 7:1"), (LaurentPoly1{{0, -1}, {7, 1}}));
  EXPECT_EQ(LaurentPoly1::parse(b.str()), b);
  EXPECT_THROW(LaurentPoly1::parse("3"), Error);
  EXPECT_EQ((LaurentPoly1{{2, 1}, {1, -3}, {0, 1}}).pretty(), "T^2 - 3T + 1");
  EXPECT_EQ((LaurentPoly1{{0, -1}, {1, 1}}).pretty(), "T - 1");
}

TEST(Laurent, PolynomialGcd) {
  const LaurentPoly1 t_minus_1{{0, -1}, {1, 1}};
  const LaurentPoly1 t_plus_1{{0, 1}, {1, 1}};
  EXPECT_EQ(polynomial_gcd(t_minus_1 * t_plus_1, t_plus_1 * t_plus_1), t_plus_1);
  EXPECT_EQ(polynomial_gcd(LaurentPoly1{{0, 2}, {1, 2}}, LaurentPoly1{{0, 4}, {1, 4}}),
            (LaurentPoly1{{0, 2}, {1, 2}}));
  EXPECT_EQ(polynomial_gcd(LaurentPoly1{{1, 2}}, LaurentPoly1{{0, 3}}), (LaurentPoly1{{0, 1}}));
  EXPECT_EQ(polynomial_gcd(t_minus_1 * LaurentPoly1{{-1, 1}},
                           t_minus_1 * t_plus_1 * LaurentPoly1{{3, -1}}),
            t_minus_1);
  EXPECT_EQ(polynomial_gcd({}, LaurentPoly1{{2, -3}}), (LaurentPoly1{{0, 3}}));
  EXPECT_TRUE(polynomial_gcd({}, {}).is_zero());
}

TEST(Laurent, DivideByBinomial) {
  const LaurentPoly1 f{{2, -1}, {5, 1}};  // T^2 (T^3 - 1)
  EXPECT_EQ(divide_by_binomial(f, 3), (LaurentPoly1{{2, 1}}));
  EXPECT_EQ(divide_by_binomial(f, 1), (LaurentPoly1{{2, 1}, {3, 1}, {4, 1}}));
  EXPECT_THROW(divide_by_binomial(f, 2), Error);
  EXPECT_THROW(divide_by_binomial(f, 4), Error);
}

TEST(Alexander, FoxDerivatives) {
  const auto comm = fox_derivatives(Word::parse("xyXY"));
  EXPECT_EQ(comm.dX, LaurentPoly2::monomial(0, 0) - LaurentPoly2::monomial(0, 1));
  EXPECT_EQ(comm.dY, LaurentPoly2::monomial(1, 0) - LaurentPoly2::monomial(0, 0));
  const auto single = fox_derivatives(Word::parse("x"));
  EXPECT_EQ(single.dX, LaurentPoly2::monomial(0, 0));
  EXPECT_TRUE(single.dY.is_zero());
  EXPECT_EQ(comm.dX.str(), "0,0:1 0,1:-1");
}

TEST(Alexander, FundamentalIdentity) {
  EXPECT_TRUE(fox_identity_residual(kFigure1).is_zero());
  EXPECT_TRUE(fox_identity_residual(Word::parse("x")).is_zero());
  EXPECT_TRUE(fox_identity_residual(Word::parse("xxyXXyY")).is_zero());
  for (const auto& params : knotted_braids(12))
    ASSERT_TRUE(fox_identity_residual(relator(params)).is_zero()) << params;
}

TEST(Alexander, Specialize) {
  const LaurentPoly2 one_minus_y = LaurentPoly2::monomial(0, 0) - LaurentPoly2::monomial(0, 1);
  EXPECT_EQ(specialize(one_minus_y, {-2, 1}), (LaurentPoly1{{0, 1}, {1, -1}}));
  const LaurentPoly2 x_minus_1 = LaurentPoly2::monomial(1, 0) - LaurentPoly2::monomial(0, 0);
  EXPECT_EQ(specialize(x_minus_1, {1, 1}), (LaurentPoly1{{0, -1}, {1, 1}}));
  EXPECT_TRUE(specialize(LaurentPoly2(), {3, 4}).is_zero());
  // Cancellation during collection.
  EXPECT_TRUE(specialize(x_minus_1, {0, 5}).is_zero());
}

TEST(Alexander, Specialized) {
  EXPECT_EQ(alexander_specialized(Word::parse("xyXY"), {1, 1}), (LaurentPoly1{{0, -1}, {1, 1}}));
  // Fixtures computed independently with a computer algebra gcd.
  EXPECT_EQ(alexander_specialized(kFigure1, {-2, 1}).str(), "0:-1 7:1");
  const LaurentPoly1 fixture = LaurentPoly1::from_dense(
      {-1, 1, 0, 0, -1, 1, 0, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, 0, -1, 1, 0, 0, -1, 1});
  EXPECT_EQ(alexander_specialized(kFigure1, {4, 5}), fixture);
  EXPECT_TRUE(monic_check(alexander_specialized(kFigure1, {-2, 1})));
  EXPECT_THROW(alexander_specialized(Word::parse("xy"), {1, 1}), Error);
  EXPECT_THROW(alexander_specialized(kFigure1, {0, 1}), Error);
}

TEST(Alexander, SymmetricSpecializationsCoincide) {
  // xyXY with equal weights: dX and dY specialize to negatives of each other.
  const auto d = fox_derivatives(Word::parse("xyXY"));
  const WeightHom hom{3, 3};
  EXPECT_EQ(specialize(d.dX, hom).normalized(), specialize(d.dY, hom).normalized());
  EXPECT_EQ(alexander_specialized(Word::parse("xyXY"), hom), specialize(d.dY, hom).normalized());
}

// The explicit-cofactor route and the remainder-sequence gcd agree.
TEST(Alexander, QuotientRouteMatchesGcd) {
  for (const auto& params : knotted_braids(7)) {
    const Word rel = relator(params);
    const auto d = fox_derivatives(rel);
    for (std::int64_t p = 1; p <= 5; ++p)
      for (std::int64_t q = -5; q <= 5; ++q) {
        if (std::gcd(p, q) != 1 || std::gcd(p, params.n()) != 1) continue;
        if (params.t() == 0 && p == 1 && q == 0) continue;
        const WeightHom hom = weight_for_slope(params, {p, q});
        const auto fast = alexander_specialized(rel, hom);
        const auto slow = polynomial_gcd(specialize(d.dX, hom), specialize(d.dY, hom));
        ASSERT_EQ(fast, slow) << params << " p=" << p << " q=" << q;
      }
  }
}

TEST(Alexander, MonicCheck) {
  EXPECT_TRUE(monic_check(LaurentPoly1{{1, 1}, {0, -1}}));
  EXPECT_FALSE(monic_check(LaurentPoly1{{1, 2}, {0, -1}}));
  EXPECT_TRUE(monic_check(LaurentPoly1{{2, 1}, {1, 3}, {0, 1}}));
  EXPECT_FALSE(monic_check(LaurentPoly1{{2, 1}, {0, 2}}));
  EXPECT_THROW(monic_check(LaurentPoly1{}), Error);
}
