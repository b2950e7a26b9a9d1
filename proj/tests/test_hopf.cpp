#include "parabolic/twists.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace parabolic;
using namespace testing_support;

namespace {

constexpr int kD = 4;

UElem g(Gen x, int d = kExact)
{
    return gen(x, d);
}

TensorElem2 t(const UElem& a, const UElem& b)
{
    return tensor(a, b);
}

TensorElem2 jordanian_phi(int d)
{
    return exp_series(t(to_u(H23p(), d), sigma(Gen::E13, ParamPoly::xi(), d)));
}

} // namespace

TEST(Hopf, GeneratorsArePrimitive)
{
    const UElem one = UElem::one();
    for (int i = 0; i < kGenCount; ++i) {
        const UElem x = g(Gen(i));
        EXPECT_EQ(coproduct(x), t(x, one) + t(one, x));
        EXPECT_EQ(counit(x), ParamPoly());
    }
    EXPECT_EQ(counit(one), ParamPoly(1));
    const UElem e = g(Gen::E12);
    EXPECT_EQ(coproduct(e * e), t(e * e, one) + Rational(2) * t(e, e) + t(one, e * e));
}

TEST(Hopf, CoproductIsAnAlgebraMap)
{
    Random rnd(21);
    for (int i = 0; i < 100; ++i) {
        const UElem a = rnd.element<1>(3, 3, 0, 1, kExact);
        const UElem b = rnd.element<1>(3, 3, 0, 1, kExact);
        ASSERT_EQ(coproduct(a * b), coproduct(a) * coproduct(b));
        ASSERT_EQ(counit(a * b), counit(a) * counit(b));
    }
}

TEST(Hopf, CoassociativityAndCounit)
{
    Random rnd(22);
    for (int i = 0; i < 100; ++i) {
        const UElem a = rnd.element<1>(3, 4, 0, 1, kExact);
        const TensorElem2 d = coproduct(a);
        ASSERT_EQ(coproduct_on_leg<0>(d), coproduct_on_leg<1>(d));
        ASSERT_EQ(counit_on_leg<0>(d), a);
        ASSERT_EQ(counit_on_leg<1>(d), a);
    }
}

TEST(Hopf, LegEmbeddingAndFlip)
{
    const UElem a = g(Gen::E12), b = g(Gen::H13p), one = UElem::one();
    const TensorElem2 x = t(a, b);
    EXPECT_EQ(embed(x, LegPair::L12), tensor(x, one));
    EXPECT_EQ(embed(x, LegPair::L23), tensor(one, x));
    EXPECT_EQ(embed(x, LegPair::L13), tensor(t(a, one), b));
    EXPECT_EQ(flip(x), t(b, a));
    EXPECT_EQ(flip(flip(x)), x);
}

TEST(Hopf, JordanianFactorIsACocycle)
{
    const TensorElem2 F = jordanian_phi(kD);
    EXPECT_EQ(F, build(TwistSpec{TwistKind::JordanianPhi, std::nullopt, std::nullopt, 2}, kD));
    EXPECT_TRUE(cocycle_check(F).holds);
    EXPECT_TRUE(counit_check(F));
    EXPECT_EQ(F * invert(F), TensorElem2::one(kD));
}

TEST(Hopf, AbelianTwistIsACocycle)
{
    const ParamPoly x = ParamPoly::xi();
    const TensorElem2 F = exp_series((x * t(g(Gen::E12), g(Gen::E13))).truncated(kD));
    EXPECT_TRUE(cocycle_check(F).holds);
}

TEST(Hopf, NonCommutingExponentIsNotACocycle)
{
    const ParamPoly x = ParamPoly::xi();
    const TensorElem2 F = exp_series((x * t(g(Gen::E12), g(Gen::E23))).truncated(kD));
    const auto c = cocycle_check(F);
    EXPECT_FALSE(c.holds);
    EXPECT_EQ(c.residual.valuation(), 2);
}

TEST(Hopf, TwistedCoproductKeepsHopfAxioms)
{
    const TensorElem2 F = jordanian_phi(kD);
    const TensorElem2 Fi = invert(F);
    Random rnd(23);
    for (int i = 0; i < 20; ++i) {
        const UElem a = rnd.element<1>(2, 2, 0, 0, kD);
        const UElem b = rnd.element<1>(2, 2, 0, 0, kD);
        const TensorElem2 da = twist_coproduct(F, Fi, a);
        ASSERT_EQ(twist_coproduct(F, Fi, a * b), da * twist_coproduct(F, Fi, b));
        ASSERT_EQ(counit_on_leg<0>(da), a);
        ASSERT_EQ(counit_on_leg<1>(da), a);
        ASSERT_EQ(twisted_coproduct_left(F, Fi, da), twisted_coproduct_right(F, Fi, da));
    }
}

TEST(Hopf, TwistedCoproductOfCartanGenerator)
{
    const TensorElem2 F = jordanian_phi(2);
    const TensorElem2 d = twist_coproduct(F, g(Gen::H23p, 2));
    const TensorElem2 plain = coproduct(g(Gen::H23p, 2));
    const TensorElem2 h = t(to_u(H23p(), 2), g(Gen::E13, 2));
    // F Delta F^{-1} = Delta + xi [H23p (x) E13, Delta(H23p)] + O(xi^2) and [H23p, E13] = E13.
    const TensorElem2 first = ParamPoly::xi() * (h * plain - plain * h);
    EXPECT_EQ(d.truncated(1), (plain + first).truncated(1));
    EXPECT_EQ(first.truncated(1), Rational(-1) * ParamPoly::xi() * t(to_u(H23p(), 2), g(Gen::E13, 2)));
}

TEST(Hopf, InvertRejectsNonUnipotent)
{
    EXPECT_THROW(require_invertible(TensorElem2::one(2) * Rational(2)), ValuationError);
    EXPECT_THROW(invert(TensorElem2::one(2) + t(g(Gen::E12, 2), g(Gen::E12, 2))), ValuationError);
}
