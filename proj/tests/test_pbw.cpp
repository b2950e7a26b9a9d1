#include "parabolic/pbw.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace parabolic;
using namespace testing_support;

namespace {

UElem g(Gen x)
{
    return gen(x);
}

UElem word_product(const std::vector<Gen>& w)
{
    UElem out = UElem::one();
    for (Gen x : w)
        out = out * g(x);
    return out;
}

Mat3 word_image(const std::vector<Gen>& w)
{
    Mat3 out = id3();
    for (Gen x : w)
        out = mul(out, gen_image(x));
    return out;
}

} // namespace

TEST(Pbw, StraightensAdjacentPairs)
{
    EXPECT_EQ(g(Gen::E23) * g(Gen::E12), g(Gen::E12) * g(Gen::E23) - g(Gen::E13));
    EXPECT_EQ(g(Gen::E12) * g(Gen::H13p), g(Gen::H13p) * g(Gen::E12) - g(Gen::E12));
    EXPECT_EQ(g(Gen::E23) * g(Gen::E32), g(Gen::E32) * g(Gen::E23) + g(Gen::H23p) - Rational(2) * g(Gen::H13p));
    EXPECT_EQ(g(Gen::E13) * g(Gen::Z), g(Gen::Z) * g(Gen::E13));
    EXPECT_EQ(to_string(g(Gen::E23) * g(Gen::E12)), "-E13 + E12*E23");
}

TEST(Pbw, MatrixUnitWordsExpandInGeneratorBasis)
{
    const std::array<MatrixUnit, 2> w{MatrixUnit{2, 2}, MatrixUnit{1, 2}};
    // E22 = Z/3 - H13p; E22 E12 = E12 E22 - E12.
    const UElem e22 = make_rational(1, 3) * g(Gen::Z) - g(Gen::H13p);
    EXPECT_EQ(straighten(w), e22 * g(Gen::E12));
    EXPECT_EQ(to_u(E(2, 2)), e22);
}

TEST(Pbw, SigmaIsTheLogarithmSeries)
{
    const int d = 4;
    const ParamPoly x = ParamPoly::xi();
    const UElem s = sigma(Gen::E13, x, d);
    UElem expected(d);
    UElem power = UElem::one(d);
    for (int k = 1; k <= d; ++k) {
        power = power * (x * g(Gen::E13)).truncated(d);
        expected += make_rational(k % 2 == 1 ? 1 : -1, k) * power;
    }
    EXPECT_EQ(s, expected);
    EXPECT_EQ(exp_series(s), UElem::one(d) + (x * g(Gen::E13)).truncated(d));
}

TEST(Pbw, ConfluenceOnRandomWords)
{
    Random rnd(11);
    for (int i = 0; i < 1000; ++i) {
        const auto w = rnd.word(6);
        const UElem left = straighten(w, 1, SwapStrategy::Leftmost);
        const UElem right = straighten(w, 1, SwapStrategy::Rightmost);
        ASSERT_EQ(left, right) << "word " << i;
        ASSERT_EQ(left, word_product(w)) << "word " << i;
        ASSERT_TRUE(equal(oracle_image(left), word_image(w))) << "word " << i;
    }
}

TEST(Pbw, ProductIsMultiplicativeInTheFundamentalRepresentation)
{
    Random rnd(12);
    for (int i = 0; i < 500; ++i) {
        const UElem a = rnd.element<1>(4, 3, 0, 2, kExact);
        const UElem b = rnd.element<1>(4, 3, 0, 2, kExact);
        ASSERT_TRUE(equal(oracle_image(a * b), mul(oracle_image(a), oracle_image(b)))) << "pair " << i;
    }
}

TEST(Pbw, ProductIsAssociative)
{
    Random rnd(13);
    for (int i = 0; i < 100; ++i) {
        const UElem a = rnd.element<1>(3, 3, 0, 1, kExact);
        const UElem b = rnd.element<1>(3, 3, 0, 1, kExact);
        const UElem c = rnd.element<1>(3, 3, 0, 1, kExact);
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Pbw, ExpLogRoundTrip)
{
    Random rnd(14);
    for (int i = 0; i < 200; ++i) {
        const UElem x = rnd.element<1>(3, 2, 1, 3, 4);
        const UElem e = exp_series(x);
        ASSERT_EQ(log_series(e), x) << to_string(x);
        ASSERT_EQ(e * exp_series(-x), UElem::one(4));
        ASSERT_EQ(invert(e), exp_series(-x));
    }
}

TEST(Pbw, SeriesRejectParameterFreeArguments)
{
    EXPECT_THROW(exp_series(UElem::one(3) * g(Gen::E12)), ValuationError);
    EXPECT_THROW(invert(UElem::one(3) + UElem::one(3) * g(Gen::E12)), ValuationError);
    EXPECT_THROW(exp_series(ParamPoly::xi() * g(Gen::E12)), ValuationError);
}

TEST(Pbw, TruncationMismatchIsAnError)
{
    EXPECT_THROW(UElem::one(3) + UElem::one(4), TruncationMismatch);
    EXPECT_NO_THROW(UElem::one(3) + UElem::one());
}

TEST(Pbw, ExponentialInverseOfRaisingSum)
{
    for (int d : {4, 6}) {
        const UElem x = (ParamPoly::xi() * (g(Gen::E23) + g(Gen::E12))).truncated(d);
        EXPECT_EQ(exp_series(x) * exp_series(-x), UElem::one(d));
        EXPECT_EQ(exp_series(log_series(UElem::one(d) + x)), UElem::one(d) + x);
    }
}
