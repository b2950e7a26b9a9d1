#include "parabolic/liealg.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace parabolic;
using namespace testing_support;

namespace {

Mat3 image(const LieElem& x)
{
    Mat3 m = zero3();
    for (const auto& [u, c] : x.coeffs())
        m = add(m, unit3(u.row, u.col), ParamPoly(c));
    return m;
}

Mat3 commutator(const Mat3& a, const Mat3& b)
{
    return add(mul(a, b), mul(b, a), ParamPoly(-1));
}

} // namespace

TEST(LieAlg, BracketMatchesMatrixCommutatorOnAllPairs)
{
    int checked = 0;
    for (MatrixUnit u : matrix_units())
        for (MatrixUnit v : matrix_units()) {
            const LieElem a(u), b(v);
            EXPECT_TRUE(equal(image(bracket(a, b)), commutator(image(a), image(b))))
                << to_string(u) << " " << to_string(v);
            ++checked;
        }
    EXPECT_EQ(checked, 81);
}

TEST(LieAlg, JacobiOnAllTriples)
{
    int checked = 0;
    for (MatrixUnit u : matrix_units())
        for (MatrixUnit v : matrix_units())
            for (MatrixUnit w : matrix_units()) {
                const LieElem a(u), b(v), c(w);
                const LieElem j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
                EXPECT_TRUE(j.is_zero());
                ++checked;
            }
    EXPECT_EQ(checked, 729);
}

TEST(LieAlg, BracketIsBilinearAndSkew)
{
    Random rnd(7);
    for (int i = 0; i < 50; ++i) {
        LieElem a, b;
        for (MatrixUnit u : matrix_units()) {
            a += rnd.rational() * LieElem(u);
            b += rnd.rational() * LieElem(u);
        }
        EXPECT_EQ(bracket(a, b), -bracket(b, a));
        EXPECT_TRUE(equal(image(bracket(a, b)), commutator(image(a), image(b))));
    }
}

TEST(LieAlg, CartanElements)
{
    EXPECT_EQ(H13p(), make_rational(1, 3) * E(1, 1) - make_rational(2, 3) * E(2, 2) + make_rational(1, 3) * E(3, 3));
    EXPECT_EQ(H23p(), make_rational(2, 3) * E(1, 1) - make_rational(1, 3) * E(2, 2) - make_rational(1, 3) * E(3, 3));
    EXPECT_EQ(H23(), H23p() - Rational(2) * H13p());
    EXPECT_EQ(H23(), E(2, 2) - E(3, 3));
}

TEST(LieAlg, CartanActionTable)
{
    EXPECT_EQ(bracket(H13p(), E(1, 2)), E(1, 2));
    EXPECT_EQ(bracket(H13p(), E(1, 3)), LieElem());
    EXPECT_EQ(bracket(H13p(), E(2, 3)), -E(2, 3));
    EXPECT_EQ(bracket(H13p(), E(3, 2)), E(3, 2));
    EXPECT_EQ(bracket(H23p(), E(1, 2)), E(1, 2));
    EXPECT_EQ(bracket(H23p(), E(1, 3)), E(1, 3));
    EXPECT_EQ(bracket(H23p(), E(2, 3)), LieElem());
    EXPECT_EQ(bracket(H23p(), E(3, 2)), LieElem());
}

TEST(LieAlg, ParabolicSubalgebraIsClosed)
{
    const auto basis = parabolic_basis();
    ASSERT_EQ(basis.size(), 6u);
    for (const auto& a : basis)
        for (const auto& b : basis)
            EXPECT_TRUE(in_parabolic_span(bracket(a, b)));
    EXPECT_FALSE(in_parabolic_span(E(2, 1)));
    EXPECT_FALSE(in_parabolic_span(E(3, 1)));
    EXPECT_TRUE(in_parabolic_span(E(3, 2)));
}

TEST(LieAlg, WedgeIsSkew)
{
    const WedgeElem w = WedgeElem::wedge(H23p(), E(1, 3));
    const LieTensor<2> t = w.to_tensor();
    LieTensor<2> neg;
    for (const auto& [k, c] : t)
        neg[k] = -c;
    EXPECT_EQ(swap_legs(t), neg);
    EXPECT_EQ(WedgeElem::wedge(E(1, 3), H23p()), Rational(-1) * w);
}

TEST(LieAlg, ParabolicRMatrixSolvesCybe)
{
    // [[r(eta), r(eta)]] is quadratic in eta, so three roots make it vanish identically.
    for (const Rational eta : {Rational(0), Rational(1), Rational(-2), make_rational(5, 3)}) {
        const auto c = cybe_bracket(r_parabolic(eta));
        EXPECT_TRUE(c.empty()) << to_string(eta);
    }
}

TEST(LieAlg, CybeDetectsNonSolutions)
{
    EXPECT_FALSE(cybe_bracket(WedgeElem::wedge(E(1, 2), E(2, 1))).empty());
    // The jordanian r-matrix H^E with [H,E] = E is a solution.
    EXPECT_TRUE(cybe_bracket(WedgeElem::wedge(H23p(), E(1, 3))).empty());
}
