#include "parabolic/errors.hpp"
#include "parabolic/repmat.hpp"
#include "parabolic/twists.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace parabolic;
using namespace testing_support;

namespace {

PolyMatrix from_mat3(const Mat3& a)
{
    PolyMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = a[i][j];
    return m;
}

PolyMatrix unit(int n, int i, int j)
{
    PolyMatrix m = zero_matrix(n);
    m(i, j) = 1;
    return m;
}

PolyMatrix e(int i, int j)
{
    return unit(3, i - 1, j - 1);
}

bool same(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.rows() == b.rows() && a.cols() == b.cols() && is_zero(a - b);
}

} // namespace

TEST(RepMat, EvaluatesGenerators)
{
    const RepMap& rho = fundamental();
    EXPECT_TRUE(same(evaluate(rho, H13p()), from_mat3(gen_image(Gen::H13p))));
    for (int i = 0; i < kGenCount; ++i)
        EXPECT_TRUE(same(rho(Gen(i)), from_mat3(gen_image(Gen(i))))) << gen_name(Gen(i));
    const ParamPoly x = ParamPoly::xi();
    const UElem s13 = sigma(Gen::E13, x, 4);
    EXPECT_TRUE(same(evaluate(rho, s13), x * e(1, 3)));
    const UElem e32 = gen(Gen::E32, 4);
    EXPECT_TRUE(same(evaluate(rho, commutator(s13, e32)), x * e(1, 2)));
}

TEST(RepMat, EvaluationMatchesOracle)
{
    Random rnd(31);
    for (int i = 0; i < 200; ++i) {
        const UElem a = rnd.element<1>(4, 4, 0, 2, kExact);
        ASSERT_TRUE(same(evaluate(fundamental(), a), from_mat3(oracle_image(a))));
    }
}

TEST(RepMat, TensorEvaluation)
{
    const UElem one = UElem::one();
    EXPECT_TRUE(same(evaluate_tensor(tensor(one, one)), identity(9)));
    const UElem e13 = gen(Gen::E13);
    EXPECT_TRUE(same(evaluate_tensor(tensor(e13, e13)), unit(9, 0, 8)));
    Random rnd(32);
    for (int i = 0; i < 50; ++i) {
        const UElem a = rnd.element<1>(2, 3, 0, 1, kExact);
        const UElem b = rnd.element<1>(2, 3, 0, 1, kExact);
        const Mat3 ia = oracle_image(a), ib = oracle_image(b);
        PolyMatrix k(9, 9);
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c)
                k(r, c) = ia[r / 3][c / 3] * ib[r % 3][c % 3];
        ASSERT_TRUE(same(evaluate_tensor(tensor(a, b)), k));
    }
}

TEST(RepMat, Homomorphism)
{
    EXPECT_TRUE(homomorphism_check(fundamental()).holds);
    const HomomorphismResult t = homomorphism_check(tensor_product(fundamental(), fundamental()));
    EXPECT_TRUE(t.holds);
    EXPECT_EQ(t.pairs_checked, 81);
    RepMap broken = fundamental();
    std::swap(broken.images[std::size_t(Gen::E12)], broken.images[std::size_t(Gen::E13)]);
    EXPECT_FALSE(homomorphism_check(broken).holds);
}

TEST(RepMat, NilpotentExponential)
{
    EXPECT_TRUE(same(exp_nilpotent(zero_matrix(3)), identity(3)));
    const PolyMatrix n = ParamPoly::zeta() * kron(evaluate(fundamental(), H13p()), e(3, 2));
    EXPECT_TRUE(same(exp_nilpotent(n), identity(9) + n));
    EXPECT_THROW(exp_nilpotent(identity(3)), NotNilpotentError);
    EXPECT_THROW(log_nilpotent(identity(3) * ParamPoly(2)), NotNilpotentError);

    const PolyMatrix m = ParamPoly::xi() * e(1, 3) + ParamPoly::zeta() * e(3, 2) + e(1, 2);
    EXPECT_TRUE(same(exp_nilpotent(m) * exp_nilpotent(-m), identity(3)));
    EXPECT_TRUE(same(log_nilpotent(exp_nilpotent(m)), m));
}

TEST(RepMat, RMatrixCoefficients)
{
    const PolyMatrix R = r_matrix_fundamental();
    ASSERT_EQ(R.rows(), 9);
    EXPECT_EQ(coefficient(R, 2, 0)(0, 8), ParamPoly(make_rational(2, 9)));
    EXPECT_EQ(coefficient(R, 2, 2)(0, 4), ParamPoly(make_rational(-2, 81)));
    EXPECT_EQ(coefficient(R, 2, 1)(0, 5), ParamPoly(make_rational(1, 27)));
    EXPECT_EQ(coefficient(R, 2, 1)(0, 7), ParamPoly(make_rational(-1, 27)));
    EXPECT_TRUE(same(r_matrix_fundamental(Rational(0), Rational(0)), identity(9)));
    for (const ParamExp p : support(R))
        EXPECT_LE(p.total(), 4);
}

TEST(RepMat, RMatrixAgreesWithSeriesRoute)
{
    const int d = 4;
    const TensorElem2 F = parabolic_twist(d);
    const PolyMatrix series = evaluate_tensor(flip(F) * invert(F));
    EXPECT_TRUE(same(truncated(r_matrix_fundamental(), d), series));
}

TEST(RepMat, RMatrixMatchesReferenceExpansion)
{
    const ExpansionResult r = expansion_check(r_matrix_fundamental());
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.monomials_compared, 9);
    EXPECT_EQ(reference_r_expansion().size(), 13u);
    const ExpansionResult s = expansion_check(r_matrix_fundamental(Rational(1), make_rational(-1, 2)), Rational(1),
                                              make_rational(-1, 2));
    EXPECT_TRUE(s.holds());
    PolyMatrix wrong = r_matrix_fundamental();
    wrong(0, 8) += ParamPoly::monomial(1, 3, 0);
    EXPECT_FALSE(expansion_check(wrong).holds());
}

TEST(RepMat, QuantumYangBaxter)
{
    EXPECT_TRUE(qybe_check(identity(9)).holds);
    EXPECT_TRUE(qybe_check(r_matrix_fundamental()).holds);
    EXPECT_TRUE(qybe_check(r_matrix_fundamental(make_rational(2, 3), Rational(-5))).holds);
    const PolyMatrix swap = flip_legs(identity(9));
    EXPECT_TRUE(qybe_check(swap).holds);
    EXPECT_FALSE(qybe_check(identity(9) + kron(e(1, 2), e(2, 3))).holds);
    EXPECT_THROW(qybe_check(identity(4)), DimensionError);
}

TEST(RepMat, Triangularity)
{
    EXPECT_TRUE(triangularity_check(r_matrix_fundamental()).holds);
    EXPECT_FALSE(triangularity_check(identity(9) + kron(e(1, 3), e(1, 3))).holds);
}

TEST(RepMat, SemiclassicalLimitIsMinusR)
{
    for (const Rational eta : {Rational(0), Rational(1), make_rational(-3, 2)}) {
        const SemiclassicalResult s = semiclassical_check(eta);
        EXPECT_TRUE(s.order_zero_identity);
        EXPECT_FALSE(s.matches);
        EXPECT_TRUE(s.matches_negated);
        const PolyMatrix R = r_matrix_fundamental();
        const PolyMatrix first = coefficient(R, 1, 0) + ParamPoly(eta) * coefficient(R, 0, 1);
        const PolyMatrix r = evaluate_tensor(r_parabolic(eta).to_tensor());
        EXPECT_TRUE(same(first, -r));
        EXPECT_TRUE(same(s.first_order, first));
    }
}

TEST(RepMat, TwoRoutesAgree)
{
    for (int d : {3, 5}) {
        const MatrixCheck c = two_route_check(parabolic_twist(d));
        EXPECT_TRUE(c.holds) << "degree " << d;
    }
    TwistSpec spec;
    spec.b = 3;
    EXPECT_TRUE(two_route_check(build(spec, 4), 3).holds);
}

TEST(RepMat, CocycleInRepresentation)
{
    EXPECT_TRUE(cocycle_check_fundamental().holds);
    for (int b : {0, 1, 3}) {
        const MatrixCheck c = cocycle_check_fundamental(b);
        EXPECT_FALSE(c.holds) << "b = " << b;
    }
}

TEST(RepMat, VermaInRepresentations)
{
    EXPECT_TRUE(verma_check_rep(fundamental()).holds);
    EXPECT_TRUE(verma_check_rep(tensor_product(fundamental(), fundamental())).holds);
}

TEST(RepMat, FlipAndKron)
{
    const PolyMatrix a = e(1, 2) + ParamPoly::xi() * e(3, 1);
    const PolyMatrix b = e(2, 2) - e(1, 3);
    EXPECT_TRUE(same(flip_legs(kron(a, b)), kron(b, a)));
    EXPECT_TRUE(same(kron(a, b) * kron(b, a), kron(a * b, b * a)));
}

TEST(RepMat, JsonRoundTrip)
{
    const PolyMatrix R = r_matrix_fundamental();
    const nlohmann::json j = to_json(R);
    ASSERT_EQ(j.size(), 9u);
    ASSERT_EQ(j[0].size(), 9u);
    EXPECT_TRUE(same(matrix_from_json(j), R));
}
