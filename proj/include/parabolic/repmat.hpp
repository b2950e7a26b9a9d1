#pragma once

#include "parabolic/hopf.hpp"
#include "parabolic/liealg.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <array>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<parabolic::ParamPoly> : GenericNumTraits<parabolic::ParamPoly> {
    using Real = parabolic::ParamPoly;
    using NonInteger = parabolic::ParamPoly;
    using Nested = parabolic::ParamPoly;
    using Literal = parabolic::ParamPoly;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };

    static Real epsilon() { return 0; }
    static Real dummy_precision() { return 0; }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace parabolic {

/// Dense matrix with exact parameter-polynomial entries.
using PolyMatrix = Eigen::Matrix<ParamPoly, Eigen::Dynamic, Eigen::Dynamic>;

PolyMatrix identity(int n);
PolyMatrix zero_matrix(int n);
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix truncated(const PolyMatrix& m, int degree);
PolyMatrix substitute(const PolyMatrix& m, const ParamValue& xi_val, const ParamValue& zeta_val);
bool is_zero(const PolyMatrix& m);

/// Entry-wise coefficient of xi^a zeta^b, as a constant matrix.
PolyMatrix coefficient(const PolyMatrix& m, int xi_exp, int zeta_exp);

/// Parameter monomials occurring in any entry, in graded order.
std::vector<ParamExp> support(const PolyMatrix& m);

/// Lowest parameter degree among the nonzero entries, "0" for the zero matrix.
std::string leading_entry(const PolyMatrix& m);

/// exp(m) as a finite sum; throws NotNilpotentError unless m^n = 0 for n = rows.
PolyMatrix exp_nilpotent(const PolyMatrix& m);

/// log(u) as a finite sum; throws NotNilpotentError unless u - 1 is nilpotent.
PolyMatrix log_nilpotent(const PolyMatrix& u);

/// Row-major array of polynomial strings in x (xi) and z (zeta).
nlohmann::json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------

/// Representation of U(gl(3)): images of the nine PBW generators.
struct RepMap {
    int dim = 0;
    std::array<PolyMatrix, kGenCount> images;

    const PolyMatrix& operator()(Gen g) const { return images[std::size_t(g)]; }
};

/// Matrix units E_ij -> e_ij on C^3.
const RepMap& fundamental();

/// a (x) b composed with the primitive coproduct: g -> a(g) (x) 1 + 1 (x) b(g).
RepMap tensor_product(const RepMap& a, const RepMap& b);

struct HomomorphismResult {
    bool holds = true;
    int pairs_checked = 0;
    std::string first_failure; ///< first generator pair, in generator order, that fails
};

/// rho([a,b]) == rho(a) rho(b) - rho(b) rho(a) on all 81 generator pairs.
HomomorphismResult homomorphism_check(const RepMap& rep);

PolyMatrix evaluate(const RepMap& rep, const Monomial& m);
PolyMatrix evaluate(const RepMap& rep, const UElem& x);
PolyMatrix evaluate(const RepMap& rep, const LieElem& x);

/// Leg-wise evaluation followed by the Kronecker product, with one
/// representation per leg.
template <std::size_t Legs>
PolyMatrix evaluate_tensor(const std::array<const RepMap*, Legs>& reps, const Element<Legs>& x);

template <std::size_t Legs>
PolyMatrix evaluate_tensor(const Element<Legs>& x)
{
    std::array<const RepMap*, Legs> reps;
    reps.fill(&fundamental());
    return evaluate_tensor(reps, x);
}

/// Fundamental image of a Lie tensor, e.g. a classical r-matrix.
PolyMatrix evaluate_tensor(const LieTensor<2>& t);

/// Swaps the two tensor factors of an operator on C^n (x) C^n.
PolyMatrix flip_legs(const PolyMatrix& m, int n = 3);

// ---------------------------------------------------------------------------

/// Image of the composite twist exp(H13p (x) (b s13 + s32)) exp(-xi E23 (x) E12 e^{(b-1) s13})
/// exp((H23p - b H13p) (x) s13) under left (x) right, built from exact
/// exponentials of nilpotent matrices. With b = 2 this is F(xi, zeta).
PolyMatrix twist_matrix(const RepMap& left, const RepMap& right, const Rational& b = 2);

/// Same factors inverted in reverse order.
PolyMatrix twist_matrix_inverse(const RepMap& left, const RepMap& right, const Rational& b = 2);

/// R = F_21 F^{-1} in the fundamental representation, 9 x 9.
PolyMatrix r_matrix_fundamental(const ParamValue& xi = std::nullopt, const ParamValue& zeta = std::nullopt);

struct MatrixCheck {
    bool holds = false;
    PolyMatrix residual; ///< LHS - RHS
};

/// R12 R13 R23 == R23 R13 R12 on C^3 (x) C^3 (x) C^3. Throws DimensionError unless R is 9 x 9.
MatrixCheck qybe_check(const PolyMatrix& R);

/// R21 R == 1.
MatrixCheck triangularity_check(const PolyMatrix& R);

struct SemiclassicalResult {
    Rational eta;
    bool order_zero_identity = false;
    PolyMatrix first_order;    ///< coefficient of t in R(t, eta t)
    PolyMatrix classical;      ///< fundamental image of r(eta)
    bool matches = false;      ///< first_order == classical
    bool matches_negated = false; ///< first_order == -classical

    bool ok() const { return order_zero_identity && matches; }
};

SemiclassicalResult semiclassical_check(const Rational& eta);

/// One term of the reference expansion of the fundamental R-matrix: coeff * xi^a zeta^b * tensor.
struct ExpansionTerm {
    std::string label;
    ParamExp params;
    Rational coeff;
    LieTensor<2> tensor;
};

/// The 13 terms of the reference expansion of the fundamental R-matrix, with the
/// 1/3 prefactor of the xi zeta term spanning all three of its summands.
std::vector<ExpansionTerm> reference_r_expansion();

struct ExpansionMismatch {
    ParamExp params;
    PolyMatrix computed;
    PolyMatrix expected;
};

struct ExpansionResult {
    int monomials_compared = 0;
    std::vector<ExpansionMismatch> mismatches;

    bool holds() const { return mismatches.empty(); }
};

/// Compares R with the reference expansion monomial by monomial, including
/// every monomial that occurs on only one side. Parameter values, when
/// given, are substituted into the reference first.
ExpansionResult expansion_check(const PolyMatrix& R, const ParamValue& xi = std::nullopt,
                                const ParamValue& zeta = std::nullopt);

/// The reference expansion summed into a 9 x 9 matrix.
PolyMatrix reference_r_matrix();

/// Cocycle equation in the fundamental representation, 27 x 27:
/// F12 (Delta (x) id)F == F23 (id (x) Delta)F, each coproduct realized by a
/// tensor-product representation on one leg.
MatrixCheck cocycle_check_fundamental(const Rational& b = 2);

/// log(e^{s13} e^{s32} e^{s13}) == 2 s13 + s32 in the given representation.
MatrixCheck verma_check_rep(const RepMap& rep);

/// evaluate_tensor of the series twist at degree D against twist_matrix
/// truncated to D.
MatrixCheck two_route_check(const TensorElem2& F_series, const Rational& b = 2);

} // namespace parabolic
