#pragma once

#include "parabolic/hopf.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parabolic {

/// Twist factors and compositions on the parabolic subalgebra of sl(3).
/// Every factor is built in its parametrized form, sigma13 = log(1 + xi E13)
/// and sigma32 = log(1 + zeta E32).
enum class TwistKind {
    JordanianJ,   ///< exp(H13p (x) sigma32)
    JordanianPhi, ///< exp(H23p (x) sigma13)
    ExtensionE,   ///< exp(-xi E23 (x) E12 e^{-sigma13})
    PeriphericP,  ///< ExtensionE * JordanianPhi
    RotationR,    ///< exp(-b H13p (x) sigma13)
    DeformedD,    ///< exp(H13p (x) (b sigma13 + sigma32))
    DR,           ///< DeformedD * RotationR
    EJ,           ///< exp(-xi E23 (x) E12 e^{(b-1) sigma13}) exp((H23p - b H13p) (x) sigma13)
    Parabolic,    ///< DeformedD * EJ
};

std::string_view kind_name(TwistKind k);
std::optional<TwistKind> kind_from_name(std::string_view name);

struct TwistSpec {
    TwistKind kind = TwistKind::Parabolic;
    ParamValue xi;   ///< std::nullopt = formal
    ParamValue zeta; ///< std::nullopt = formal
    Rational b = 2;
};

void to_json(nlohmann::json& j, const TwistSpec& s);
void from_json(const nlohmann::json& j, TwistSpec& s);

/// Builds the twist element up to the given parameter degree. Rational
/// parameter values are substituted after the formal construction.
TensorElem2 build(const TwistSpec& spec, int degree = kDefaultDegree);

/// Convenience: the formal parabolic twist with parameter b.
TensorElem2 parabolic_twist(int degree, const Rational& b = 2);

// ---------------------------------------------------------------------------

struct VermaResult {
    bool nested_13 = false; ///< [E13,[E13,E32]] == 0
    bool nested_32 = false; ///< [E32,[E32,E13]] == 0
    CheckResult<1> log_identity; ///< log(e^s13 e^s32 e^s13) == 2 s13 + s32

    bool ok() const { return nested_13 && nested_32 && log_identity.holds; }
};

VermaResult verma_check(int degree = kDefaultDegree);

struct FactorizedResult {
    CheckResult<3> left;       ///< (Delta_P (x) id)F_DR == (F_DR)_13 (F_DR)_23
    CheckResult<3> right;      ///< (id (x) Delta_DRP)F_DR == (F_DR)_12 (F_DR)_13
    CheckResult<2> group_like; ///< F_DR Delta_P(g) F_DR^{-1} == g (x) g, g = e^s13 e^s32 e^s13

    bool ok() const { return left.holds && right.holds && group_like.holds; }
};

/// Factorized cocycle equations for F_DR over the coproduct twisted by F_P.
FactorizedResult factorized_drinfeld_check(const TensorElem2& F_DR, const TensorElem2& F_P);
FactorizedResult factorized_drinfeld_check(int degree = kDefaultDegree);

struct ConstraintResult {
    Rational b;
    Rational beta;          ///< read off from [H1, E12] = beta E12
    LieElem h1;             ///< H23p - b H13p
    LieElem h2;             ///< H13p
    bool sum_ok = false;    ///< H1 + b H2 == H23p
    bool h2_ok = false;     ///< H2 == H13p
    bool beta_ok = false;   ///< beta + b == 1
    bool h1_acts_on_e13 = false; ///< [H1, E13] != 0
    CheckResult<3> cocycle; ///< cocycle of the composite twist with this b

    bool ok() const { return sum_ok && h2_ok && beta_ok && h1_acts_on_e13 && cocycle.holds; }
};

ConstraintResult constraint_check(const TwistSpec& spec, int degree);

struct LimitResult {
    CheckResult<2> zeta_to_zero; ///< F(xi, 0) == F_P(xi)
    CheckResult<2> xi_to_zero;   ///< F(0, zeta) == F_J(zeta)

    bool ok() const { return zeta_to_zero.holds && xi_to_zero.holds; }
};

LimitResult limits_check(int degree = kDefaultDegree);

struct CompositionResult {
    CheckResult<2> four_factor; ///< F_D F_R Phi_E Phi_J == F_D F_EJ
    CheckResult<2> dr_times_p;  ///< F_DR F_P == parabolic

    bool ok() const { return four_factor.holds && dr_times_p.holds; }
};

CompositionResult composition_check(int degree = kDefaultDegree, const Rational& b = 2);

/// One row of a twisted-coproduct table.
struct CoproductEntry {
    std::string generator;
    TensorElem2 computed;      ///< F Delta(x) F^{-1}, on the rescaled generator
    TensorElem2 closed_form;   ///< tabulated closed form, rescaled alike
    CheckResult<2> match;      ///< computed == closed_form
    bool closed_form_required = true; ///< false: a mismatch is reported, not a failure
    std::optional<CheckResult<2>> definitional; ///< F Delta F^{-1} == F_DR Delta_P F_DR^{-1}
    std::optional<CheckResult<2>> amended;      ///< computed == a corrected closed form, reported only

    bool ok() const
    {
        bool def = !definitional || definitional->holds;
        return def && (match.holds || !closed_form_required);
    }
};

/// Coproducts of the six parabolic generators twisted by F_P(xi).
std::vector<CoproductEntry> peripheric_coproducts(int degree = kDefaultDegree);

/// Coproducts of the six parabolic generators twisted by F(xi, zeta).
std::vector<CoproductEntry> parabolic_coproducts(int degree = kDefaultDegree);

} // namespace parabolic
