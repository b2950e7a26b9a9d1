#pragma once

#include "parabolic/pbw.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace parabolic {

/// Primitive coproduct of a single monomial, m = prod g^e:
/// sum over splits e = k + l of prod binom(e, k) g^k (x) g^l.
const std::vector<std::tuple<Monomial, Monomial, Rational>>& monomial_coproduct(const Monomial& m);

/// Applies the undeformed coproduct to leg K of x, producing Legs+1 legs.
template <std::size_t K, std::size_t Legs>
Element<Legs + 1> coproduct_on_leg(const Element<Legs>& x)
{
    static_assert(K < Legs);
    typename Element<Legs + 1>::Builder out(x.truncation());
    for (const auto& t : x.terms()) {
        for (const auto& [m1, m2, c] : monomial_coproduct(t.key.legs[K])) {
            typename Element<Legs + 1>::Key k;
            k.params = t.key.params;
            for (std::size_t i = 0; i < K; ++i)
                k.legs[i] = t.key.legs[i];
            k.legs[K] = m1;
            k.legs[K + 1] = m2;
            for (std::size_t i = K + 1; i < Legs; ++i)
                k.legs[i + 1] = t.key.legs[i];
            out.add(k, c * t.coeff);
        }
    }
    return out.build();
}

/// Undeformed coproduct: Delta(g) = g (x) 1 + 1 (x) g on generators, extended multiplicatively.
inline TensorElem2 coproduct(const UElem& x)
{
    return coproduct_on_leg<0>(x);
}

/// Applies the counit to leg K: keeps the terms whose K-th leg is the unit.
template <std::size_t K, std::size_t Legs>
Element<Legs - 1> counit_on_leg(const Element<Legs>& x)
{
    static_assert(K < Legs && Legs >= 2);
    typename Element<Legs - 1>::Builder out(x.truncation());
    for (const auto& t : x.terms()) {
        if (!t.key.legs[K].is_one())
            continue;
        typename Element<Legs - 1>::Key k;
        k.params = t.key.params;
        for (std::size_t i = 0, j = 0; i < Legs; ++i)
            if (i != K)
                k.legs[j++] = t.key.legs[i];
        out.add(k, t.coeff);
    }
    return out.build();
}

/// Counit: epsilon(E_ij) = 0, epsilon(1) = 1.
ParamPoly counit(const UElem& x);

/// Leg placement of a two-leg element inside U^{(x)3}.
enum class LegPair { L12, L13, L23 };

/// Inserts the unit on the omitted leg: a(x)b -> a(x)b(x)1, a(x)1(x)b, 1(x)a(x)b.
TensorElem3 embed(const TensorElem2& x, LegPair legs);

/// a (x) b -> b (x) a.
TensorElem2 flip(const TensorElem2& x);

/// Outcome of an identity check: whether LHS == RHS and the difference LHS - RHS.
template <std::size_t Legs>
struct CheckResult {
    bool holds = false;
    Element<Legs> residual;
};

/// Lowest-order term of a residual, "0" when it vanishes.
template <std::size_t Legs>
std::string leading_residual(const Element<Legs>& r)
{
    return r.is_zero() ? std::string("0") : term_to_string<Legs>(r.leading_term());
}

/// Throws ValuationError unless F = 1(x)1 + N with N of parameter valuation >= 1.
void require_invertible(const TensorElem2& F);

/// F12 (Delta (x) id)F == F23 (id (x) Delta)F, up to F's truncation degree.
CheckResult<3> cocycle_check(const TensorElem2& F);

/// (epsilon (x) id)F == 1 and (id (x) epsilon)F == 1.
bool counit_check(const TensorElem2& F);

/// Delta_F(x) = F Delta(x) F^{-1}.
TensorElem2 twist_coproduct(const TensorElem2& F, const UElem& x);

/// Same with a precomputed inverse.
TensorElem2 twist_coproduct(const TensorElem2& F, const TensorElem2& F_inv, const UElem& x);

/// (Delta_F (x) id)Y = F12 (Delta (x) id)(Y) F12^{-1}.
TensorElem3 twisted_coproduct_left(const TensorElem2& F, const TensorElem2& F_inv, const TensorElem2& Y);

/// (id (x) Delta_F)Y = F23 (id (x) Delta)(Y) F23^{-1}.
TensorElem3 twisted_coproduct_right(const TensorElem2& F, const TensorElem2& F_inv, const TensorElem2& Y);

} // namespace parabolic
