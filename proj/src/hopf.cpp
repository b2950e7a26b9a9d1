#include "parabolic/hopf.hpp"

#include <unordered_map>

namespace parabolic {

const std::vector<std::tuple<Monomial, Monomial, Rational>>& monomial_coproduct(const Monomial& m)
{
    thread_local std::unordered_map<Monomial, std::vector<std::tuple<Monomial, Monomial, Rational>>> cache;
    if (auto it = cache.find(m); it != cache.end())
        return it->second;

    // Generators within one leg are taken in increasing order, so each leg
    // stays a normal-ordered monomial without any straightening.
    std::vector<std::tuple<Monomial, Monomial, Rational>> out{{Monomial{}, Monomial{}, Rational(1)}};
    for (int i = 0; i < kGenCount; ++i) {
        const int e = m.exponent(i);
        if (e == 0)
            continue;
        std::vector<std::tuple<Monomial, Monomial, Rational>> next;
        next.reserve(out.size() * std::size_t(e + 1));
        mpz_class binom = 1;
        for (int k = 0; k <= e; ++k) {
            for (const auto& [a, b, c] : out)
                next.emplace_back(a.with(Gen(i), k), b.with(Gen(i), e - k), c * binom);
            binom = binom * (e - k) / (k + 1);
        }
        out = std::move(next);
    }
    return cache.emplace(m, std::move(out)).first->second;
}

ParamPoly counit(const UElem& x)
{
    ParamPoly p;
    for (const auto& t : x.terms())
        if (t.key.legs[0].is_one())
            p += ParamPoly::monomial(t.coeff, t.key.params.xi, t.key.params.zeta);
    return x.truncation() == kExact ? p : p.truncated(x.truncation());
}

TensorElem3 embed(const TensorElem2& x, LegPair legs)
{
    switch (legs) {
    case LegPair::L12:
        return relabel_legs<2, 3>(x, {0, 1});
    case LegPair::L13:
        return relabel_legs<2, 3>(x, {0, 2});
    case LegPair::L23:
        return relabel_legs<2, 3>(x, {1, 2});
    }
    return {};
}

TensorElem2 flip(const TensorElem2& x)
{
    return relabel_legs<2, 2>(x, {1, 0});
}

void require_invertible(const TensorElem2& F)
{
    const auto one = TensorElem2::one(F.truncation());
    const TensorElem2 n = F - one;
    if (!n.is_zero() && n.valuation() < 1)
        throw ValuationError("twist element is not 1(x)1 plus a parameter-valued remainder");
}

CheckResult<3> cocycle_check(const TensorElem2& F)
{
    require_invertible(F);
    const TensorElem3 lhs = embed(F, LegPair::L12) * coproduct_on_leg<0>(F);
    const TensorElem3 rhs = embed(F, LegPair::L23) * coproduct_on_leg<1>(F);
    CheckResult<3> r;
    r.residual = lhs - rhs;
    r.holds = r.residual.is_zero();
    return r;
}

bool counit_check(const TensorElem2& F)
{
    const UElem one = UElem::one(F.truncation());
    return counit_on_leg<0>(F) == one && counit_on_leg<1>(F) == one;
}

TensorElem2 twist_coproduct(const TensorElem2& F, const TensorElem2& F_inv, const UElem& x)
{
    return F * coproduct(x) * F_inv;
}

TensorElem2 twist_coproduct(const TensorElem2& F, const UElem& x)
{
    require_invertible(F);
    return twist_coproduct(F, invert(F), x);
}

TensorElem3 twisted_coproduct_left(const TensorElem2& F, const TensorElem2& F_inv, const TensorElem2& Y)
{
    return embed(F, LegPair::L12) * coproduct_on_leg<0>(Y) * embed(F_inv, LegPair::L12);
}

TensorElem3 twisted_coproduct_right(const TensorElem2& F, const TensorElem2& F_inv, const TensorElem2& Y)
{
    return embed(F, LegPair::L23) * coproduct_on_leg<1>(Y) * embed(F_inv, LegPair::L23);
}

} // namespace parabolic
