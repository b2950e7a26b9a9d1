#pragma once

#include "parabolic/errors.hpp"
#include "parabolic/monomial.hpp"
#include "parabolic/param_poly.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

namespace parabolic {

/// Basis label of an Element term: one PBW monomial per tensor leg and the
/// parameter monomial xi^a zeta^b.
template <std::size_t Legs>
struct TermKey {
    std::array<Monomial, Legs> legs{};
    ParamExp params{};

    /// Graded in the parameters first, so the first term is a lowest-order term.
    friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b)
    {
        if (auto c = a.params <=> b.params; c != 0)
            return c;
        for (std::size_t i = 0; i < Legs; ++i)
            if (auto c = a.legs[i] <=> b.legs[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const TermKey&, const TermKey&) = default;
};

template <std::size_t Legs>
struct TermKeyHash {
    std::size_t operator()(const TermKey<Legs>& k) const noexcept
    {
        std::uint64_t h = (std::uint64_t(k.params.xi) << 8) | k.params.zeta;
        for (const auto& m : k.legs) {
            h ^= m.bits() + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ull;
        }
        return std::size_t(h ^ (h >> 31));
    }
};

/// Sparse element of U^{(x)Legs} with parameter-polynomial coefficients.
///
/// Terms are kept sorted by TermKey with nonzero rational coefficients, one
/// term per (leg monomials, parameter monomial) pair, so equality is
/// structural. The truncation bound applies to the total parameter degree;
/// terms above it are dropped by every operation. Legs are independent
/// tensor factors and are never commuted past each other.
template <std::size_t Legs>
class Element {
public:
    using Key = TermKey<Legs>;
    using Legs_t = std::array<Monomial, Legs>;

    struct Term {
        Key key;
        Rational coeff;
    };

    Element() = default;
    explicit Element(int truncation) : truncation_(truncation) {}

    static Element one(int truncation = kExact) { return term(Legs_t{}, ParamPoly(1), truncation); }

    static Element scalar(const ParamPoly& c, int truncation = kExact) { return term(Legs_t{}, c, truncation); }

    /// c * (m_1 (x) ... (x) m_Legs).
    static Element term(const Legs_t& legs, const ParamPoly& c, int truncation = kExact)
    {
        Element e(merge_truncation(truncation, c.truncation()));
        for (const auto& t : c.terms())
            if (e.admits(t.exp))
                e.terms_.push_back({Key{legs, t.exp}, t.coeff});
        return e;
    }

    int truncation() const { return truncation_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest total parameter degree present (INT_MAX for zero).
    int valuation() const { return terms_.empty() ? INT_MAX : terms_.front().key.params.total(); }

    /// Valuation of *this minus its constant unit term.
    int valuation_above_one() const
    {
        int v = INT_MAX;
        for (const auto& t : terms_) {
            bool is_unit = t.key.params.total() == 0
                           && std::all_of(t.key.legs.begin(), t.key.legs.end(), [](const Monomial& m) { return m.is_one(); });
            if (is_unit)
                continue;
            v = std::min(v, t.key.params.total());
        }
        return v;
    }

    const Term& leading_term() const { return terms_.front(); }

    /// Coefficient of a leg-monomial tuple as a parameter polynomial.
    ParamPoly coefficient(const Legs_t& legs) const
    {
        ParamPoly p;
        for (const auto& t : terms_)
            if (t.key.legs == legs)
                p += ParamPoly::monomial(t.coeff, t.key.params.xi, t.key.params.zeta);
        return p;
    }

    Element truncated(int degree) const
    {
        Element e(degree);
        for (const auto& t : terms_)
            if (e.admits(t.key.params))
                e.terms_.push_back(t);
        return e;
    }

    /// Evaluates parameters (std::nullopt keeps a parameter formal).
    Element substitute(const ParamValue& xi_val, const ParamValue& zeta_val) const
    {
        Builder b(truncation_);
        for (const auto& t : terms_) {
            ParamPoly p = ParamPoly::monomial(t.coeff, t.key.params.xi, t.key.params.zeta).substitute(xi_val, zeta_val);
            for (const auto& pt : p.terms())
                b.add(Key{t.key.legs, pt.exp}, pt.coeff);
        }
        return b.build();
    }

    Element operator-() const
    {
        Element e = *this;
        for (auto& t : e.terms_)
            t.coeff = -t.coeff;
        return e;
    }

    Element& operator+=(const Element& o) { return *this = combine(*this, o, 1); }
    Element& operator-=(const Element& o) { return *this = combine(*this, o, -1); }

    Element& operator*=(const Rational& c)
    {
        if (c == 0)
            terms_.clear();
        for (auto& t : terms_)
            t.coeff *= c;
        return *this;
    }

    friend Element operator+(const Element& a, const Element& b) { return combine(a, b, 1); }
    friend Element operator-(const Element& a, const Element& b) { return combine(a, b, -1); }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }

    friend Element operator*(const ParamPoly& p, const Element& a) { return scalar(p, a.truncation_) * a; }

    /// Algebra product, leg-wise in normal form.
    friend Element operator*(const Element& a, const Element& b)
    {
        const int d = merge_truncation(a.truncation_, b.truncation_);
        Builder out(d);
        std::array<const Expansion*, Legs> ex{};
        std::array<Monomial, Legs> single{};
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                if (d != kExact && ta.key.params.total() + tb.key.params.total() > d)
                    break; // b is graded ascending
                const ParamExp pe = ta.key.params + tb.key.params;
                const Rational c = ta.coeff * tb.coeff;
                bool all_single = true;
                for (std::size_t l = 0; l < Legs; ++l) {
                    if (auto m = ta.key.legs[l].ordered_concat(tb.key.legs[l])) {
                        single[l] = *m;
                        ex[l] = nullptr;
                    } else {
                        ex[l] = &pbw_product(ta.key.legs[l], tb.key.legs[l]);
                        all_single = false;
                    }
                }
                if (all_single) {
                    Key k;
                    k.params = pe;
                    for (std::size_t l = 0; l < Legs; ++l)
                        k.legs[l] = single[l];
                    out.add(k, c);
                    continue;
                }
                Key k;
                k.params = pe;
                expand_legs<0>(out, k, c, ex, single);
            }
        }
        return out.build();
    }

    Element& operator*=(const Element& o) { return *this = *this * o; }

    /// Structural equality of the terms; truncation bounds are not compared.
    friend bool operator==(const Element& a, const Element& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    /// Accumulates terms, merges duplicates, drops zeros and over-degree terms.
    class Builder {
    public:
        explicit Builder(int truncation) : truncation_(truncation) {}

        bool admits(const ParamExp& e) const { return truncation_ == kExact || e.total() <= truncation_; }

        void add(const Key& k, const Rational& c)
        {
            if (c == 0 || !admits(k.params))
                return;
            auto [it, inserted] = acc_.try_emplace(k, c);
            if (!inserted)
                it->second += c;
        }

        void add(const Element& e)
        {
            for (const auto& t : e.terms())
                add(t.key, t.coeff);
        }

        Element build()
        {
            Element e(truncation_);
            e.terms_.reserve(acc_.size());
            for (auto& [k, c] : acc_)
                if (c != 0)
                    e.terms_.push_back({k, std::move(c)});
            acc_.clear();
            std::sort(e.terms_.begin(), e.terms_.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
            return e;
        }

    private:
        int truncation_;
        std::unordered_map<Key, Rational, TermKeyHash<Legs>> acc_;
    };

    /// Builds directly from sorted, merged, nonzero terms.
    static Element from_sorted_terms(std::vector<Term> terms, int truncation)
    {
        Element e(truncation);
        e.terms_ = std::move(terms);
        return e;
    }

private:
    bool admits(const ParamExp& e) const { return truncation_ == kExact || e.total() <= truncation_; }

    template <std::size_t L>
    static void expand_legs(Builder& out, Key& k, const Rational& c, const std::array<const Expansion*, Legs>& ex,
                            const std::array<Monomial, Legs>& single)
    {
        if constexpr (L == Legs) {
            out.add(k, c);
        } else {
            if (!ex[L]) {
                k.legs[L] = single[L];
                expand_legs<L + 1>(out, k, c, ex, single);
                return;
            }
            for (const auto& [m, cm] : *ex[L]) {
                k.legs[L] = m;
                expand_legs<L + 1>(out, k, c * cm, ex, single);
            }
        }
    }

    static Element combine(const Element& a, const Element& b, int sign)
    {
        Element e(merge_truncation(a.truncation_, b.truncation_));
        e.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        auto push = [&e](const Key& k, Rational c) {
            if (c != 0 && e.admits(k.params))
                e.terms_.push_back({k, std::move(c)});
        };
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->key < ib->key)) {
                push(ia->key, ia->coeff);
                ++ia;
            } else if (ia == a.terms_.end() || ib->key < ia->key) {
                push(ib->key, sign > 0 ? ib->coeff : Rational(-ib->coeff));
                ++ib;
            } else {
                push(ia->key, sign > 0 ? Rational(ia->coeff + ib->coeff) : Rational(ia->coeff - ib->coeff));
                ++ia;
                ++ib;
            }
        }
        return e;
    }

    std::vector<Term> terms_;
    int truncation_ = kExact;
};

/// Element of U(gl(3)).
using UElem = Element<1>;
/// Element of U (x) U.
using TensorElem2 = Element<2>;
/// Element of U (x) U (x) U.
using TensorElem3 = Element<3>;

/// Tensor product a (x) b.
template <std::size_t A, std::size_t B>
Element<A + B> tensor(const Element<A>& a, const Element<B>& b)
{
    const int d = merge_truncation(a.truncation(), b.truncation());
    typename Element<A + B>::Builder out(d);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            typename Element<A + B>::Key k;
            k.params = ta.key.params + tb.key.params;
            std::copy(ta.key.legs.begin(), ta.key.legs.end(), k.legs.begin());
            std::copy(tb.key.legs.begin(), tb.key.legs.end(), k.legs.begin() + A);
            out.add(k, ta.coeff * tb.coeff);
        }
    return out.build();
}

/// Applies a leg permutation: leg i of the input lands on leg perm[i] of the output.
/// Output legs not hit by perm carry the unit.
template <std::size_t In, std::size_t Out>
Element<Out> relabel_legs(const Element<In>& x, const std::array<std::size_t, In>& perm)
{
    typename Element<Out>::Builder out(x.truncation());
    for (const auto& t : x.terms()) {
        typename Element<Out>::Key k;
        k.params = t.key.params;
        for (std::size_t i = 0; i < In; ++i)
            k.legs[perm[i]] = t.key.legs[i];
        out.add(k, t.coeff);
    }
    return out.build();
}

/// Returns exp(x) = sum x^n/n! up to the truncation degree. Requires every
/// term of x to carry at least one power of the parameters.
template <std::size_t Legs>
Element<Legs> exp_series(const Element<Legs>& x)
{
    if (x.is_zero())
        return Element<Legs>::one(x.truncation());
    if (x.truncation() == kExact)
        throw ValuationError("exp_series needs a truncation degree");
    if (x.valuation() < 1)
        throw ValuationError("exp_series argument has a parameter-free part");
    Element<Legs> result = Element<Legs>::one(x.truncation());
    Element<Legs> power = result;
    for (int n = 1; n <= x.truncation(); ++n) {
        power = power * x;
        power *= make_rational(1, n);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

/// Returns log(x) = sum (-1)^{k+1} (x-1)^k / k up to the truncation degree.
template <std::size_t Legs>
Element<Legs> log_series(const Element<Legs>& x)
{
    const auto one = Element<Legs>::one(x.truncation());
    const Element<Legs> n = x - one;
    if (n.is_zero())
        return Element<Legs>(x.truncation());
    if (x.truncation() == kExact)
        throw ValuationError("log_series needs a truncation degree");
    if (n.valuation() < 1)
        throw ValuationError("log_series argument minus one has a parameter-free part");
    Element<Legs> result(x.truncation());
    Element<Legs> power = one;
    for (int k = 1; k <= x.truncation(); ++k) {
        power = power * n;
        if (power.is_zero())
            break;
        const Rational c = make_rational(k % 2 == 1 ? 1 : -1, k);
        result += c * power;
    }
    return result;
}

/// Inverse of 1 + N by the geometric series; N must have parameter valuation >= 1.
template <std::size_t Legs>
Element<Legs> invert(const Element<Legs>& x)
{
    const auto one = Element<Legs>::one(x.truncation());
    const Element<Legs> n = x - one;
    if (n.is_zero())
        return one;
    if (x.truncation() == kExact)
        throw ValuationError("invert needs a truncation degree");
    if (n.valuation() < 1)
        throw ValuationError("invert: argument is not of the form 1 + (parameter-valued remainder)");
    Element<Legs> result = one;
    Element<Legs> power = one;
    const Element<Legs> minus_n = -n;
    for (int k = 1; k <= x.truncation(); ++k) {
        power = power * minus_n;
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

} // namespace parabolic
