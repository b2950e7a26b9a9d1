#pragma once

// Test-side oracles and random generators. The 3x3 matrix arithmetic here is
// written from the matrix-unit definition and shares no code with the
// library's representation module.

#include "parabolic/pbw.hpp"

#include <array>
#include <random>
#include <vector>

namespace testing_support {

using parabolic::Gen;
using parabolic::Monomial;
using parabolic::ParamPoly;
using parabolic::Rational;

using Mat3 = std::array<std::array<ParamPoly, 3>, 3>;

inline Mat3 zero3()
{
    return {};
}

inline Mat3 id3()
{
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        m[i][i] = 1;
    return m;
}

inline Mat3 unit3(int i, int j)
{
    Mat3 m{};
    m[i - 1][j - 1] = 1;
    return m;
}

inline Mat3 diag3(Rational a, Rational b, Rational c)
{
    Mat3 m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return m;
}

inline Mat3 mul(const Mat3& a, const Mat3& b)
{
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                m[i][j] += a[i][k] * b[k][j];
    return m;
}

inline Mat3 add(const Mat3& a, const Mat3& b, const ParamPoly& sb = 1)
{
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = a[i][j] + sb * b[i][j];
    return m;
}

inline Mat3 scale(const Mat3& a, const ParamPoly& c)
{
    return add(zero3(), a, c);
}

inline bool equal(const Mat3& a, const Mat3& b)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a[i][j] != b[i][j])
                return false;
    return true;
}

/// Generator images straight from the matrix-unit definitions.
inline Mat3 gen_image(Gen g)
{
    using parabolic::make_rational;
    switch (g) {
    case Gen::E21: return unit3(2, 1);
    case Gen::E31: return unit3(3, 1);
    case Gen::E32: return unit3(3, 2);
    case Gen::H13p: return diag3(make_rational(1, 3), make_rational(-2, 3), make_rational(1, 3));
    case Gen::H23p: return diag3(make_rational(2, 3), make_rational(-1, 3), make_rational(-1, 3));
    case Gen::Z: return id3();
    case Gen::E12: return unit3(1, 2);
    case Gen::E13: return unit3(1, 3);
    case Gen::E23: return unit3(2, 3);
    }
    return zero3();
}

inline Mat3 monomial_image(const Monomial& m)
{
    Mat3 out = id3();
    for (int i = 0; i < parabolic::kGenCount; ++i)
        for (int e = 0; e < m.exponent(i); ++e)
            out = mul(out, gen_image(Gen(i)));
    return out;
}

inline Mat3 oracle_image(const parabolic::UElem& x)
{
    Mat3 out = zero3();
    for (const auto& t : x.terms())
        out = add(out, monomial_image(t.key.legs[0]),
                  ParamPoly::monomial(t.coeff, t.key.params.xi, t.key.params.zeta));
    return out;
}

// ---------------------------------------------------------------------------

class Random {
public:
    explicit Random(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Gen gen() { return Gen(uniform(0, parabolic::kGenCount - 1)); }

    std::vector<Gen> word(int max_length)
    {
        std::vector<Gen> w(std::size_t(uniform(0, max_length)));
        for (auto& g : w)
            g = gen();
        return w;
    }

    Rational rational()
    {
        int num = uniform(-5, 5);
        if (num == 0)
            num = 1;
        return parabolic::make_rational(num, uniform(1, 4));
    }

    Monomial monomial(int max_length)
    {
        Monomial m;
        const int len = uniform(0, max_length);
        for (int i = 0; i < len; ++i)
            m = m.with(gen(), 1);
        return m;
    }

    /// Random element with up to `terms` terms and parameter degree in [min_param, max_param].
    template <std::size_t Legs>
    parabolic::Element<Legs> element(int terms, int max_length, int min_param, int max_param, int truncation)
    {
        typename parabolic::Element<Legs>::Builder b(truncation);
        const int n = uniform(1, terms);
        for (int i = 0; i < n; ++i) {
            typename parabolic::Element<Legs>::Key k;
            for (auto& leg : k.legs)
                leg = monomial(max_length);
            const int total = uniform(min_param, max_param);
            const int xi = uniform(0, total);
            k.params = parabolic::ParamExp{std::uint8_t(xi), std::uint8_t(total - xi)};
            b.add(k, rational());
        }
        return b.build();
    }

private:
    std::mt19937 rng_;
};

} // namespace testing_support
