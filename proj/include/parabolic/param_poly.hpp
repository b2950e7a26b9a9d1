#pragma once

#include "parabolic/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parabolic {

/// Truncation value meaning "no degree bound".
inline constexpr int kExact = -1;

/// Combines two truncation bounds: an exact operand adopts the other bound,
/// two different finite bounds are an error.
int merge_truncation(int a, int b);

/// Exponent pair of a monomial xi^a zeta^b.
struct ParamExp {
    std::uint8_t xi = 0;
    std::uint8_t zeta = 0;

    constexpr int total() const { return int(xi) + int(zeta); }

    /// Graded order: total degree first, then xi-heavy monomials first.
    constexpr std::strong_ordering operator<=>(const ParamExp& o) const
    {
        if (auto c = total() <=> o.total(); c != 0)
            return c;
        return o.xi <=> xi;
    }
    constexpr bool operator==(const ParamExp&) const = default;

    ParamExp operator+(const ParamExp& o) const;
};

/// Parameter value: a rational number, or std::nullopt for "keep formal".
using ParamValue = std::optional<Rational>;

/// Polynomial in the deformation parameters xi and zeta with rational
/// coefficients and an optional total-degree truncation. Terms above the
/// truncation are dropped by every operation.
class ParamPoly {
public:
    struct Term {
        ParamExp exp;
        Rational coeff;
    };

    ParamPoly() = default;
    ParamPoly(int c);
    ParamPoly(const Rational& c);

    static ParamPoly monomial(const Rational& c, int xi_exp, int zeta_exp, int truncation = kExact);
    static ParamPoly xi() { return monomial(1, 1, 0); }
    static ParamPoly zeta() { return monomial(1, 0, 1); }

    int truncation() const { return truncation_; }
    ParamPoly truncated(int degree) const;

    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Lowest total degree present; a large sentinel for the zero polynomial.
    int valuation() const;
    int degree() const;
    Rational coeff(int xi_exp, int zeta_exp) const;
    Rational constant_term() const { return coeff(0, 0); }

    Rational evaluate(const Rational& xi_val, const Rational& zeta_val) const;
    ParamPoly substitute(const ParamValue& xi_val, const ParamValue& zeta_val) const;
    /// Restricts to the ray zeta = eta * xi.
    ParamPoly along_ray(const Rational& eta) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
    friend ParamPoly operator/(ParamPoly a, const Rational& c);

    /// Structural equality of the terms; truncation bounds are not compared.
    friend bool operator==(const ParamPoly& a, const ParamPoly& b);

private:
    void normalize();

    std::vector<Term> terms_;
    int truncation_ = kExact;
};

/// Formats as e.g. "1 + 2/9*x^2 - x*z" using the given variable names.
std::string to_string(const ParamPoly& p, std::string_view xi_name = "x", std::string_view zeta_name = "z");

/// Parses the format produced by to_string with variables x and z.
ParamPoly parse_param_poly(std::string_view text);

} // namespace parabolic
