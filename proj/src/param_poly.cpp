#include "parabolic/param_poly.hpp"

#include "parabolic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>

namespace parabolic {

int merge_truncation(int a, int b)
{
    if (a == kExact)
        return b;
    if (b == kExact || a == b)
        return a;
    throw TruncationMismatch(a, b);
}

ParamExp ParamExp::operator+(const ParamExp& o) const
{
    int x = int(xi) + o.xi;
    int z = int(zeta) + o.zeta;
    if (x > 255 || z > 255)
        throw AlgebraError("parameter exponent overflow");
    return {std::uint8_t(x), std::uint8_t(z)};
}

ParamPoly::ParamPoly(int c) : ParamPoly(Rational(c)) {}

ParamPoly::ParamPoly(const Rational& c)
{
    if (c != 0)
        terms_.push_back({{0, 0}, c});
}

ParamPoly ParamPoly::monomial(const Rational& c, int xi_exp, int zeta_exp, int truncation)
{
    if (xi_exp < 0 || zeta_exp < 0 || xi_exp > 255 || zeta_exp > 255)
        throw AlgebraError("parameter exponent out of range");
    ParamPoly p;
    p.truncation_ = truncation;
    if (c != 0 && (truncation == kExact || xi_exp + zeta_exp <= truncation))
        p.terms_.push_back({{std::uint8_t(xi_exp), std::uint8_t(zeta_exp)}, c});
    return p;
}

ParamPoly ParamPoly::truncated(int degree) const
{
    ParamPoly p;
    p.truncation_ = degree;
    for (const auto& t : terms_)
        if (degree == kExact || t.exp.total() <= degree)
            p.terms_.push_back(t);
    return p;
}

bool ParamPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.total() == 0);
}

int ParamPoly::valuation() const
{
    return terms_.empty() ? INT_MAX : terms_.front().exp.total();
}

int ParamPoly::degree() const
{
    return terms_.empty() ? -1 : terms_.back().exp.total();
}

Rational ParamPoly::coeff(int xi_exp, int zeta_exp) const
{
    for (const auto& t : terms_)
        if (t.exp.xi == xi_exp && t.exp.zeta == zeta_exp)
            return t.coeff;
    return 0;
}

Rational ParamPoly::evaluate(const Rational& xi_val, const Rational& zeta_val) const
{
    return substitute(xi_val, zeta_val).constant_term();
}

namespace {

Rational power(const Rational& base, int n)
{
    Rational r = 1;
    for (int i = 0; i < n; ++i)
        r *= base;
    return r;
}

} // namespace

ParamPoly ParamPoly::substitute(const ParamValue& xi_val, const ParamValue& zeta_val) const
{
    ParamPoly p;
    p.truncation_ = truncation_;
    for (const auto& t : terms_) {
        Term nt = t;
        if (xi_val) {
            nt.coeff *= power(*xi_val, t.exp.xi);
            nt.exp.xi = 0;
        }
        if (zeta_val) {
            nt.coeff *= power(*zeta_val, t.exp.zeta);
            nt.exp.zeta = 0;
        }
        p.terms_.push_back(std::move(nt));
    }
    p.normalize();
    return p;
}

ParamPoly ParamPoly::along_ray(const Rational& eta) const
{
    ParamPoly p;
    p.truncation_ = truncation_;
    for (const auto& t : terms_)
        p.terms_.push_back({{std::uint8_t(t.exp.xi + t.exp.zeta), 0}, t.coeff * power(eta, t.exp.zeta)});
    p.normalize();
    return p;
}

void ParamPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (truncation_ != kExact && t.exp.total() > truncation_)
            continue;
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

ParamPoly ParamPoly::operator-() const
{
    ParamPoly p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o)
{
    truncation_ = merge_truncation(truncation_, o.truncation_);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o)
{
    return *this += -o;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
{
    ParamPoly p;
    p.truncation_ = merge_truncation(a.truncation_, b.truncation_);
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            if (p.truncation_ != kExact && s.exp.total() + t.exp.total() > p.truncation_)
                continue;
            p.terms_.push_back({s.exp + t.exp, s.coeff * t.coeff});
        }
    p.normalize();
    return p;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o)
{
    return *this = *this * o;
}

ParamPoly& ParamPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

ParamPoly operator/(ParamPoly a, const Rational& c)
{
    if (c == 0)
        throw AlgebraError("division by zero");
    for (auto& t : a.terms_)
        t.coeff /= c;
    return a;
}

bool operator==(const ParamPoly& a, const ParamPoly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string to_string(const ParamPoly& p, std::string_view xi_name, std::string_view zeta_name)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational mag = abs(t.coeff);
        if (first)
            out += t.coeff < 0 ? "-" : "";
        else
            out += t.coeff < 0 ? " - " : " + ";
        first = false;

        std::string factors;
        auto append = [&](std::string_view name, int e) {
            if (e == 0)
                return;
            if (!factors.empty())
                factors += "*";
            factors += name;
            if (e > 1)
                factors += "^" + std::to_string(e);
        };
        append(xi_name, t.exp.xi);
        append(zeta_name, t.exp.zeta);

        if (factors.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += to_string(mag) + "*" + factors;
    }
    return out;
}

ParamPoly parse_param_poly(std::string_view text)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_uint = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected integer", pos);
        return std::string(text.substr(start, pos - start));
    };

    ParamPoly result;
    skip();
    if (pos == text.size())
        throw ParseError("empty polynomial", pos);
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", pos);
        }
        first = false;

        Rational coeff = 1;
        int xe = 0;
        int ze = 0;
        bool have_factor = false;
        while (true) {
            skip();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num = read_uint();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    num += "/" + read_uint();
                }
                coeff *= parse_rational(num);
            } else if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'z')) {
                char var = text[pos++];
                int e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = std::stoi(read_uint());
                }
                (var == 'x' ? xe : ze) += e;
            } else {
                throw ParseError("expected coefficient or variable", pos);
            }
            have_factor = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!have_factor)
            throw ParseError("empty term", pos);
        result += ParamPoly::monomial(coeff * sign, xe, ze);
    }
    return result;
}

} // namespace parabolic
