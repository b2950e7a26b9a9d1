#include "parabolic/rational.hpp"

#include "parabolic/errors.hpp"

#include <cctype>

namespace parabolic {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!valid_integer(num, true))
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    std::string num_str(num);
    if (num_str[0] == '+')
        num_str.erase(0, 1);
    if (slash == std::string_view::npos)
        return Rational(mpz_class(num_str));

    auto den = text.substr(slash + 1);
    if (!valid_integer(den, false))
        throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
    mpz_class d(std::string{den});
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational q(mpz_class(num_str), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace parabolic
