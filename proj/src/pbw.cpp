#include "parabolic/pbw.hpp"

#include <map>

namespace parabolic {

UElem gen(Gen g, int truncation)
{
    return UElem::term({Monomial::generator(g)}, ParamPoly(1), truncation);
}

UElem to_u(const LieElem& x, int truncation)
{
    UElem::Builder b(truncation);
    for (const auto& [g, c] : from_lie(x))
        b.add(UElem::Key{{Monomial::generator(g)}, {}}, c);
    return b.build();
}

UElem straighten(std::span<const Gen> word, const ParamPoly& coeff, SwapStrategy strategy)
{
    using Word = std::vector<Gen>;
    std::map<Word, Rational> pending;
    std::map<Word, Rational> sorted;
    pending[Word(word.begin(), word.end())] = 1;

    while (!pending.empty()) {
        auto node = pending.extract(strategy == SwapStrategy::Leftmost ? pending.begin() : std::prev(pending.end()));
        Word w = std::move(node.key());
        Rational c = std::move(node.mapped());
        if (c == 0)
            continue;

        // Locate the descent to rewrite.
        std::ptrdiff_t pos = -1;
        if (strategy == SwapStrategy::Leftmost) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) {
                    pos = std::ptrdiff_t(i);
                    break;
                }
        } else {
            for (std::size_t i = w.size(); i-- > 1;)
                if (w[i - 1] > w[i]) {
                    pos = std::ptrdiff_t(i - 1);
                    break;
                }
        }
        if (pos < 0) {
            sorted[w] += c;
            continue;
        }

        const Gen x = w[pos];
        const Gen y = w[pos + 1];
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        pending[swapped] += c;
        for (const auto& [z, cz] : gen_bracket(x, y)) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
            shorter.push_back(z);
            shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
            pending[shorter] += c * cz;
        }
    }

    UElem::Builder b(coeff.truncation());
    for (const auto& [w, c] : sorted) {
        Monomial m;
        for (Gen g : w)
            m = m.with(g, 1);
        for (const auto& t : coeff.terms())
            b.add(UElem::Key{{m}, t.exp}, c * t.coeff);
    }
    return b.build();
}

UElem straighten(std::span<const MatrixUnit> word, const ParamPoly& coeff, SwapStrategy strategy)
{
    // Expand each matrix unit in the generator basis and distribute.
    std::vector<std::pair<std::vector<Gen>, Rational>> words{{{}, 1}};
    for (const MatrixUnit& u : word) {
        std::vector<std::pair<std::vector<Gen>, Rational>> next;
        for (const auto& [w, c] : words)
            for (const auto& [g, cg] : from_lie(LieElem(u))) {
                auto w2 = w;
                w2.push_back(g);
                next.emplace_back(std::move(w2), c * cg);
            }
        words = std::move(next);
    }
    UElem result(coeff.truncation());
    for (const auto& [w, c] : words)
        result += straighten(w, coeff * ParamPoly(c), strategy);
    return result;
}

UElem sigma(Gen g, const ParamPoly& p, int truncation)
{
    const UElem arg = UElem::one(truncation) + p * gen(g, truncation);
    return log_series(arg);
}

namespace {

std::string coefficient_prefix(const Rational& c, const ParamExp& e, bool first, bool& bare)
{
    std::string out;
    if (first)
        out = c < 0 ? "-" : "";
    else
        out = c < 0 ? " - " : " + ";
    const Rational mag = abs(c);
    std::string factors;
    if (mag != 1)
        factors = to_string(mag);
    auto append = [&](std::string_view name, int n) {
        if (n == 0)
            return;
        if (!factors.empty())
            factors += "*";
        factors += name;
        if (n > 1)
            factors += "^" + std::to_string(n);
    };
    append("xi", e.xi);
    append("zeta", e.zeta);
    bare = factors.empty();
    return out + factors;
}

template <std::size_t Legs>
std::string format_term(const typename Element<Legs>::Term& t, bool first)
{
    bool bare = false;
    std::string out = coefficient_prefix(t.coeff, t.key.params, first, bare);
    for (std::size_t l = 0; l < Legs; ++l) {
        const Monomial& m = t.key.legs[l];
        if (l > 0)
            out += " (x) ";
        if (l == 0) {
            if (m.is_one()) {
                if (bare)
                    out += "1";
            } else {
                out += bare ? to_string(m) : "*" + to_string(m);
            }
        } else {
            out += to_string(m);
        }
    }
    return out;
}

template <std::size_t Legs>
std::string format(const Element<Legs>& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        out += format_term<Legs>(t, first);
        first = false;
    }
    return out;
}

} // namespace

template <std::size_t Legs>
std::string term_to_string(const typename Element<Legs>::Term& t)
{
    return format_term<Legs>(t, true);
}

template std::string term_to_string<1>(const UElem::Term&);
template std::string term_to_string<2>(const TensorElem2::Term&);
template std::string term_to_string<3>(const TensorElem3::Term&);

std::string to_string(const UElem& x)
{
    return format(x);
}

std::string to_string(const TensorElem2& x)
{
    return format(x);
}

std::string to_string(const TensorElem3& x)
{
    return format(x);
}

} // namespace parabolic
