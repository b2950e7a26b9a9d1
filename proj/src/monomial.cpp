#include "parabolic/monomial.hpp"

#include "parabolic/errors.hpp"

#include <map>
#include <unordered_map>

namespace parabolic {

namespace {

constexpr std::array<std::string_view, kGenCount> kGenNames = {
    "E21", "E31", "E32", "H13p", "H23p", "Z", "E12", "E13", "E23",
};

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept
    {
        std::uint64_t h = p.first * 0x9E3779B97F4A7C15ull;
        h ^= p.second + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        return std::size_t(h ^ (h >> 29));
    }
};

using ProductCache = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Expansion, PairHash>;

struct Caches {
    ProductCache times_gen;
    ProductCache product;
};

Caches& caches()
{
    thread_local Caches c;
    return c;
}

Expansion collect(std::map<Monomial, Rational>& acc)
{
    Expansion out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.emplace_back(m, std::move(c));
    return out;
}

} // namespace

std::string_view gen_name(Gen g)
{
    return kGenNames[std::size_t(g)];
}

std::optional<Gen> gen_from_name(std::string_view name)
{
    for (int i = 0; i < kGenCount; ++i)
        if (kGenNames[i] == name)
            return Gen(i);
    return std::nullopt;
}

const LieElem& to_lie(Gen g)
{
    static const std::array<LieElem, kGenCount> images = {
        E(2, 1), E(3, 1), E(3, 2), H13p(), H23p(), central_unit(), E(1, 2), E(1, 3), E(2, 3),
    };
    return images[std::size_t(g)];
}

std::vector<std::pair<Gen, Rational>> from_lie(const LieElem& x)
{
    std::vector<std::pair<Gen, Rational>> out;
    std::array<Rational, 3> diag{0, 0, 0};
    for (const auto& [u, c] : x.coeffs()) {
        if (u.row == u.col) {
            diag[u.row - 1] = c;
            continue;
        }
        for (int i = 0; i < kGenCount; ++i)
            if (to_lie(Gen(i)).coeffs().begin()->first == u && to_lie(Gen(i)).coeffs().size() == 1)
                out.emplace_back(Gen(i), c);
    }
    // diag = a*H13p + b*H23p + z*Z with H13p = diag(1,-2,1)/3, H23p = diag(2,-1,-1)/3.
    Rational z = (diag[0] + diag[1] + diag[2]) / 3;
    Rational u = diag[0] - z;
    Rational v = diag[1] - z;
    Rational b = v + 2 * u;
    Rational a = -u - 2 * v;
    if (a != 0)
        out.emplace_back(Gen::H13p, a);
    if (b != 0)
        out.emplace_back(Gen::H23p, b);
    if (z != 0)
        out.emplace_back(Gen::Z, z);
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

const std::vector<std::pair<Gen, Rational>>& gen_bracket(Gen g, Gen h)
{
    static const auto table = [] {
        std::array<std::array<std::vector<std::pair<Gen, Rational>>, kGenCount>, kGenCount> t;
        for (int i = 0; i < kGenCount; ++i)
            for (int j = 0; j < kGenCount; ++j)
                t[i][j] = from_lie(bracket(to_lie(Gen(i)), to_lie(Gen(j))));
        return t;
    }();
    return table[std::size_t(g)][std::size_t(h)];
}

Monomial Monomial::generator(Gen g, int power)
{
    return Monomial{}.with(g, power);
}

Monomial Monomial::from_exponents(const std::array<int, kGenCount>& e)
{
    Monomial m;
    for (int i = 0; i < kGenCount; ++i)
        m = m.with(Gen(i), e[i]);
    return m;
}

std::array<int, kGenCount> Monomial::exponents() const
{
    std::array<int, kGenCount> e{};
    for (int i = 0; i < kGenCount; ++i)
        e[i] = exponent(i);
    return e;
}

int Monomial::length() const
{
    int n = 0;
    for (int i = 0; i < kGenCount; ++i)
        n += exponent(i);
    return n;
}

int Monomial::first_gen() const
{
    for (int i = 0; i < kGenCount; ++i)
        if (exponent(i) != 0)
            return i;
    return -1;
}

int Monomial::last_gen() const
{
    for (int i = kGenCount - 1; i >= 0; --i)
        if (exponent(i) != 0)
            return i;
    return -1;
}

Monomial Monomial::with(Gen g, int delta) const
{
    int e = exponent(g) + delta;
    if (e < 0 || e > kMaxExponent)
        throw AlgebraError("PBW exponent out of range");
    Monomial m = *this;
    const int s = shift(int(g));
    m.bits_ = (m.bits_ & ~(std::uint64_t(kMaxExponent) << s)) | (std::uint64_t(e) << s);
    return m;
}

std::optional<Monomial> Monomial::ordered_concat(const Monomial& o) const
{
    const int l = last_gen();
    const int f = o.first_gen();
    if (l >= 0 && f >= 0 && l > f)
        return std::nullopt;
    if (l == f && l >= 0 && exponent(l) + o.exponent(l) > kMaxExponent)
        throw AlgebraError("PBW exponent out of range");
    Monomial m;
    m.bits_ = bits_ + o.bits_;
    return m;
}

std::string to_string(const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (int i = 0; i < kGenCount; ++i) {
        int e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += gen_name(Gen(i));
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

const Expansion& pbw_times_gen(const Monomial& a, Gen g)
{
    auto& cache = caches().times_gen;
    const std::pair<std::uint64_t, std::uint64_t> key{a.bits(), std::uint64_t(g)};
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    Expansion result;
    const int last = a.last_gen();
    if (last <= int(g)) {
        result.emplace_back(a.with(g, 1), 1);
    } else {
        // a = a' x with x > g:  a' x g = (a' g) x + a' [x, g]
        const Gen x = Gen(last);
        const Monomial rest = a.with(x, -1);
        std::map<Monomial, Rational> acc;
        for (const auto& [m, c] : pbw_times_gen(rest, g))
            for (const auto& [m2, c2] : pbw_times_gen(m, x))
                acc[m2] += c * c2;
        for (const auto& [y, cy] : gen_bracket(x, g))
            for (const auto& [m, c] : pbw_times_gen(rest, y))
                acc[m] += cy * c;
        result = collect(acc);
    }
    return cache.emplace(key, std::move(result)).first->second;
}

const Expansion& pbw_product(const Monomial& a, const Monomial& b)
{
    auto& cache = caches().product;
    const std::pair<std::uint64_t, std::uint64_t> key{a.bits(), b.bits()};
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    Expansion result;
    if (auto m = a.ordered_concat(b)) {
        result.emplace_back(*m, 1);
    } else {
        // Peel the leading generator of b: a * b = (a * g) * (b / g).
        const Gen g = Gen(b.first_gen());
        const Monomial rest = b.with(g, -1);
        std::map<Monomial, Rational> acc;
        for (const auto& [m, c] : pbw_times_gen(a, g))
            for (const auto& [m2, c2] : pbw_product(m, rest))
                acc[m2] += c * c2;
        result = collect(acc);
    }
    return caches().product.emplace(key, std::move(result)).first->second;
}

void clear_pbw_cache()
{
    caches().times_gen.clear();
    caches().product.clear();
}

std::size_t pbw_cache_size()
{
    return caches().times_gen.size() + caches().product.size();
}

} // namespace parabolic
