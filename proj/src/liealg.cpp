#include "parabolic/liealg.hpp"

#include <algorithm>

namespace parabolic {

namespace {

// Rank table indexed by (row-1)*3 + (col-1).
constexpr std::array<int, 9> kRank = {
    3, 6, 7, // E11 E12 E13
    0, 4, 8, // E21 E22 E23
    1, 2, 5, // E31 E32 E33
};

template <std::size_t N>
void accumulate(LieTensor<N>& t, const std::array<MatrixUnit, N>& key, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = t.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

} // namespace

int MatrixUnit::rank() const
{
    return kRank[(row - 1) * 3 + (col - 1)];
}

const std::array<MatrixUnit, 9>& matrix_units()
{
    static const std::array<MatrixUnit, 9> units = [] {
        std::array<MatrixUnit, 9> u{};
        for (std::uint8_t i = 1; i <= 3; ++i)
            for (std::uint8_t j = 1; j <= 3; ++j) {
                MatrixUnit m{i, j};
                u[m.rank()] = m;
            }
        return u;
    }();
    return units;
}

std::string to_string(MatrixUnit u)
{
    return "E" + std::to_string(u.row) + std::to_string(u.col);
}

LieElem::LieElem(MatrixUnit u, const Rational& c)
{
    add(u, c);
}

void LieElem::add(MatrixUnit u, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

Rational LieElem::coeff(MatrixUnit u) const
{
    auto it = coeffs_.find(u);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

LieElem LieElem::operator-() const
{
    LieElem r = *this;
    for (auto& [u, c] : r.coeffs_)
        c = -c;
    return r;
}

LieElem& LieElem::operator+=(const LieElem& o)
{
    for (const auto& [u, c] : o.coeffs_)
        add(u, c);
    return *this;
}

LieElem& LieElem::operator-=(const LieElem& o)
{
    for (const auto& [u, c] : o.coeffs_)
        add(u, -c);
    return *this;
}

LieElem& LieElem::operator*=(const Rational& c)
{
    if (c == 0)
        coeffs_.clear();
    for (auto& [u, v] : coeffs_)
        v *= c;
    return *this;
}

std::string to_string(const LieElem& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [u, c] : x.coeffs()) {
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Rational mag = abs(c);
        if (mag != 1)
            out += to_string(mag) + "*";
        out += to_string(u);
    }
    return out;
}

LieElem H13p()
{
    return make_rational(1, 3) * E(1, 1) - make_rational(2, 3) * E(2, 2) + make_rational(1, 3) * E(3, 3);
}

LieElem H23p()
{
    return make_rational(2, 3) * E(1, 1) - make_rational(1, 3) * E(2, 2) - make_rational(1, 3) * E(3, 3);
}

LieElem H23()
{
    return E(2, 2) - E(3, 3);
}

LieElem central_unit()
{
    return E(1, 1) + E(2, 2) + E(3, 3);
}

LieElem bracket(const LieElem& a, const LieElem& b)
{
    LieElem r;
    for (const auto& [u, cu] : a.coeffs())
        for (const auto& [v, cv] : b.coeffs()) {
            Rational c = cu * cv;
            if (u.col == v.row)
                r += LieElem(MatrixUnit{u.row, v.col}, c);
            if (u.row == v.col)
                r -= LieElem(MatrixUnit{v.row, u.col}, c);
        }
    return r;
}

std::vector<LieElem> parabolic_basis()
{
    return {H13p(), H23p(), E(1, 2), E(1, 3), E(2, 3), E(3, 2)};
}

bool in_parabolic_span(const LieElem& x)
{
    Rational trace = 0;
    for (const auto& [u, c] : x.coeffs()) {
        if (u.row == u.col) {
            trace += c;
            continue;
        }
        bool allowed = (u.row == 1 && u.col == 2) || (u.row == 1 && u.col == 3) || (u.row == 2 && u.col == 3)
                       || (u.row == 3 && u.col == 2);
        if (!allowed)
            return false;
    }
    return trace == 0;
}

void WedgeElem::add(MatrixUnit u, MatrixUnit v, const Rational& c)
{
    if (u == v || c == 0)
        return;
    Rational s = c;
    if (v < u) {
        std::swap(u, v);
        s = -s;
    }
    std::array<MatrixUnit, 2> key{u, v};
    auto [it, inserted] = terms_.try_emplace(key, s);
    if (!inserted) {
        it->second += s;
        if (it->second == 0)
            terms_.erase(it);
    }
}

WedgeElem WedgeElem::wedge(const LieElem& a, const LieElem& b)
{
    WedgeElem w;
    for (const auto& [u, cu] : a.coeffs())
        for (const auto& [v, cv] : b.coeffs())
            w.add(u, v, cu * cv);
    return w;
}

LieTensor<2> WedgeElem::to_tensor() const
{
    LieTensor<2> t;
    for (const auto& [key, c] : terms_) {
        accumulate(t, key, c);
        accumulate(t, {key[1], key[0]}, -c);
    }
    return t;
}

WedgeElem& WedgeElem::operator+=(const WedgeElem& o)
{
    for (const auto& [key, c] : o.terms_)
        add(key[0], key[1], c);
    return *this;
}

WedgeElem& WedgeElem::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [key, v] : terms_)
        v *= c;
    return *this;
}

LieTensor<2> swap_legs(const LieTensor<2>& t)
{
    LieTensor<2> s;
    for (const auto& [key, c] : t)
        s.emplace(std::array<MatrixUnit, 2>{key[1], key[0]}, c);
    return s;
}

WedgeElem r_parabolic(const Rational& eta)
{
    return WedgeElem::wedge(H23p(), E(1, 3)) + WedgeElem::wedge(E(1, 2), E(2, 3))
           + eta * WedgeElem::wedge(H13p(), E(3, 2));
}

LieTensor<3> cybe_bracket(const WedgeElem& r)
{
    const LieTensor<2> t = r.to_tensor();
    LieTensor<3> out;
    for (const auto& [p, cp] : t)
        for (const auto& [q, cq] : t) {
            const Rational c = cp * cq;
            const LieElem a(p[0]), b(p[1]), a2(q[0]), b2(q[1]);
            const LieElem x12_13 = bracket(a, a2);
            const LieElem x12_23 = bracket(b, a2);
            const LieElem x13_23 = bracket(b, b2);
            for (const auto& [u, cu] : x12_13.coeffs())
                accumulate(out, {u, p[1], q[1]}, c * cu);
            for (const auto& [u, cu] : x12_23.coeffs())
                accumulate(out, {p[0], u, q[1]}, c * cu);
            for (const auto& [u, cu] : x13_23.coeffs())
                accumulate(out, {p[0], q[0], u}, c * cu);
        }
    return out;
}

} // namespace parabolic
