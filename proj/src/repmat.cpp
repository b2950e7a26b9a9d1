#include "parabolic/repmat.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>

namespace parabolic {

PolyMatrix identity(int n)
{
    return PolyMatrix::Identity(n, n);
}

PolyMatrix zero_matrix(int n)
{
    return PolyMatrix::Zero(n, n);
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b)
{
    return Eigen::kroneckerProduct(a, b).eval();
}

PolyMatrix truncated(const PolyMatrix& m, int degree)
{
    return m.unaryExpr([degree](const ParamPoly& p) { return p.truncated(degree); });
}

PolyMatrix substitute(const PolyMatrix& m, const ParamValue& xi_val, const ParamValue& zeta_val)
{
    return m.unaryExpr([&](const ParamPoly& p) { return p.substitute(xi_val, zeta_val); });
}

bool is_zero(const PolyMatrix& m)
{
    return std::all_of(m.data(), m.data() + m.size(), [](const ParamPoly& p) { return p.is_zero(); });
}

PolyMatrix coefficient(const PolyMatrix& m, int xi_exp, int zeta_exp)
{
    return m.unaryExpr([&](const ParamPoly& p) { return ParamPoly(p.coeff(xi_exp, zeta_exp)); });
}

std::vector<ParamExp> support(const PolyMatrix& m)
{
    std::set<ParamExp> seen;
    for (Eigen::Index k = 0; k < m.size(); ++k)
        for (const auto& t : m.data()[k].terms())
            seen.insert(t.exp);
    return {seen.begin(), seen.end()};
}

std::string leading_entry(const PolyMatrix& m)
{
    int best = -1;
    Eigen::Index bi = 0, bj = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const ParamPoly& p = m(i, j);
            if (!p.is_zero() && (best < 0 || p.valuation() < best)) {
                best = p.valuation();
                bi = i;
                bj = j;
            }
        }
    if (best < 0)
        return "0";
    ParamPoly low;
    for (const auto& t : m(bi, bj).terms())
        if (t.exp.total() == best)
            low += ParamPoly::monomial(t.coeff, t.exp.xi, t.exp.zeta);
    return "[" + std::to_string(bi) + "," + std::to_string(bj) + "] " + to_string(low);
}

namespace {

void require_square(const PolyMatrix& m, const char* what)
{
    if (m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": matrix is not square");
}

} // namespace

PolyMatrix exp_nilpotent(const PolyMatrix& m)
{
    require_square(m, "exp_nilpotent");
    const int n = int(m.rows());
    PolyMatrix sum = identity(n);
    PolyMatrix power = identity(n);
    Rational inv_fact = 1;
    for (int k = 1; k <= n; ++k) {
        power = power * m;
        if (is_zero(power))
            return sum;
        inv_fact /= k;
        sum += power * ParamPoly(inv_fact);
    }
    throw NotNilpotentError("exp_nilpotent: argument is not nilpotent");
}

PolyMatrix log_nilpotent(const PolyMatrix& u)
{
    require_square(u, "log_nilpotent");
    const int n = int(u.rows());
    const PolyMatrix x = u - identity(n);
    PolyMatrix sum = zero_matrix(n);
    PolyMatrix power = identity(n);
    for (int k = 1; k <= n; ++k) {
        power = power * x;
        if (is_zero(power))
            return sum;
        sum += power * ParamPoly(make_rational(k % 2 == 1 ? 1 : -1, k));
    }
    throw NotNilpotentError("log_nilpotent: argument minus identity is not nilpotent");
}

nlohmann::json to_json(const PolyMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw DimensionError("matrix JSON must be a non-empty array of rows");
    const auto rows = Eigen::Index(j.size());
    const auto cols = Eigen::Index(j[0].size());
    PolyMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (Eigen::Index(j[r].size()) != cols)
            throw DimensionError("matrix JSON rows differ in length");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = parse_param_poly(j[r][c].get<std::string>());
    }
    return m;
}

// ---------------------------------------------------------------------------

namespace {

PolyMatrix unit_matrix(MatrixUnit u)
{
    PolyMatrix m = zero_matrix(3);
    m(u.row - 1, u.col - 1) = 1;
    return m;
}

PolyMatrix fundamental_image(const LieElem& x)
{
    PolyMatrix m = zero_matrix(3);
    for (const auto& [u, c] : x.coeffs())
        m(u.row - 1, u.col - 1) += ParamPoly(c);
    return m;
}

} // namespace

const RepMap& fundamental()
{
    static const RepMap rep = [] {
        RepMap r;
        r.dim = 3;
        for (int i = 0; i < kGenCount; ++i)
            r.images[std::size_t(i)] = fundamental_image(to_lie(Gen(i)));
        return r;
    }();
    return rep;
}

RepMap tensor_product(const RepMap& a, const RepMap& b)
{
    RepMap r;
    r.dim = a.dim * b.dim;
    const PolyMatrix ia = identity(a.dim);
    const PolyMatrix ib = identity(b.dim);
    for (int i = 0; i < kGenCount; ++i)
        r.images[std::size_t(i)] = kron(a(Gen(i)), ib) + kron(ia, b(Gen(i)));
    return r;
}

HomomorphismResult homomorphism_check(const RepMap& rep)
{
    HomomorphismResult result;
    for (int i = 0; i < kGenCount; ++i)
        for (int j = 0; j < kGenCount; ++j) {
            const Gen g = Gen(i), h = Gen(j);
            const PolyMatrix lhs = rep(g) * rep(h) - rep(h) * rep(g);
            PolyMatrix rhs = zero_matrix(rep.dim);
            for (const auto& [z, c] : gen_bracket(g, h))
                rhs += rep(z) * ParamPoly(c);
            ++result.pairs_checked;
            if (result.holds && lhs != rhs) {
                result.holds = false;
                result.first_failure = "[" + std::string(gen_name(g)) + "," + std::string(gen_name(h)) + "]";
            }
        }
    return result;
}

PolyMatrix evaluate(const RepMap& rep, const Monomial& m)
{
    PolyMatrix out = identity(rep.dim);
    for (int i = 0; i < kGenCount; ++i)
        for (int e = m.exponent(i); e > 0; --e)
            out = out * rep(Gen(i));
    return out;
}

namespace {

struct Entry {
    Eigen::Index row;
    Eigen::Index col;
    ParamPoly value;
};

/// Nonzero entries of a monomial image, memoized for one evaluation.
class ImageCache {
public:
    explicit ImageCache(const RepMap& rep) : rep_(rep) {}

    const std::vector<Entry>& entries(const Monomial& m)
    {
        auto it = cache_.find(m);
        if (it != cache_.end())
            return it->second;
        const PolyMatrix img = evaluate(rep_, m);
        std::vector<Entry> nz;
        for (Eigen::Index i = 0; i < img.rows(); ++i)
            for (Eigen::Index j = 0; j < img.cols(); ++j)
                if (!img(i, j).is_zero())
                    nz.push_back({i, j, img(i, j)});
        return cache_.emplace(m, std::move(nz)).first->second;
    }

    int dim() const { return rep_.dim; }

private:
    const RepMap& rep_;
    std::unordered_map<Monomial, std::vector<Entry>> cache_;
};

} // namespace

PolyMatrix evaluate(const RepMap& rep, const UElem& x)
{
    return evaluate_tensor<1>({&rep}, x);
}

PolyMatrix evaluate(const RepMap& rep, const LieElem& x)
{
    PolyMatrix out = zero_matrix(rep.dim);
    for (const auto& [g, c] : from_lie(x))
        out += rep(g) * ParamPoly(c);
    return out;
}

template <std::size_t Legs>
PolyMatrix evaluate_tensor(const std::array<const RepMap*, Legs>& reps, const Element<Legs>& x)
{
    std::vector<ImageCache> caches;
    caches.reserve(Legs);
    Eigen::Index dim = 1;
    for (const RepMap* r : reps) {
        caches.emplace_back(*r);
        dim *= r->dim;
    }

    // Collect the parameter polynomial of each leg tuple first, so every
    // Kronecker product is formed once.
    std::map<std::array<Monomial, Legs>, ParamPoly> grouped;
    for (const auto& t : x.terms())
        grouped[t.key.legs] += ParamPoly::monomial(t.coeff, t.key.params.xi, t.key.params.zeta);

    PolyMatrix out = PolyMatrix::Zero(dim, dim);
    for (const auto& [legs, poly] : grouped) {
        std::vector<Entry> acc{{0, 0, poly}};
        for (std::size_t l = 0; l < Legs; ++l) {
            const auto& nz = caches[l].entries(legs[l]);
            const int d = caches[l].dim();
            std::vector<Entry> next;
            next.reserve(acc.size() * nz.size());
            for (const auto& a : acc)
                for (const auto& b : nz)
                    next.push_back({a.row * d + b.row, a.col * d + b.col, a.value * b.value});
            acc = std::move(next);
        }
        for (auto& e : acc)
            out(e.row, e.col) += e.value;
    }
    return out;
}

template PolyMatrix evaluate_tensor<1>(const std::array<const RepMap*, 1>&, const UElem&);
template PolyMatrix evaluate_tensor<2>(const std::array<const RepMap*, 2>&, const TensorElem2&);
template PolyMatrix evaluate_tensor<3>(const std::array<const RepMap*, 3>&, const TensorElem3&);

PolyMatrix evaluate_tensor(const LieTensor<2>& t)
{
    PolyMatrix out = zero_matrix(9);
    for (const auto& [units, c] : t)
        out += kron(unit_matrix(units[0]), unit_matrix(units[1])) * ParamPoly(c);
    return out;
}

PolyMatrix flip_legs(const PolyMatrix& m, int n)
{
    if (m.rows() != n * n || m.cols() != n * n)
        throw DimensionError("flip_legs: expected a " + std::to_string(n * n) + " x " + std::to_string(n * n) + " matrix");
    PolyMatrix out(m.rows(), m.cols());
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = 0; j2 < n; ++j2)
                    out(i1 * n + i2, j1 * n + j2) = m(i2 * n + i1, j2 * n + j1);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Exponents of the three factors of the composite twist, left to right.
std::array<PolyMatrix, 3> twist_exponents(const RepMap& left, const RepMap& right, const Rational& b)
{
    const ParamPoly xi = ParamPoly::xi();
    const ParamPoly zeta = ParamPoly::zeta();
    const PolyMatrix one = identity(right.dim);
    const PolyMatrix s13 = log_nilpotent(one + right(Gen::E13) * xi);
    const PolyMatrix s32 = log_nilpotent(one + right(Gen::E32) * zeta);
    const PolyMatrix shifted = exp_nilpotent(s13 * ParamPoly(b - 1));
    const PolyMatrix h1 = left(Gen::H23p) - left(Gen::H13p) * ParamPoly(b);
    return {
        kron(left(Gen::H13p), s13 * ParamPoly(b) + s32),
        kron(left(Gen::E23), right(Gen::E12) * shifted) * (-xi),
        kron(h1, s13),
    };
}

} // namespace

PolyMatrix twist_matrix(const RepMap& left, const RepMap& right, const Rational& b)
{
    const auto x = twist_exponents(left, right, b);
    return exp_nilpotent(x[0]) * exp_nilpotent(x[1]) * exp_nilpotent(x[2]);
}

PolyMatrix twist_matrix_inverse(const RepMap& left, const RepMap& right, const Rational& b)
{
    const auto x = twist_exponents(left, right, b);
    return exp_nilpotent(-x[2]) * exp_nilpotent(-x[1]) * exp_nilpotent(-x[0]);
}

PolyMatrix r_matrix_fundamental(const ParamValue& xi, const ParamValue& zeta)
{
    const PolyMatrix F = twist_matrix(fundamental(), fundamental());
    const PolyMatrix F_inv = twist_matrix_inverse(fundamental(), fundamental());
    const PolyMatrix R = flip_legs(F) * F_inv;
    if (!xi && !zeta)
        return R;
    return substitute(R, xi, zeta);
}

namespace {

MatrixCheck compare(const PolyMatrix& lhs, const PolyMatrix& rhs)
{
    MatrixCheck c;
    c.residual = lhs - rhs;
    c.holds = is_zero(c.residual);
    return c;
}

/// Reorders the three legs of an operator on (C^3)^{(x)3}: leg k of the
/// result is leg perm[k] of the input.
PolyMatrix permute_legs3(const PolyMatrix& m, const std::array<int, 3>& perm)
{
    auto index = [&](int flat) {
        const std::array<int, 3> d{flat / 9, (flat / 3) % 3, flat % 3};
        return d[perm[0]] * 9 + d[perm[1]] * 3 + d[perm[2]];
    };
    PolyMatrix out(27, 27);
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j)
            out(i, j) = m(index(i), index(j));
    return out;
}

} // namespace

MatrixCheck qybe_check(const PolyMatrix& R)
{
    if (R.rows() != 9 || R.cols() != 9)
        throw DimensionError("qybe_check: R must be 9 x 9");
    const PolyMatrix i3 = identity(3);
    const PolyMatrix R12 = kron(R, i3);
    const PolyMatrix R23 = kron(i3, R);
    const PolyMatrix R13 = permute_legs3(R12, {0, 2, 1});
    return compare(R12 * R13 * R23, R23 * R13 * R12);
}

MatrixCheck triangularity_check(const PolyMatrix& R)
{
    if (R.rows() != 9 || R.cols() != 9)
        throw DimensionError("triangularity_check: R must be 9 x 9");
    return compare(flip_legs(R) * R, identity(9));
}

SemiclassicalResult semiclassical_check(const Rational& eta)
{
    SemiclassicalResult r;
    r.eta = eta;
    const PolyMatrix R = r_matrix_fundamental();
    const PolyMatrix ray = R.unaryExpr([&](const ParamPoly& p) { return p.along_ray(eta); });
    r.order_zero_identity = coefficient(ray, 0, 0) == identity(9);
    r.first_order = coefficient(ray, 1, 0);
    r.classical = evaluate_tensor(r_parabolic(eta).to_tensor());
    r.matches = r.first_order == r.classical;
    r.matches_negated = r.first_order == PolyMatrix(-r.classical);
    return r;
}

namespace {

LieTensor<2> tensor_of(const LieElem& a, const LieElem& b)
{
    LieTensor<2> t;
    for (const auto& [u, cu] : a.coeffs())
        for (const auto& [v, cv] : b.coeffs())
            t[{u, v}] += cu * cv;
    return t;
}

ExpansionTerm ref_term(std::string label, int xi, int zeta, Rational coeff, LieTensor<2> tensor)
{
    return {std::move(label), ParamExp{std::uint8_t(xi), std::uint8_t(zeta)}, std::move(coeff), std::move(tensor)};
}

} // namespace

std::vector<ExpansionTerm> reference_r_expansion()
{
    LieTensor<2> unit;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            unit[{MatrixUnit{std::uint8_t(i), std::uint8_t(i)}, MatrixUnit{std::uint8_t(j), std::uint8_t(j)}}] = 1;
    auto wedge = [](const LieElem& a, const LieElem& b) { return WedgeElem::wedge(a, b).to_tensor(); };

    return {
        ref_term("1 (x) 1", 0, 0, 1, unit),
        ref_term("E13^H23p", 1, 0, 1, wedge(E(1, 3), H23p())),
        ref_term("E23^E12", 1, 0, 1, wedge(E(2, 3), E(1, 2))),
        ref_term("E13 (x) E13", 2, 0, make_rational(2, 9), tensor_of(E(1, 3), E(1, 3))),
        ref_term("E32^H13p", 0, 1, 1, wedge(E(3, 2), H13p())),
        ref_term("E32 (x) E32", 0, 2, make_rational(2, 9), tensor_of(E(3, 2), E(3, 2))),
        ref_term("E12 (x) H13p", 1, 1, make_rational(1, 3), tensor_of(E(1, 2), H13p())),
        ref_term("H13p (x) E12", 1, 1, make_rational(1, 3), tensor_of(H13p(), E(1, 2))),
        ref_term("E13 (x) E32", 1, 1, make_rational(1, 9), tensor_of(E(1, 3), E(3, 2))),
        ref_term("E32 (x) E13", 1, 1, make_rational(1, 9), tensor_of(E(3, 2), E(1, 3))),
        ref_term("E12 (x) E12", 2, 2, make_rational(-2, 81), tensor_of(E(1, 2), E(1, 2))),
        ref_term("E12^E32", 1, 2, make_rational(2, 27), wedge(E(1, 2), E(3, 2))),
        ref_term("E12^E13", 2, 1, make_rational(1, 27), wedge(E(1, 2), E(1, 3))),
    };
}

PolyMatrix reference_r_matrix()
{
    PolyMatrix out = zero_matrix(9);
    for (const auto& t : reference_r_expansion())
        out += evaluate_tensor(t.tensor) * ParamPoly::monomial(t.coeff, t.params.xi, t.params.zeta);
    return out;
}

ExpansionResult expansion_check(const PolyMatrix& R, const ParamValue& xi, const ParamValue& zeta)
{
    if (R.rows() != 9 || R.cols() != 9)
        throw DimensionError("expansion_check: R must be 9 x 9");
    const PolyMatrix expected = substitute(reference_r_matrix(), xi, zeta);

    std::set<ParamExp> monomials;
    for (const auto& e : support(R))
        monomials.insert(e);
    for (const auto& e : support(expected))
        monomials.insert(e);

    ExpansionResult result;
    for (const ParamExp& e : monomials) {
        ++result.monomials_compared;
        PolyMatrix c = coefficient(R, e.xi, e.zeta);
        PolyMatrix x = coefficient(expected, e.xi, e.zeta);
        if (c != x)
            result.mismatches.push_back({e, std::move(c), std::move(x)});
    }
    return result;
}

MatrixCheck cocycle_check_fundamental(const Rational& b)
{
    const RepMap& rho = fundamental();
    const RepMap pair = tensor_product(rho, rho);
    const PolyMatrix i3 = identity(3);
    const PolyMatrix F = twist_matrix(rho, rho, b);
    const PolyMatrix lhs = kron(F, i3) * twist_matrix(pair, rho, b);
    const PolyMatrix rhs = kron(i3, F) * twist_matrix(rho, pair, b);
    return compare(lhs, rhs);
}

MatrixCheck verma_check_rep(const RepMap& rep)
{
    const PolyMatrix one = identity(rep.dim);
    const PolyMatrix s13 = log_nilpotent(one + rep(Gen::E13) * ParamPoly::xi());
    const PolyMatrix s32 = log_nilpotent(one + rep(Gen::E32) * ParamPoly::zeta());
    const PolyMatrix product = exp_nilpotent(s13) * exp_nilpotent(s32) * exp_nilpotent(s13);
    return compare(log_nilpotent(product), s13 * ParamPoly(2) + s32);
}

MatrixCheck two_route_check(const TensorElem2& F_series, const Rational& b)
{
    const int degree = F_series.truncation();
    PolyMatrix exact = twist_matrix(fundamental(), fundamental(), b);
    if (degree != kExact)
        exact = truncated(exact, degree);
    return compare(evaluate_tensor<2>(F_series), exact);
}

} // namespace parabolic
