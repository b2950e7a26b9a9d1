#pragma once

#include "parabolic/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parabolic {

/// Matrix unit E_ij of gl(3), 1 <= i,j <= 3.
///
/// Units are totally ordered lowering < Cartan < raising:
/// E21 < E31 < E32 < E11 < E22 < E33 < E12 < E13 < E23.
struct MatrixUnit {
    std::uint8_t row = 1;
    std::uint8_t col = 1;

    /// Position in the fixed total order, 0..8.
    int rank() const;

    std::strong_ordering operator<=>(const MatrixUnit& o) const { return rank() <=> o.rank(); }
    bool operator==(const MatrixUnit&) const = default;
};

/// All nine matrix units in their fixed order.
const std::array<MatrixUnit, 9>& matrix_units();

/// "E12" etc.
std::string to_string(MatrixUnit u);

/// Element of gl(3) in the matrix-unit basis. Never stores zero coefficients.
class LieElem {
public:
    LieElem() = default;
    LieElem(MatrixUnit u, const Rational& c = 1);

    const std::map<MatrixUnit, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(MatrixUnit u) const;
    bool is_zero() const { return coeffs_.empty(); }

    LieElem operator-() const;
    LieElem& operator+=(const LieElem& o);
    LieElem& operator-=(const LieElem& o);
    LieElem& operator*=(const Rational& c);

    friend LieElem operator+(LieElem a, const LieElem& b) { return a += b; }
    friend LieElem operator-(LieElem a, const LieElem& b) { return a -= b; }
    friend LieElem operator*(const Rational& c, LieElem a) { return a *= c; }
    friend bool operator==(const LieElem&, const LieElem&) = default;

private:
    void add(MatrixUnit u, const Rational& c);

    std::map<MatrixUnit, Rational> coeffs_;
};

std::string to_string(const LieElem& x);

inline LieElem E(int i, int j) { return LieElem(MatrixUnit{std::uint8_t(i), std::uint8_t(j)}); }

// Distinguished Cartan elements.
LieElem H13p();          ///< (1/3)E11 - (2/3)E22 + (1/3)E33
LieElem H23p();          ///< (2/3)E11 - (1/3)E22 - (1/3)E33
LieElem H23();           ///< E22 - E33
LieElem central_unit();  ///< E11 + E22 + E33

/// [E_ij, E_kl] = delta_jk E_il - delta_il E_kj, extended bilinearly.
LieElem bracket(const LieElem& a, const LieElem& b);

/// Generators of the parabolic subalgebra: H13p, H23p, E12, E13, E23, E32.
std::vector<LieElem> parabolic_basis();

/// Membership in the span of parabolic_basis().
bool in_parabolic_span(const LieElem& x);

/// Tensor with N legs of gl(3): coefficients on tuples of matrix units.
template <std::size_t N>
using LieTensor = std::map<std::array<MatrixUnit, N>, Rational>;

/// Skew element of Lambda^2(gl(3)); a^b stands for a(x)b - b(x)a.
/// Stored on ordered pairs (u < v) with the sign absorbed.
class WedgeElem {
public:
    WedgeElem() = default;

    static WedgeElem wedge(const LieElem& a, const LieElem& b);

    const std::map<std::array<MatrixUnit, 2>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Expansion as a full two-leg tensor.
    LieTensor<2> to_tensor() const;

    WedgeElem& operator+=(const WedgeElem& o);
    WedgeElem& operator*=(const Rational& c);
    friend WedgeElem operator+(WedgeElem a, const WedgeElem& b) { return a += b; }
    friend WedgeElem operator*(const Rational& c, WedgeElem a) { return a *= c; }
    friend bool operator==(const WedgeElem&, const WedgeElem&) = default;

private:
    void add(MatrixUnit u, MatrixUnit v, const Rational& c);

    std::map<std::array<MatrixUnit, 2>, Rational> terms_;
};

/// Exchanges the two legs.
LieTensor<2> swap_legs(const LieTensor<2>& t);

/// r(eta) = H23p^E13 + E12^E23 + eta H13p^E32.
WedgeElem r_parabolic(const Rational& eta);

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]; zero iff r solves the CYBE.
LieTensor<3> cybe_bracket(const WedgeElem& r);

} // namespace parabolic
