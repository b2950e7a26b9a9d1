#pragma once

#include "parabolic/liealg.hpp"
#include "parabolic/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parabolic {

/// PBW generators of U(gl(3)) in their normal order: lowering root vectors,
/// the Cartan basis {H13p, H23p, Z}, raising root vectors. Z = E11+E22+E33
/// is central.
enum class Gen : std::uint8_t { E21, E31, E32, H13p, H23p, Z, E12, E13, E23 };

inline constexpr int kGenCount = 9;

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);

/// Image of a PBW generator in gl(3).
const LieElem& to_lie(Gen g);

/// Coordinates of a Lie element in the PBW generator basis.
std::vector<std::pair<Gen, Rational>> from_lie(const LieElem& x);

/// Structure constants in the PBW generator basis: [g, h] as a combination of generators.
const std::vector<std::pair<Gen, Rational>>& gen_bracket(Gen g, Gen h);

/// Ordered PBW monomial g_0^{e_0} ... g_8^{e_8}, packed seven bits per exponent.
/// Generator 0 occupies the most significant slot, so integer order is
/// lexicographic order on exponent vectors.
class Monomial {
public:
    static constexpr int kBits = 7;
    static constexpr int kMaxExponent = (1 << kBits) - 1;

    constexpr Monomial() = default;
    static Monomial generator(Gen g, int power = 1);
    static Monomial from_exponents(const std::array<int, kGenCount>& e);

    int exponent(int i) const { return int((bits_ >> shift(i)) & kMaxExponent); }
    int exponent(Gen g) const { return exponent(int(g)); }
    std::array<int, kGenCount> exponents() const;

    bool is_one() const { return bits_ == 0; }
    int length() const;
    /// Index of the smallest/largest generator present; -1 for the unit.
    int first_gen() const;
    int last_gen() const;

    /// Multiplies the exponent of g by adding delta. Throws on overflow or negative result.
    Monomial with(Gen g, int delta) const;

    /// Product when every generator of *this precedes every generator of o.
    std::optional<Monomial> ordered_concat(const Monomial& o) const;

    std::uint64_t bits() const { return bits_; }

    constexpr auto operator<=>(const Monomial&) const = default;

private:
    static constexpr int shift(int i) { return (kGenCount - 1 - i) * kBits; }

    std::uint64_t bits_ = 0;
};

/// "E12^2*H13p" style, "1" for the unit.
std::string to_string(const Monomial& m);

/// Normal-ordered linear combination of monomials with rational coefficients.
using Expansion = std::vector<std::pair<Monomial, Rational>>;

/// Product of two PBW monomials in normal form. Memoized per thread; the
/// returned reference stays valid until clear_pbw_cache() on the same thread.
const Expansion& pbw_product(const Monomial& a, const Monomial& b);

/// Product of a monomial with one generator on the right.
const Expansion& pbw_times_gen(const Monomial& a, Gen g);

/// Drops the thread-local product caches.
void clear_pbw_cache();

/// Number of cached monomial products on this thread.
std::size_t pbw_cache_size();

} // namespace parabolic

template <>
struct std::hash<parabolic::Monomial> {
    std::size_t operator()(const parabolic::Monomial& m) const noexcept
    {
        std::uint64_t x = m.bits() * 0x9E3779B97F4A7C15ull;
        return std::size_t(x ^ (x >> 31));
    }
};
