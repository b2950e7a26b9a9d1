#pragma once

#include "parabolic/element.hpp"
#include "parabolic/liealg.hpp"

#include <span>
#include <string>

namespace parabolic {

/// Default truncation degree for symbolic identity checks.
inline constexpr int kDefaultDegree = 6;

/// The generator g as an element of U.
UElem gen(Gen g, int truncation = kExact);

/// A Lie element embedded in U.
UElem to_u(const LieElem& x, int truncation = kExact);

/// Rewriting order for straighten(): which adjacent out-of-order pair is swapped first.
enum class SwapStrategy { Leftmost, Rightmost };

/// Normal form of coeff * w_1 w_2 ... w_n by repeated adjacent swaps
/// x y -> y x + [x, y]. Independent of the memoized product used by
/// operator*; the result does not depend on the strategy.
UElem straighten(std::span<const Gen> word, const ParamPoly& coeff = 1, SwapStrategy strategy = SwapStrategy::Leftmost);

/// Product of a word of matrix units, each expanded in the PBW generator basis.
UElem straighten(std::span<const MatrixUnit> word, const ParamPoly& coeff = 1,
                 SwapStrategy strategy = SwapStrategy::Leftmost);

/// sigma_g(p) = log(1 + p g), truncated at the given degree.
UElem sigma(Gen g, const ParamPoly& p, int truncation);

/// Evaluates parameters in the coefficients; std::nullopt keeps a parameter formal.
template <std::size_t Legs>
Element<Legs> substitute_params(const Element<Legs>& x, const ParamValue& xi_val, const ParamValue& zeta_val)
{
    return x.substitute(xi_val, zeta_val);
}

/// Commutator a b - b a.
template <std::size_t Legs>
Element<Legs> commutator(const Element<Legs>& a, const Element<Legs>& b)
{
    return a * b - b * a;
}

/// Expression-language form, e.g. "xi*E12*E23 - E13" or "xi*E23 (x) E12".
std::string to_string(const UElem& x);
std::string to_string(const TensorElem2& x);
std::string to_string(const TensorElem3& x);

/// Formats a single term (coefficient times leg monomials).
template <std::size_t Legs>
std::string term_to_string(const typename Element<Legs>::Term& t);

} // namespace parabolic
