#pragma once

#include "parabolic/repmat.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace parabolic {

/// Syntax tree of an algebra expression such as "exp(H13p (x) sigma32(zeta))".
///
/// Precedence from loosest to tightest: binary + and -, the tensor
/// separator "(x)", *, unary -, ^ with an integer exponent.
struct Expr {
    enum class Op { Number, Symbol, Neg, Add, Sub, Mul, Tensor, Pow, Call };

    Op op = Op::Number;
    Rational value;         // Number
    std::string name;       // Symbol, Call
    int exponent = 0;       // Pow
    std::vector<Expr> args; // operands, left to right
    std::size_t position = 0;

    /// Structural equality; source positions are ignored.
    friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws ParseError, or UnknownSymbolError for identifiers outside the vocabulary.
Expr parse(std::string_view text);

/// Canonical text with the fewest parentheses; parse(print(e)) == e.
std::string print(const Expr& e);

using SymbolicValue = std::variant<UElem, TensorElem2, TensorElem3>;

/// Evaluates in U(gl(3))^{(x)k} with every series truncated at the given degree.
SymbolicValue evaluate_symbolic(const Expr& e, int degree);

std::string to_string(const SymbolicValue& v);

struct MatrixValue {
    int legs = 1;
    PolyMatrix matrix;
};

/// Evaluates exactly in the fundamental representation; exp, log and negative
/// powers require unipotent or nilpotent arguments.
MatrixValue evaluate_matrix(const Expr& e);

} // namespace parabolic
