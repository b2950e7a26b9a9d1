#include "parabolic/expr.hpp"

#include <cctype>
#include <optional>

namespace parabolic {

bool operator==(const Expr& a, const Expr& b)
{
    return a.op == b.op && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
}

namespace {

constexpr std::string_view kFunctions[] = {"exp", "log", "sigma13", "sigma32"};

bool is_function(std::string_view name)
{
    for (auto f : kFunctions)
        if (f == name)
            return true;
    return false;
}

std::optional<LieElem> lie_symbol(std::string_view name)
{
    if (name.size() == 3 && name[0] == 'E' && name[1] >= '1' && name[1] <= '3' && name[2] >= '1' && name[2] <= '3')
        return E(name[1] - '0', name[2] - '0');
    if (name == "H13p")
        return H13p();
    if (name == "H23p")
        return H23p();
    if (name == "H23")
        return H23();
    if (name == "Z")
        return central_unit();
    return std::nullopt;
}

bool is_param(std::string_view name)
{
    return name == "xi" || name == "zeta";
}

// ---------------------------------------------------------------------------

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Tensor, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t position;
};

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
            }
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (s.substr(i, 3) == "(x)") {
            out.push_back({Tok::Tensor, "(x)", start});
            i += 3;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse_all()
    {
        Expr e = sum();
        if (peek().kind != Tok::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().position);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    bool accept(Tok k)
    {
        if (peek().kind != k)
            return false;
        ++pos_;
        return true;
    }

    void expect(Tok k, const char* what)
    {
        if (!accept(k))
            throw ParseError(std::string("expected ") + what, peek().position);
    }

    static Expr binary(Expr::Op op, Expr a, Expr b, std::size_t position)
    {
        Expr e;
        e.op = op;
        e.position = position;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    Expr sum()
    {
        Expr e = tensor();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& t = next();
            e = binary(t.kind == Tok::Plus ? Expr::Op::Add : Expr::Op::Sub, std::move(e), tensor(), t.position);
        }
        return e;
    }

    Expr tensor()
    {
        Expr e = product();
        while (peek().kind == Tok::Tensor) {
            const std::size_t p = next().position;
            e = binary(Expr::Op::Tensor, std::move(e), product(), p);
        }
        return e;
    }

    Expr product()
    {
        Expr e = unary();
        while (peek().kind == Tok::Star) {
            const std::size_t p = next().position;
            e = binary(Expr::Op::Mul, std::move(e), unary(), p);
        }
        return e;
    }

    Expr unary()
    {
        if (peek().kind == Tok::Minus) {
            Expr e;
            e.op = Expr::Op::Neg;
            e.position = next().position;
            e.args.push_back(unary());
            return e;
        }
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        if (peek().kind != Tok::Caret)
            return base;
        const std::size_t p = next().position;
        const bool negative = accept(Tok::Minus);
        if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos)
            throw ParseError("expected an integer exponent", peek().position);
        const Token& n = next();
        Expr e;
        e.op = Expr::Op::Pow;
        e.position = p;
        try {
            e.exponent = std::stoi(n.text);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", n.position);
        }
        if (negative)
            e.exponent = -e.exponent;
        e.args.push_back(std::move(base));
        return e;
    }

    Expr primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number: {
            next();
            Expr e;
            e.op = Expr::Op::Number;
            e.position = t.position;
            e.value = parse_rational(t.text);
            return e;
        }
        case Tok::Ident: {
            next();
            Expr e;
            e.position = t.position;
            e.name = t.text;
            if (is_function(t.text)) {
                e.op = Expr::Op::Call;
                expect(Tok::LParen, "'(' after function name");
                e.args.push_back(sum());
                expect(Tok::RParen, "')'");
                return e;
            }
            if (!lie_symbol(t.text) && !is_param(t.text))
                throw UnknownSymbolError(t.text, t.position);
            e.op = Expr::Op::Symbol;
            return e;
        }
        case Tok::LParen: {
            next();
            Expr e = sum();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::End:
            throw ParseError("unexpected end of input", t.position);
        default:
            throw ParseError("unexpected '" + t.text + "'", t.position);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------

int precedence(const Expr& e)
{
    switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::Sub:
        return 1;
    case Expr::Op::Tensor:
        return 2;
    case Expr::Op::Mul:
        return 3;
    case Expr::Op::Neg:
        return 4;
    case Expr::Op::Pow:
        return 5;
    default:
        return 6;
    }
}

void print_to(std::string& out, const Expr& e, int min_prec)
{
    const bool paren = precedence(e) < min_prec;
    if (paren)
        out += "(";
    switch (e.op) {
    case Expr::Op::Number:
        out += to_string(e.value);
        break;
    case Expr::Op::Symbol:
        out += e.name;
        break;
    case Expr::Op::Call:
        out += e.name + "(";
        print_to(out, e.args[0], 0);
        out += ")";
        break;
    case Expr::Op::Neg:
        out += "-";
        print_to(out, e.args[0], 4);
        break;
    case Expr::Op::Pow:
        print_to(out, e.args[0], 6);
        out += "^" + std::to_string(e.exponent);
        break;
    case Expr::Op::Add:
    case Expr::Op::Sub:
    case Expr::Op::Mul:
    case Expr::Op::Tensor: {
        const int p = precedence(e);
        const char* sep = e.op == Expr::Op::Add ? " + " : e.op == Expr::Op::Sub ? " - " : e.op == Expr::Op::Mul ? "*" : " (x) ";
        print_to(out, e.args[0], p);
        out += sep;
        print_to(out, e.args[1], p + 1);
        break;
    }
    }
    if (paren)
        out += ")";
}

} // namespace

Expr parse(std::string_view text)
{
    return Parser(lex(text)).parse_all();
}

std::string print(const Expr& e)
{
    std::string out;
    print_to(out, e, 0);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

template <std::size_t Legs>
std::optional<ParamPoly> as_scalar(const Element<Legs>& x)
{
    for (const auto& t : x.terms())
        for (const auto& m : t.key.legs)
            if (!m.is_one())
                return std::nullopt;
    return x.coefficient({});
}

std::size_t legs_of(const SymbolicValue& v)
{
    return v.index() + 1;
}

std::optional<ParamPoly> scalar_of(const SymbolicValue& v)
{
    return std::visit([](const auto& x) { return as_scalar(x); }, v);
}

/// Brings a pure scalar to the requested number of legs.
SymbolicValue lift(const SymbolicValue& v, std::size_t legs, int degree)
{
    if (legs_of(v) == legs)
        return v;
    const auto s = scalar_of(v);
    if (!s)
        throw AlgebraError("operands have different numbers of tensor legs");
    switch (legs) {
    case 1: return UElem::scalar(*s, degree);
    case 2: return TensorElem2::scalar(*s, degree);
    default: return TensorElem3::scalar(*s, degree);
    }
}

template <typename F>
SymbolicValue combine_same(const SymbolicValue& a, const SymbolicValue& b, int degree, F f)
{
    const std::size_t legs = std::max(legs_of(a), legs_of(b));
    const SymbolicValue la = lift(a, legs, degree);
    const SymbolicValue lb = lift(b, legs, degree);
    return std::visit(
        [&](const auto& x) -> SymbolicValue {
            using T = std::decay_t<decltype(x)>;
            return f(x, std::get<T>(lb));
        },
        la);
}

template <std::size_t A, std::size_t B>
SymbolicValue tensor_value(const Element<A>& a, const Element<B>& b)
{
    if constexpr (A + B <= 3)
        return tensor(a, b);
    else
        throw DimensionError("more than three tensor legs");
}

template <std::size_t Legs>
Element<Legs> power_of(const Element<Legs>& x, int n)
{
    if (n < 0)
        return power_of(invert(x), -n);
    Element<Legs> out = Element<Legs>::one(x.truncation());
    for (int i = 0; i < n; ++i)
        out = out * x;
    return out;
}

SymbolicValue eval_sym(const Expr& e, int degree)
{
    using Op = Expr::Op;
    switch (e.op) {
    case Op::Number:
        return UElem::scalar(ParamPoly(e.value), degree);
    case Op::Symbol:
        if (e.name == "xi")
            return UElem::scalar(ParamPoly::xi(), degree);
        if (e.name == "zeta")
            return UElem::scalar(ParamPoly::zeta(), degree);
        return to_u(*lie_symbol(e.name), degree);
    case Op::Neg:
        return std::visit([](const auto& x) -> SymbolicValue { return -x; }, eval_sym(e.args[0], degree));
    case Op::Add:
        return combine_same(eval_sym(e.args[0], degree), eval_sym(e.args[1], degree), degree,
                            [](const auto& x, const auto& y) { return x + y; });
    case Op::Sub:
        return combine_same(eval_sym(e.args[0], degree), eval_sym(e.args[1], degree), degree,
                            [](const auto& x, const auto& y) { return x - y; });
    case Op::Mul:
        return combine_same(eval_sym(e.args[0], degree), eval_sym(e.args[1], degree), degree,
                            [](const auto& x, const auto& y) { return x * y; });
    case Op::Tensor: {
        const SymbolicValue a = eval_sym(e.args[0], degree);
        const SymbolicValue b = eval_sym(e.args[1], degree);
        return std::visit([](const auto& x, const auto& y) { return tensor_value(x, y); }, a, b);
    }
    case Op::Pow:
        return std::visit([&](const auto& x) -> SymbolicValue { return power_of(x, e.exponent); },
                          eval_sym(e.args[0], degree));
    case Op::Call: {
        const SymbolicValue arg = eval_sym(e.args[0], degree);
        if (e.name == "exp")
            return std::visit([](const auto& x) -> SymbolicValue { return exp_series(x); }, arg);
        if (e.name == "log")
            return std::visit([](const auto& x) -> SymbolicValue { return log_series(x); }, arg);
        const auto p = scalar_of(arg);
        if (!p)
            throw AlgebraError(e.name + " expects a parameter argument");
        return sigma(e.name == "sigma13" ? Gen::E13 : Gen::E32, *p, degree);
    }
    }
    throw AlgebraError("malformed expression");
}

// ---------------------------------------------------------------------------

int dim_of(int legs)
{
    int d = 1;
    for (int i = 0; i < legs; ++i)
        d *= 3;
    return d;
}

std::optional<ParamPoly> matrix_scalar(const MatrixValue& v)
{
    const ParamPoly& c = v.matrix(0, 0);
    for (Eigen::Index i = 0; i < v.matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < v.matrix.cols(); ++j)
            if (v.matrix(i, j) != (i == j ? c : ParamPoly()))
                return std::nullopt;
    return c;
}

MatrixValue lift(const MatrixValue& v, int legs)
{
    if (v.legs == legs)
        return v;
    const auto s = matrix_scalar(v);
    if (!s)
        throw AlgebraError("operands have different numbers of tensor legs");
    return {legs, identity(dim_of(legs)) * *s};
}

template <typename F>
MatrixValue combine_same(const MatrixValue& a, const MatrixValue& b, F f)
{
    const int legs = std::max(a.legs, b.legs);
    return {legs, f(lift(a, legs).matrix, lift(b, legs).matrix)};
}

/// Inverse of 1 + N for nilpotent N: the finite sum of (-N)^k.
PolyMatrix unipotent_inverse(const PolyMatrix& u)
{
    const int n = int(u.rows());
    const PolyMatrix minus_n = identity(n) - u;
    PolyMatrix sum = identity(n);
    PolyMatrix power = identity(n);
    for (int k = 1; k <= n; ++k) {
        power = power * minus_n;
        if (is_zero(power))
            return sum;
        sum += power;
    }
    throw NotNilpotentError("only unipotent matrices can be inverted exactly");
}

MatrixValue eval_mat(const Expr& e)
{
    using Op = Expr::Op;
    switch (e.op) {
    case Op::Number:
        return {1, identity(3) * ParamPoly(e.value)};
    case Op::Symbol:
        if (e.name == "xi")
            return {1, identity(3) * ParamPoly::xi()};
        if (e.name == "zeta")
            return {1, identity(3) * ParamPoly::zeta()};
        return {1, evaluate(fundamental(), *lie_symbol(e.name))};
    case Op::Neg: {
        MatrixValue v = eval_mat(e.args[0]);
        v.matrix = -v.matrix;
        return v;
    }
    case Op::Add:
        return combine_same(eval_mat(e.args[0]), eval_mat(e.args[1]),
                            [](const PolyMatrix& x, const PolyMatrix& y) -> PolyMatrix { return x + y; });
    case Op::Sub:
        return combine_same(eval_mat(e.args[0]), eval_mat(e.args[1]),
                            [](const PolyMatrix& x, const PolyMatrix& y) -> PolyMatrix { return x - y; });
    case Op::Mul:
        return combine_same(eval_mat(e.args[0]), eval_mat(e.args[1]),
                            [](const PolyMatrix& x, const PolyMatrix& y) -> PolyMatrix { return x * y; });
    case Op::Tensor: {
        const MatrixValue a = eval_mat(e.args[0]);
        const MatrixValue b = eval_mat(e.args[1]);
        if (a.legs + b.legs > 3)
            throw DimensionError("more than three tensor legs");
        return {a.legs + b.legs, kron(a.matrix, b.matrix)};
    }
    case Op::Pow: {
        MatrixValue v = eval_mat(e.args[0]);
        PolyMatrix base = e.exponent < 0 ? unipotent_inverse(v.matrix) : v.matrix;
        PolyMatrix out = identity(int(base.rows()));
        for (int i = 0; i < std::abs(e.exponent); ++i)
            out = out * base;
        return {v.legs, out};
    }
    case Op::Call: {
        MatrixValue v = eval_mat(e.args[0]);
        if (e.name == "exp")
            return {v.legs, exp_nilpotent(v.matrix)};
        if (e.name == "log")
            return {v.legs, log_nilpotent(v.matrix)};
        const auto p = matrix_scalar(v);
        if (v.legs != 1 || !p)
            throw AlgebraError(e.name + " expects a parameter argument");
        const Gen g = e.name == "sigma13" ? Gen::E13 : Gen::E32;
        return {1, log_nilpotent(identity(3) + fundamental()(g) * *p)};
    }
    }
    throw AlgebraError("malformed expression");
}

} // namespace

SymbolicValue evaluate_symbolic(const Expr& e, int degree)
{
    return eval_sym(e, degree);
}

std::string to_string(const SymbolicValue& v)
{
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

MatrixValue evaluate_matrix(const Expr& e)
{
    return eval_mat(e);
}

} // namespace parabolic
