#include "io/expression.hpp"

#include <cctype>

namespace nilcert {

namespace {

enum class Tok { Int, T, I, Basis, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t column;
    std::string text;   // digits for Int
    std::size_t index;  // k for Basis
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t p = 0;
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (p < s.size()) {
        const char c = s[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        const std::size_t start = p;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            out.push_back({Tok::Int, start, std::string(s.substr(start, p - start)), 0});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (p < s.size() && ident_char(s[p])) ++p;
            std::string_view word = s.substr(start, p - start);
            if (word == "t") {
                out.push_back({Tok::T, start, {}, 0});
            } else if (word == "i") {
                out.push_back({Tok::I, start, {}, 0});
            } else if (word == "sqrt") {
                out.push_back({Tok::Sqrt, start, {}, 0});
            } else if (word.size() > 2 && word.substr(0, 2) == "e_" &&
                       word.find_first_not_of("0123456789", 2) == std::string_view::npos) {
                std::size_t k = 0;
                for (char d : word.substr(2)) {
                    k = k * 10 + static_cast<std::size_t>(d - '0');
                    if (k > 1000000) throw SyntaxError("basis index too large", start);
                }
                out.push_back({Tok::Basis, start, {}, k});
            } else {
                throw SyntaxError("unknown identifier '" + std::string(word) + "'", start);
            }
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, start, {}, 0});
        ++p;
    }
    out.push_back({Tok::End, s.size(), {}, 0});
    return out;
}

// Either a scalar or a vector (scalar * e_k sums).
struct Value {
    bool is_vector = false;
    TowerElement scalar;
    LinearCombination vec;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t dim) : toks_(tokenize(text)), dim_(dim) {}

    Value parse_all() {
        Value v = expr();
        if (peek().kind != Tok::End) throw SyntaxError("unexpected trailing input", peek().column);
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) throw SyntaxError(std::string("expected ") + what, peek().column);
        ++pos_;
    }

    Value expr() {
        Value acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = next();
            Value rhs = term();
            acc = combine_add(std::move(acc), std::move(rhs), op.kind == Tok::Minus, op.column);
        }
        return acc;
    }

    static bool starts_juxtaposed(Tok k) {
        return k == Tok::T || k == Tok::I || k == Tok::Basis || k == Tok::Sqrt || k == Tok::LParen;
    }

    Value term() {
        Value acc = unary();
        while (true) {
            const Tok k = peek().kind;
            const std::size_t col = peek().column;
            if (k == Tok::Star) {
                ++pos_;
                acc = combine_mul(std::move(acc), unary(), col);
            } else if (k == Tok::Slash) {
                ++pos_;
                Value rhs = unary();
                if (rhs.is_vector) throw SyntaxError("division by a vector", col);
                if (rhs.scalar.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at column " + std::to_string(col));
                acc = combine_mul(std::move(acc), scalar(rhs.scalar.inverse()), col);
            } else if (starts_juxtaposed(k)) {
                acc = combine_mul(std::move(acc), unary(), col);
            } else {
                return acc;
            }
        }
    }

    Value unary() {
        if (peek().kind == Tok::Minus) {
            ++pos_;
            return negate(unary());
        }
        if (peek().kind == Tok::Plus) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = atom();
        if (peek().kind != Tok::Caret) return base;
        const std::size_t col = next().column;
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            ++pos_;
            negative = true;
        }
        if (peek().kind != Tok::Int) throw SyntaxError("expected an integer exponent", peek().column);
        const Token& e = next();
        if (e.text.size() > 6) throw SyntaxError("exponent too large", e.column);
        long n = std::stol(e.text);
        if (base.is_vector) throw SyntaxError("power of a vector", col);
        if (negative && base.scalar.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return scalar(pow(base.scalar, negative ? -n : n));
    }

    Value atom() {
        const Token& tok = next();
        switch (tok.kind) {
            case Tok::Int:
                return scalar(TowerElement(RationalFunction(GaussianRational(Rational::from_string(tok.text)))));
            case Tok::T:
                return scalar(TowerElement(RationalFunction::t()));
            case Tok::I:
                return scalar(TowerElement(RationalFunction(GaussianRational::i())));
            case Tok::Basis: {
                if (dim_ == 0) throw SyntaxError("basis vectors are not allowed here", tok.column);
                if (tok.index < 1 || tok.index > dim_)
                    throw SyntaxError("basis index e_" + std::to_string(tok.index) + " out of range 1.." + std::to_string(dim_), tok.column);
                Value v;
                v.is_vector = true;
                v.vec.assign(dim_, TowerElement());
                v.vec[tok.index - 1] = TowerElement(1);
                return v;
            }
            case Tok::Sqrt: {
                expect(Tok::LParen, "'(' after sqrt");
                Value arg = expr();
                expect(Tok::RParen, "')'");
                if (arg.is_vector) throw SyntaxError("square root of a vector", tok.column);
                if (arg.scalar.has_radical()) throw Error(ErrorKind::MultipleRadicals, "nested square roots are not supported");
                return scalar(TowerElement::sqrt_of(arg.scalar.base()));
            }
            case Tok::LParen: {
                Value v = expr();
                expect(Tok::RParen, "')'");
                return v;
            }
            case Tok::End:
                throw SyntaxError("unexpected end of input", tok.column);
            default:
                throw SyntaxError("unexpected token", tok.column);
        }
    }

    static Value scalar(TowerElement x) {
        Value v;
        v.scalar = std::move(x);
        return v;
    }

    static Value negate(Value v) {
        if (!v.is_vector) return scalar(-v.scalar);
        for (auto& x : v.vec) x = -x;
        return v;
    }

    Value as_vector(Value v, std::size_t col) const {
        if (v.is_vector) return v;
        if (!v.scalar.is_zero()) throw SyntaxError("cannot add a nonzero scalar to a vector", col);
        v.is_vector = true;
        v.vec.assign(dim_, TowerElement());
        return v;
    }

    Value combine_add(Value a, Value b, bool subtract, std::size_t col) const {
        if (!a.is_vector && !b.is_vector) return scalar(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
        a = as_vector(std::move(a), col);
        b = as_vector(std::move(b), col);
        for (std::size_t k = 0; k < dim_; ++k) {
            if (subtract)
                a.vec[k] -= b.vec[k];
            else
                a.vec[k] += b.vec[k];
        }
        return a;
    }

    static Value combine_mul(Value a, Value b, std::size_t col) {
        if (a.is_vector && b.is_vector) throw SyntaxError("product of two vectors", col);
        if (!a.is_vector && !b.is_vector) return scalar(a.scalar * b.scalar);
        Value& vec = a.is_vector ? a : b;
        const TowerElement& s = a.is_vector ? b.scalar : a.scalar;
        for (auto& x : vec.vec) x *= s;
        return std::move(vec);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t dim_;
};

}  // namespace

LinearCombination parse_linear_combination(std::string_view text, std::size_t dim) {
    if (dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    Value v = Parser(text, dim).parse_all();
    if (!v.is_vector) {
        if (!v.scalar.is_zero()) throw SyntaxError("expected a combination of basis vectors", 0);
        return LinearCombination(dim, TowerElement());
    }
    const RationalFunction* radicand = nullptr;
    for (const auto& c : v.vec) {
        if (!c.has_radical()) continue;
        if (radicand && !(*radicand == *c.radicand()))
            throw Error(ErrorKind::MultipleRadicals, "coefficients use two different square roots");
        radicand = c.radicand().get();
    }
    return v.vec;
}

TowerElement parse_scalar(std::string_view text) { return Parser(text, 0).parse_all().scalar; }

std::string print_linear_combination(const LinearCombination& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string basis = "e_" + std::to_string(k + 1);
        if (v[k].is_one())
            out += basis;
        else
            out += "(" + v[k].to_string() + ")*" + basis;
    }
    return out.empty() ? "0" : out;
}

std::optional<GaussianRational> as_constant(const TowerElement& x) {
    if (!x.is_constant()) return std::nullopt;
    return x.base().numerator().coeff(0);
}

}  // namespace nilcert
