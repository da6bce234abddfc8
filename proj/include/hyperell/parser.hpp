#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/expr.hpp"
#include "hyperell/relations.hpp"

namespace hyperell {

// Grammar (binding power in brackets):
//   expr   := prefix { infix }
//   prefix := INTEGER | p[k1,...,kn] | la<s> | "(" expr ")" | "-" expr[30]
//   infix  := ("+" | "-") expr[10] | ("*" | "/") expr[20] | "^" ["-"] INTEGER
// "^" binds tighter than unary minus, which binds tighter than "*" and "/".
// Rational constants are written as quotients of integers, e.g. (1/2)*p[1,1,1,1].

struct Token {
    enum class Kind { Number, PSymbol, LaSymbol, Operator, LParen, RParen, End } kind = Kind::End;
    std::size_t pos = 0;
    std::string text;
    Integer number;
    std::vector<int> indices;  // PSymbol
    int lambda = 0;            // LaSymbol
    char op = 0;               // Operator
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.pos = i_;
            if (i_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::Number;
                t.text = digits();
                t.number = Integer(t.text);
            } else if (c == 'p') {
                ++i_;
                skip_space();
                expect('[');
                t.kind = Token::Kind::PSymbol;
                for (;;) {
                    skip_space();
                    const std::size_t at = i_;
                    const std::string d = digits();
                    if (d.empty()) throw syntax_error("expected an index in p[...]", at);
                    t.indices.push_back(small_int(d, at));
                    skip_space();
                    if (peek() == ',') { ++i_; continue; }
                    expect(']');
                    break;
                }
            } else if (src_.substr(i_, 2) == "la") {
                i_ += 2;
                const std::size_t at = i_;
                const std::string d = digits();
                if (d.empty()) throw syntax_error("expected an index after 'la'", at);
                t.kind = Token::Kind::LaSymbol;
                t.lambda = small_int(d, at);
            } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
                t.kind = Token::Kind::Operator;
                t.op = c;
                ++i_;
            } else if (c == '(') {
                t.kind = Token::Kind::LParen;
                ++i_;
            } else if (c == ')') {
                t.kind = Token::Kind::RParen;
                ++i_;
            } else {
                throw syntax_error(std::string("unexpected character '") + c + "'", i_);
            }
            t.text = std::string(src_.substr(t.pos, i_ - t.pos));
            out.push_back(std::move(t));
        }
    }

private:
    char peek() const { return i_ < src_.size() ? src_[i_] : '\0'; }
    void skip_space() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    }
    void expect(char c) {
        if (peek() != c) throw syntax_error(std::string("expected '") + c + "'", i_);
        ++i_;
    }
    std::string digits() {
        const std::size_t b = i_;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
        return std::string(src_.substr(b, i_ - b));
    }
    static int small_int(const std::string& d, std::size_t at) {
        if (d.size() > 6) throw syntax_error("index too large", at);
        return std::stoi(d);
    }

    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, const GenusContext& ctx) : tokens_(Lexer(src).run()), ctx_(ctx) {}

    ExprPtr run() {
        auto e = expr(0);
        if (cur().kind != Token::Kind::End) throw syntax_error("unexpected '" + cur().text + "'", cur().pos);
        return e;
    }

private:
    static int infix_power(const Token& t) {
        if (t.kind != Token::Kind::Operator) return 0;
        switch (t.op) {
        case '+': case '-': return 10;
        case '*': case '/': return 20;
        case '^': return 40;
        }
        return 0;
    }

    const Token& cur() const { return tokens_[k_]; }
    const Token& next() { return tokens_[k_++]; }

    ExprPtr expr(int rbp) {
        ExprPtr left = prefix();
        while (infix_power(cur()) > rbp) left = infix(std::move(left));
        return left;
    }

    ExprPtr prefix() {
        const Token& t = next();
        switch (t.kind) {
        case Token::Kind::Number: return Expr::number(Rational(t.number));
        case Token::Kind::PSymbol: {
            if (t.indices.size() < 2) throw index_error("p[...] needs at least two indices", t.pos);
            for (int k : t.indices)
                if (k < 1 || k % 2 == 0) throw index_error("p[...] indices must be odd, got " + std::to_string(k), t.pos);
            return Expr::pp(t.indices);
        }
        case Token::Kind::LaSymbol:
            if (!ctx_.is_lambda_index(t.lambda))
                throw index_error("la" + std::to_string(t.lambda) + " is not in {4,6,...," + std::to_string(ctx_.max_lambda()) + "}", t.pos);
            return Expr::lam(t.lambda);
        case Token::Kind::LParen: {
            auto e = expr(0);
            if (cur().kind != Token::Kind::RParen) throw syntax_error("expected ')'", cur().pos);
            ++k_;
            return e;
        }
        case Token::Kind::Operator:
            if (t.op == '-') return Expr::neg(expr(30));
            break;
        default: break;
        }
        throw syntax_error(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }

    ExprPtr infix(ExprPtr left) {
        const Token& t = next();
        switch (t.op) {
        case '+': return Expr::binary(Expr::Op::Add, std::move(left), expr(10));
        case '-': return Expr::binary(Expr::Op::Sub, std::move(left), expr(10));
        case '*': return Expr::binary(Expr::Op::Mul, std::move(left), expr(20));
        case '/': return Expr::binary(Expr::Op::Div, std::move(left), expr(20));
        case '^': {
            bool paren = false, negative = false;
            if (cur().kind == Token::Kind::LParen) { paren = true; ++k_; }
            if (cur().kind == Token::Kind::Operator && cur().op == '-') { negative = true; ++k_; }
            const Token& n = next();
            if (n.kind != Token::Kind::Number) throw syntax_error("exponent must be an integer literal", n.pos);
            if (!n.number.fits_slong_p()) throw syntax_error("exponent too large", n.pos);
            if (paren) {
                if (cur().kind != Token::Kind::RParen) throw syntax_error("expected ')'", cur().pos);
                ++k_;
            }
            const long e = n.number.get_si();
            return Expr::pow(std::move(left), negative ? -e : e);
        }
        }
        throw syntax_error("unexpected '" + t.text + "'", t.pos);
    }

    std::vector<Token> tokens_;
    const GenusContext& ctx_;
    std::size_t k_ = 0;
};

inline ExprPtr parse(std::string_view src, const GenusContext& ctx) { return Parser(src, ctx).run(); }

namespace detail {
inline int precedence(const Expr& e) {
    switch (e.op) {
    case Expr::Op::Add: case Expr::Op::Sub: return 10;
    case Expr::Op::Mul: case Expr::Op::Div: return 20;
    case Expr::Op::Neg: return 30;
    case Expr::Op::Pow: return 40;
    case Expr::Op::Number: return e.value.denominator() == 1 && e.value.sign() >= 0 ? 50 : 0;
    default: return 50;
    }
}

inline std::string format_at(const Expr& e, int need);

inline std::string format_node(const Expr& e) {
    using Op = Expr::Op;
    switch (e.op) {
    case Op::Number: return e.value.str();
    case Op::Pp: {
        std::string s = "p[";
        for (std::size_t n = 0; n < e.indices.size(); ++n) s += (n ? "," : "") + std::to_string(e.indices[n]);
        return s + "]";
    }
    case Op::Lambda: return "la" + std::to_string(e.lambda);
    case Op::Neg: return "-" + format_at(*e.lhs, 30);
    case Op::Add: return format_at(*e.lhs, 10) + " + " + format_at(*e.rhs, 11);
    case Op::Sub: return format_at(*e.lhs, 10) + " - " + format_at(*e.rhs, 11);
    case Op::Mul: return format_at(*e.lhs, 20) + "*" + format_at(*e.rhs, 21);
    case Op::Div: return format_at(*e.lhs, 20) + "/" + format_at(*e.rhs, 21);
    case Op::Pow: return format_at(*e.lhs, 41) + "^" + std::to_string(e.exponent);
    }
    return {};
}

inline std::string format_at(const Expr& e, int need) {
    std::string s = format_node(e);
    return precedence(e) < need ? "(" + s + ")" : s;
}
} // namespace detail

/// Canonical text with minimal parentheses; parse(format(e)) rebuilds e for
/// every tree the parser can produce.
inline std::string format(const Expr& e) { return detail::format_at(e, 0); }

} // namespace hyperell
