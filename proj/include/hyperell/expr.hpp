#pragma once

#include <memory>
#include <vector>

#include "hyperell/rational.hpp"

namespace hyperell {

/// Immutable expression tree over rational constants, p[k1,...,kn], la<s>
/// and the field operations plus integer powers.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Number, Pp, Lambda, Neg, Add, Sub, Mul, Div, Pow };

    Op op = Op::Number;
    Rational value;            // Number
    std::vector<int> indices;  // Pp
    int lambda = 0;            // Lambda
    long exponent = 0;         // Pow
    ExprPtr lhs, rhs;          // operands; unary ops and Pow use lhs only

    static ExprPtr number(Rational v) {
        auto e = std::make_shared<Expr>();
        e->value = std::move(v);
        return e;
    }
    static ExprPtr pp(std::vector<int> idx) {
        auto e = std::make_shared<Expr>();
        e->op = Op::Pp;
        e->indices = std::move(idx);
        return e;
    }
    static ExprPtr lam(int s) {
        auto e = std::make_shared<Expr>();
        e->op = Op::Lambda;
        e->lambda = s;
        return e;
    }
    static ExprPtr neg(ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->op = Op::Neg;
        e->lhs = std::move(a);
        return e;
    }
    static ExprPtr binary(Op op, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static ExprPtr pow(ExprPtr base, long n) {
        auto e = std::make_shared<Expr>();
        e->op = Op::Pow;
        e->lhs = std::move(base);
        e->exponent = n;
        return e;
    }
};

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
    case Expr::Op::Number: return a.value == b.value;
    case Expr::Op::Pp: return a.indices == b.indices;
    case Expr::Op::Lambda: return a.lambda == b.lambda;
    case Expr::Op::Neg: return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Op::Pow: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

} // namespace hyperell
