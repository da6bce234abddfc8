#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/expr.hpp"
#include "hyperell/poly.hpp"
#include "hyperell/relations.hpp"

namespace hyperell {

/// Every lambda_s and every w_{k,l} of genus g as a homogeneous polynomial in
/// the 3g generators, with the relation each entry was extracted from.
struct RelationTable {
    int genus = 1;
    std::map<int, Poly> lambda;
    std::map<std::pair<int, int>, Poly> w;
    std::map<std::string, std::string> provenance;  // symbol name -> "BEL1[i]", "BEL2[i,j]", "L1[xi^i]"

    std::unordered_map<Symbol, Poly> substitution() const {
        std::unordered_map<Symbol, Poly> env;
        for (const auto& [s, p] : lambda) env.emplace(Symbol::lam(s), p);
        for (const auto& [kl, p] : w) env.emplace(Symbol::w(kl.first, kl.second), p);
        return env;
    }

    friend bool operator==(const RelationTable&, const RelationTable&) = default;
};

/// Solves residual = 0 for a target symbol occurring linearly with a constant
/// coefficient, after substituting env. Any other non-generator symbol left
/// over means the derivation order was violated.
inline Poly solve_linear(const Poly& residual, const Symbol& target, const std::unordered_map<Symbol, Poly>& env) {
    const Poly r = residual.substitute(env);
    if (r.degree_in(target) != 1)
        throw unresolved_symbol(target.name() + " does not occur linearly in its defining relation");
    Poly coeff, rest;
    for (const auto& [m, c] : r.terms()) {
        auto [without, e] = m.without(target);
        if (e == 1) coeff.add_term(without, c);
        else rest.add_term(m, c);
    }
    if (!coeff.is_constant() || coeff.is_zero())
        throw unresolved_symbol("coefficient of " + target.name() + " is not a nonzero constant");
    if (!rest.is_pure_generator()) {
        std::string names;
        for (const auto& s : rest.symbols())
            if (!s.is_generator()) names += " " + s.name();
        throw unresolved_symbol("solving for " + target.name() + " left unresolved symbols:" + names);
    }
    return -rest * coeff.constant_term().inverse();
}

/// lambda_{2i+2} = 1/4 of the xi^i coefficient of the bracket, i = 1..2g.
inline std::map<int, Poly> derive_lambda(const GenusContext& ctx) {
    const XiSeries residual = l1_residual(ctx);
    if (!residual[-1].is_zero() || !residual[0].is_zero())
        throw internal_inconsistency("xi^-1 / xi^0 coefficients of the lambda generating relation do not cancel");
    const XiSeries bracket = l1_bracket(ctx);
    std::map<int, Poly> out;
    for (int i = 1; i <= 2 * ctx.genus(); ++i) out.emplace(2 * i + 2, bracket[i] * Rational(1, 4));
    return out;
}

namespace detail {
inline std::unordered_map<Symbol, Poly> lambda_env(const std::map<int, Poly>& lambda) {
    std::unordered_map<Symbol, Poly> env;
    for (const auto& [s, p] : lambda) env.emplace(Symbol::lam(s), p);
    return env;
}
} // namespace detail

/// w_{3,l} for 3 <= l <= 2g-1 from the cubic-derivative relation at index l.
inline std::map<std::pair<int, int>, Poly> derive_w3(const GenusContext& ctx, const std::map<int, Poly>& lambda) {
    const auto env = detail::lambda_env(lambda);
    std::map<std::pair<int, int>, Poly> out;
    for (int l = 3; l <= ctx.max_odd(); l += 2) out.emplace(std::pair{3, l}, solve_linear(bel1(ctx, l), Symbol::w(3, l), env));
    return out;
}

/// w_{k,l} for k >= 5, by ascending k, each extracted from the quadratic
/// relation at (k-4, l) through its p_{k,l} term.
inline std::map<std::pair<int, int>, Poly> derive_w_high(const GenusContext& ctx, const std::map<int, Poly>& lambda,
                                                        const std::map<std::pair<int, int>, Poly>& w3) {
    auto env = detail::lambda_env(lambda);
    for (const auto& [kl, p] : w3) env.emplace(Symbol::w(kl.first, kl.second), p);
    std::map<std::pair<int, int>, Poly> out;
    for (int k = 5; k <= ctx.max_odd(); k += 2) {
        // Entries with first index k are resolved only after the whole row is
        // done, so a row never refers to itself.
        std::vector<std::pair<std::pair<int, int>, Poly>> row;
        for (int l = k; l <= ctx.max_odd(); l += 2)
            row.emplace_back(std::pair{k, l}, solve_linear(bel2(ctx, k - 4, l), Symbol::w(k, l), env));
        for (auto& [kl, p] : row) {
            env.emplace(Symbol::w(kl.first, kl.second), p);
            out.emplace(kl, std::move(p));
        }
    }
    return out;
}

/// Checks coverage, purity and homogeneity of a table.
inline void validate_table(const GenusContext& ctx, const RelationTable& t) {
    auto fail = [](const std::string& msg) { throw internal_inconsistency("relation table: " + msg); };
    if (t.genus != ctx.genus()) fail("genus mismatch");
    if (t.lambda.size() != ctx.lambda_indices().size()) fail("lambda coverage");
    for (int s : ctx.lambda_indices()) {
        auto it = t.lambda.find(s);
        if (it == t.lambda.end()) fail("missing la" + std::to_string(s));
        if (!it->second.is_pure_generator()) fail("la" + std::to_string(s) + " not pure in generators");
        if (!it->second.grading().compatible_with(s)) fail("la" + std::to_string(s) + " not homogeneous of its weight");
    }
    const auto pairs = ctx.w_indices();
    if (t.w.size() != pairs.size()) fail("w coverage");
    for (auto kl : pairs) {
        auto it = t.w.find(kl);
        const std::string name = Symbol::w(kl.first, kl.second).name();
        if (it == t.w.end()) fail("missing " + name);
        if (!it->second.is_pure_generator()) fail(name + " not pure in generators");
        if (!it->second.grading().compatible_with(kl.first + kl.second)) fail(name + " not homogeneous of its weight");
    }
}

inline RelationTable build_table(const GenusContext& ctx) {
    RelationTable t;
    t.genus = ctx.genus();
    t.lambda = derive_lambda(ctx);
    for (const auto& [s, p] : t.lambda) t.provenance["la" + std::to_string(s)] = "L1[xi^" + std::to_string(s / 2 - 1) + "]";
    const auto w3 = derive_w3(ctx, t.lambda);
    for (const auto& [kl, p] : w3) {
        t.w.emplace(kl, p);
        t.provenance[Symbol::w(kl.first, kl.second).name()] = RelationId::bel1(kl.second).str();
    }
    for (auto& [kl, p] : derive_w_high(ctx, t.lambda, w3)) {
        t.w.emplace(kl, p);
        t.provenance[Symbol::w(kl.first, kl.second).name()] = RelationId::bel2(kl.first - 4, kl.second).str();
    }
    validate_table(ctx, t);
    return t;
}

/// Element of the fraction field Q(b): numerator over a nonzero denominator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw division_by_zero_poly("division by a polynomial that reduces to zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }

    RationalFunction pow(long e) const {
        if (e < 0) {
            if (num_.is_zero()) throw division_by_zero_poly("negative power of a polynomial that reduces to zero");
            return RationalFunction(den_, num_).pow(-e);
        }
        return {num_.pow(static_cast<int>(e)), den_.pow(static_cast<int>(e))};
    }

    /// Same element of the field (cross-multiplication).
    bool equivalent(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str() const {
        if (den_ == Poly(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    // No common monomial factor, constant quotients collapsed, monic
    // denominator under the term order.
    void normalize() {
        if (den_.is_zero()) throw division_by_zero_poly("denominator reduces to the zero polynomial");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Monomial common = den_.leading_monomial();
        for (const auto* p : {&num_, &den_})
            for (const auto& [m, c] : p->terms()) common = Monomial::gcd(common, m);
        if (!common.is_one()) {
            auto divide = [&](const Poly& p) {
                Poly out;
                for (const auto& [m, c] : p.terms()) out.add_term(m.divided_by(common), c);
                return out;
            };
            num_ = divide(num_);
            den_ = divide(den_);
        }
        const Rational ratio = num_.leading_coefficient() / den_.leading_coefficient();
        if (num_ == den_ * ratio) {
            num_ = Poly(ratio);
            den_ = Poly(1);
            return;
        }
        const Rational lc = den_.leading_coefficient().inverse();
        num_ *= lc;
        den_ *= lc;
    }

    Poly num_;
    Poly den_;
};

/// Maps a function symbol p[k1,...,kn] (indices in any order) to its
/// generator-coordinate polynomial; only p[k,l], p[1,1,k], p[1,1,1,k] are
/// in the supported closure.
inline Poly reduce_symbol(const GenusContext& ctx, const RelationTable& table, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    auto unsupported = [&]() {
        std::string s = "p[";
        for (std::size_t n = 0; n < idx.size(); ++n) s += (n ? "," : "") + std::to_string(idx[n]);
        return unsupported_symbol(s + "] is outside the supported closure {p[k,l], p[1,1,k], p[1,1,1,k]}; "
                                      "expressing it requires z-derivatives of the relations");
    };
    for (int k : idx)
        if (k < 1 || k % 2 == 0) throw index_out_of_range("p indices must be odd and positive");
    if (idx.size() == 2) {
        Poly p = pp_symbol(ctx, idx[0], idx[1]);
        return p.substitute(table.substitution());
    }
    const std::size_t ones = static_cast<std::size_t>(std::count(idx.begin(), idx.end(), 1));
    const int k = idx.back();
    if (!ctx.is_odd_index(k)) throw unsupported();
    if (idx.size() == 3 && ones >= 2) return Symbol::b2(k);
    if (idx.size() == 4 && ones >= 3) return Symbol::b3(k);
    throw unsupported();
}

/// Reduces an expression to a rational function in the generators.
inline RationalFunction reduce(const GenusContext& ctx, const RelationTable& table, const Expr& e) {
    using Op = Expr::Op;
    switch (e.op) {
    case Op::Number: return Poly(e.value);
    case Op::Pp: return reduce_symbol(ctx, table, e.indices);
    case Op::Lambda: return table.lambda.at(ctx.lambda(e.lambda).i);
    case Op::Neg: return -reduce(ctx, table, *e.lhs);
    case Op::Add: return reduce(ctx, table, *e.lhs) + reduce(ctx, table, *e.rhs);
    case Op::Sub: return reduce(ctx, table, *e.lhs) - reduce(ctx, table, *e.rhs);
    case Op::Mul: return reduce(ctx, table, *e.lhs) * reduce(ctx, table, *e.rhs);
    case Op::Div: return reduce(ctx, table, *e.lhs) / reduce(ctx, table, *e.rhs);
    case Op::Pow: return reduce(ctx, table, *e.lhs).pow(e.exponent);
    }
    throw error("reduce: unknown node");
}

} // namespace hyperell
