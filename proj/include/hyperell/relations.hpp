#pragma once

#include <string>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/poly.hpp"
#include "hyperell/xiseries.hpp"

namespace hyperell {

/// Index sets for genus g: odd k in {1,...,2g-1}, even s in {4,...,4g+2}.
class GenusContext {
public:
    explicit GenusContext(int g) : g_(g) {
        if (g < 1) throw error("genus must be >= 1");
    }

    int genus() const { return g_; }
    int max_odd() const { return 2 * g_ - 1; }
    int max_lambda() const { return 4 * g_ + 2; }

    bool is_odd_index(int k) const { return k >= 1 && k <= max_odd() && k % 2 == 1; }
    bool is_lambda_index(int s) const { return s >= 4 && s <= max_lambda() && s % 2 == 0; }

    std::vector<int> odd_indices() const {
        std::vector<int> out;
        for (int k = 1; k <= max_odd(); k += 2) out.push_back(k);
        return out;
    }
    std::vector<int> lambda_indices() const {
        std::vector<int> out;
        for (int s = 4; s <= max_lambda(); s += 2) out.push_back(s);
        return out;
    }
    /// Odd pairs 3 <= k <= l <= 2g-1.
    std::vector<std::pair<int, int>> w_indices() const {
        std::vector<std::pair<int, int>> out;
        for (int k = 3; k <= max_odd(); k += 2)
            for (int l = k; l <= max_odd(); l += 2) out.emplace_back(k, l);
        return out;
    }
    /// Generators in point order: b1_*, then b2_*, then b3_*.
    std::vector<Symbol> generators() const {
        std::vector<Symbol> out;
        for (Kind kind : {Kind::B1, Kind::B2, Kind::B3})
            for (int k : odd_indices()) out.push_back(Symbol::generator(kind, k));
        return out;
    }
    std::vector<Symbol> ambient_coordinates() const {
        auto out = generators();
        for (auto [k, l] : w_indices()) out.push_back(Symbol::w(k, l));
        for (int s : lambda_indices()) out.push_back(Symbol::lam(s));
        return out;
    }

    Symbol lambda(int s) const {
        if (!is_lambda_index(s)) throw index_out_of_range("lambda_" + std::to_string(s) + " outside range for genus " + std::to_string(g_));
        return Symbol::lam(s);
    }

private:
    int g_;
};

struct RelationId {
    enum class Family { BEL1, BEL2 } family = Family::BEL1;
    int i = 1;
    int j = 0;

    static RelationId bel1(int i) { return {Family::BEL1, i, 0}; }
    static RelationId bel2(int i, int j) {
        if (i > j) std::swap(i, j);
        return {Family::BEL2, i, j};
    }

    std::string str() const {
        if (family == Family::BEL1) return "BEL1[" + std::to_string(i) + "]";
        return "BEL2[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }

    friend auto operator<=>(const RelationId&, const RelationId&) = default;
};

/// Two-index function p_{k,l} as a coordinate: 0 beyond the cutoff 2g+1,
/// the generator b1 when one index is 1, w otherwise.
inline Poly pp_symbol(const GenusContext& ctx, int k, int l) {
    if (k < 1 || l < 1 || k % 2 == 0 || l % 2 == 0) throw index_out_of_range("p_{k,l} indices must be odd and positive");
    if (k >= 2 * ctx.genus() + 1 || l >= 2 * ctx.genus() + 1) return Poly{};
    if (k > l) std::swap(k, l);
    if (k == 1) return Symbol::b1(l);
    return Symbol::w(k, l);
}

namespace detail {
inline int delta(int a, int b) { return a == b ? 1 : 0; }
inline void check_index(const GenusContext& ctx, int i, const char* what) {
    if (!ctx.is_odd_index(i))
        throw index_out_of_range(std::string(what) + ": index " + std::to_string(i) + " not in {1,3,...," +
                                 std::to_string(ctx.max_odd()) + "}");
}
} // namespace detail

/// p_{1,1,1,i} - 6 p_{1,1} p_{1,i} + 2 p_{3,i} - 6 p_{1,i+2} - 2 lambda_4 delta_{i,1}
inline Poly bel1(const GenusContext& ctx, int i) {
    detail::check_index(ctx, i, "bel1");
    const Poly p11 = Symbol::b1(1);
    Poly r = Poly(Symbol::b3(i)) - 6 * (p11 * pp_symbol(ctx, 1, i)) + 2 * pp_symbol(ctx, 3, i) -
             6 * pp_symbol(ctx, 1, i + 2);
    if (i == 1) r -= 2 * Poly(ctx.lambda(4));
    return r;
}

/// Left minus right side of the quadratic relation between p_{1,1,i} and p_{1,1,j}.
inline Poly bel2(const GenusContext& ctx, int i, int j) {
    detail::check_index(ctx, i, "bel2");
    detail::check_index(ctx, j, "bel2");
    using detail::delta;
    auto p = [&](int a, int b) { return pp_symbol(ctx, a, b); };
    const Poly p11 = Symbol::b1(1);
    const Poly lam4 = ctx.lambda(4);

    Poly rhs = 4 * (p11 * p(1, i) * p(1, j)) + 4 * (p(1, i + 2) * p(1, j)) + 4 * (p(1, i) * p(1, j + 2)) -
               2 * (p(3, i) * p(1, j)) - 2 * (p(1, i) * p(3, j)) -
               2 * (p(i + 4, j) - 2 * p(i + 2, j + 2) + p(i, j + 4));
    rhs += 2 * (lam4 * (delta(i, 1) * p(1, j) + p(1, i) * delta(j, 1)));
    const int factor = 2 * delta(i, j) + delta(i - 2, j) + delta(i, j - 2);
    if (factor != 0) {
        const int s = i + j + 4;
        if (!ctx.is_lambda_index(s)) throw internal_inconsistency("bel2: lambda index out of range");
        rhs += 2 * factor * Poly(Symbol::lam(s));
    }
    return Poly(Symbol::b2(i)) * Poly(Symbol::b2(j)) - rhs;
}

inline Poly relation(const GenusContext& ctx, const RelationId& id) {
    return id.family == RelationId::Family::BEL1 ? bel1(ctx, id.i) : bel2(ctx, id.i, id.j);
}

/// b2(xi)^2 + 2 b3(xi) (1 - b1(xi)) + 4 (xi^-1 + 2 p_{1,1}) (1 - b1(xi))^2
inline XiSeries l1_bracket(const GenusContext& ctx) {
    const int g = ctx.genus();
    XiSeries b1(g), b2(g), b3(g), one(g), lead(g);
    for (int i = 1; i <= g; ++i) {
        b1.set(i, Symbol::b1(2 * i - 1));
        b2.set(i, Symbol::b2(2 * i - 1));
        b3.set(i, Symbol::b3(2 * i - 1));
    }
    one.set(0, 1);
    lead.set(-1, 1).set(0, 2 * Poly(Symbol::b1(1)));
    const XiSeries u = one - b1;
    return b2 * b2 + Rational(2) * (b3 * u) + Rational(4) * (lead * (u * u));
}

/// m(xi) = xi^-1 + sum_{i=1}^{2g} lambda_{2i+2} xi^i
inline XiSeries m_series(const GenusContext& ctx) {
    XiSeries m(ctx.genus());
    m.set(-1, 1);
    for (int i = 1; i <= 2 * ctx.genus(); ++i) m.set(i, Symbol::lam(2 * i + 2));
    return m;
}

/// 4 m(xi) minus the bracket; its xi^-1 and xi^0 coefficients vanish.
inline XiSeries l1_residual(const GenusContext& ctx) {
    return Rational(4) * m_series(ctx) - l1_bracket(ctx);
}

} // namespace hyperell
