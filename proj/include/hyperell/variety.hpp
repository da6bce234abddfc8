#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperell/matrix.hpp"
#include "hyperell/relations.hpp"
#include "hyperell/rewriter.hpp"

namespace hyperell {

/// The g(g+3)/2 defining equations of S_g in ambient coordinates (b, w, lambda).
struct VarietySystem {
    int genus = 1;
    std::vector<std::pair<RelationId, Poly>> equations;

    static std::size_t expected_equation_count(int g) { return static_cast<std::size_t>(g * (g + 3) / 2); }
    static std::size_t ambient_dimension(int g) { return static_cast<std::size_t>(g * (g + 9) / 2); }
};

inline VarietySystem variety_system(const GenusContext& ctx) {
    VarietySystem sys;
    sys.genus = ctx.genus();
    for (int i : ctx.odd_indices()) sys.equations.emplace_back(RelationId::bel1(i), bel1(ctx, i));
    for (int i : ctx.odd_indices())
        for (int j : ctx.odd_indices())
            if (i <= j) sys.equations.emplace_back(RelationId::bel2(i, j), bel2(ctx, i, j));
    return sys;
}

struct EquationCheck {
    RelationId id;
    Poly residual;
    bool zero() const { return residual.is_zero(); }

    /// "BEL2[1,3]: ZERO" or "BEL1[1]: NONZERO(weight 0, 1 terms)".
    std::string line() const {
        if (zero()) return id.str() + ": ZERO";
        const auto gr = residual.grading();
        const std::string w = gr.is_mixed() ? std::string("mixed") : std::to_string(gr.weight);
        return id.str() + ": NONZERO(weight " + w + ", " + std::to_string(residual.size()) + " terms)";
    }
};

struct UniformizationReport {
    int genus = 1;
    std::vector<EquationCheck> checks;

    std::size_t zero_count() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.zero();
        return n;
    }
    bool passed() const { return zero_count() == checks.size(); }
    std::string summary() const {
        return std::to_string(zero_count()) + "/" + std::to_string(checks.size()) + " equations ZERO";
    }
};

/// Substitutes the table into every defining equation of S_g.
inline UniformizationReport uniformize_check(const GenusContext& ctx, const RelationTable& table) {
    const auto env = table.substitution();
    UniformizationReport rep;
    rep.genus = ctx.genus();
    for (const auto& [id, eq] : variety_system(ctx).equations) rep.checks.push_back({id, eq.substitute(env)});
    return rep;
}

struct PathCheck {
    std::pair<int, int> entry;
    RelationId via;
    Poly derived;
    bool identical = false;
};

/// Re-derives every w_{k,l} with k >= 5 from each other defining equation
/// that contains it, with all remaining coordinates taken from the table.
inline std::vector<PathCheck> path_independence(const GenusContext& ctx, const RelationTable& table) {
    std::vector<PathCheck> out;
    const auto sys = variety_system(ctx);
    for (const auto& [kl, entry] : table.w) {
        if (kl.first < 5) continue;
        const Symbol target = Symbol::w(kl.first, kl.second);
        auto env = table.substitution();
        env.erase(target);
        const RelationId primary = RelationId::bel2(kl.first - 4, kl.second);
        for (const auto& [id, eq] : sys.equations) {
            if (id == primary || !eq.contains(target)) continue;
            Poly derived = solve_linear(eq, target, env);
            const bool same = derived == entry;
            out.push_back({kl, id, std::move(derived), same});
        }
    }
    return out;
}

/// The polynomial map p: C^{3g} -> C^{2g}, b -> (lambda_4(b), ..., lambda_{4g+2}(b)).
struct PMap {
    int genus = 1;
    std::vector<Symbol> coordinates;  // b1_*, b2_*, b3_*
    std::vector<Poly> components;     // lambda_4 ... lambda_{4g+2}

    static PMap from_table(const GenusContext& ctx, const RelationTable& table) {
        PMap pm;
        pm.genus = ctx.genus();
        pm.coordinates = ctx.generators();
        for (int s : ctx.lambda_indices()) pm.components.push_back(table.lambda.at(s));
        return pm;
    }

    template <class T, class Convert>
    std::vector<T> evaluate(std::span<const T> point, Convert&& convert) const {
        if (point.size() != coordinates.size())
            throw error("p: point must have " + std::to_string(coordinates.size()) + " coordinates");
        std::unordered_map<Symbol, T> values;
        for (std::size_t n = 0; n < coordinates.size(); ++n) values.emplace(coordinates[n], point[n]);
        std::vector<T> out;
        for (const auto& c : components)
            out.push_back(c.template evaluate<T>([&](const Symbol& s) { return values.at(s); }, convert));
        return out;
    }
};

inline std::vector<Rational> p_eval(const PMap& pm, std::span<const Rational> point) {
    return pm.evaluate<Rational>(point, [](const Rational& r) { return r; });
}

/// 2g x 3g matrix of partial derivatives of p, evaluated exactly.
inline RationalMatrix p_jacobian(const PMap& pm, std::span<const Rational> point) {
    const std::size_t rows = pm.components.size(), cols = pm.coordinates.size();
    if (point.size() != cols) throw error("p: point must have " + std::to_string(cols) + " coordinates");
    std::unordered_map<Symbol, Rational> values;
    for (std::size_t n = 0; n < cols; ++n) values.emplace(pm.coordinates[n], point[n]);
    RationalMatrix jac(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            jac(r, c) = pm.components[r].derivative(pm.coordinates[c]).evaluate(
                [&](const Symbol& s) { return values.at(s); });
    return jac;
}

inline std::size_t p_jacobian_rank(const PMap& pm, std::span<const Rational> point) {
    return rank_exact(p_jacobian(pm, point));
}

/// Components uniform in {-9..9}/{1..4}.
inline std::vector<Rational> random_rational_point(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rational> out;
    out.reserve(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        long a = num(rng);
        long b = den(rng);
        out.emplace_back(a, b);
    }
    return out;
}

} // namespace hyperell
