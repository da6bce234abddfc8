#include <gtest/gtest.h>

#include <random>

#include "hyperell/variety.hpp"
#include "test_util.hpp"

using namespace hyperell;
using namespace testutil;

TEST(VarietySystem, Counts) {
    const std::size_t eqs[] = {2, 5, 9, 14, 20}, ambient[] = {5, 11, 18, 26, 35};
    for (int g = 1; g <= 5; ++g) {
        const GenusContext ctx(g);
        const auto sys = variety_system(ctx);
        EXPECT_EQ(sys.equations.size(), eqs[g - 1]);
        EXPECT_EQ(VarietySystem::expected_equation_count(g), eqs[g - 1]);
        EXPECT_EQ(VarietySystem::ambient_dimension(g), ambient[g - 1]);
        EXPECT_EQ(ctx.ambient_coordinates().size(), ambient[g - 1]);
        // Dimension count: ambient minus equations is the 3g generators.
        EXPECT_EQ(ambient[g - 1] - eqs[g - 1], static_cast<std::size_t>(3 * g));
    }
}

TEST(Uniformize, AllEquationsVanish) {
    for (int g = 1; g <= 4; ++g) {
        const GenusContext ctx(g);
        const auto rep = uniformize_check(ctx, build_table(ctx));
        EXPECT_TRUE(rep.passed()) << rep.summary();
        EXPECT_EQ(rep.checks.size(), VarietySystem::expected_equation_count(g));
        for (const auto& c : rep.checks) EXPECT_EQ(c.line(), c.id.str() + ": ZERO");
    }
    EXPECT_EQ(uniformize_check(GenusContext(3), build_table(GenusContext(3))).summary(), "9/9 equations ZERO");
}

TEST(Uniformize, DetectsPerturbedTable) {
    const GenusContext ctx(1);
    auto t = build_table(ctx);
    t.lambda.at(4) += Poly(1);
    const auto rep = uniformize_check(ctx, t);
    EXPECT_FALSE(rep.passed());
    ASSERT_EQ(rep.checks[0].id, RelationId::bel1(1));
    EXPECT_EQ(rep.checks[0].residual, Poly(-2));
    EXPECT_EQ(rep.checks[0].line(), "BEL1[1]: NONZERO(weight 0, 1 terms)");
    // The cubic picks up -4*b1_1 from the shifted la4.
    EXPECT_EQ(rep.checks[1].residual, -4 * b1(1));
}

TEST(PathIndependence, AllRoutesAgree) {
    for (int g = 3; g <= 4; ++g) {
        const GenusContext ctx(g);
        const auto checks = path_independence(ctx, build_table(ctx));
        EXPECT_FALSE(checks.empty());
        for (const auto& c : checks) EXPECT_TRUE(c.identical) << c.via.str();
    }
    const auto g3 = path_independence(GenusContext(3), build_table(GenusContext(3)));
    bool via33 = false;
    for (const auto& c : g3) via33 |= c.entry == std::pair{5, 5} && c.via == RelationId::bel2(3, 3);
    EXPECT_TRUE(via33);
}

TEST(PMap, GenusOneExamples) {
    const GenusContext ctx(1);
    const auto pm = PMap::from_table(ctx, build_table(ctx));
    auto at = [&](long a, long b, long c) {
        const std::vector<Rational> pt{Rational(a), Rational(b), Rational(c)};
        return p_eval(pm, pt);
    };
    EXPECT_EQ(at(0, 0, 0), (std::vector<Rational>{q(0), q(0)}));
    EXPECT_EQ(at(1, 0, 0), (std::vector<Rational>{q(-3), q(2)}));
    EXPECT_EQ(at(0, 0, 2), (std::vector<Rational>{q(1), q(0)}));
    EXPECT_THROW(p_eval(pm, std::vector<Rational>{q(1)}), error);
}

TEST(PMap, EvaluationMatchesSubstitution) {
    std::mt19937_64 rng(5);
    for (int g = 1; g <= 3; ++g) {
        const GenusContext ctx(g);
        const auto t = build_table(ctx);
        const auto pm = PMap::from_table(ctx, t);
        const auto pt = random_rational_point(pm.coordinates.size(), rng);
        std::unordered_map<Symbol, Poly> env;
        for (std::size_t n = 0; n < pt.size(); ++n) env.emplace(pm.coordinates[n], Poly(pt[n]));
        const auto vals = p_eval(pm, pt);
        const auto idx = ctx.lambda_indices();
        for (std::size_t n = 0; n < idx.size(); ++n) EXPECT_EQ(Poly(vals[n]), t.lambda.at(idx[n]).substitute(env));
    }
}

TEST(PMap, JacobianRank) {
    std::mt19937_64 rng(11);
    for (int g = 1; g <= 3; ++g) {
        const GenusContext ctx(g);
        const auto pm = PMap::from_table(ctx, build_table(ctx));
        const std::vector<Rational> origin(pm.coordinates.size());
        EXPECT_EQ(p_jacobian_rank(pm, origin), static_cast<std::size_t>(g)) << "g=" << g;
        EXPECT_EQ(naive_rank(p_jacobian(pm, origin)), static_cast<std::size_t>(g));
        for (int n = 0; n < 10; ++n) {
            const auto pt = random_rational_point(pm.coordinates.size(), rng);
            const auto jac = p_jacobian(pm, pt);
            EXPECT_EQ(jac.rows(), static_cast<std::size_t>(2 * g));
            EXPECT_EQ(jac.cols(), static_cast<std::size_t>(3 * g));
            EXPECT_EQ(rank_exact(jac), static_cast<std::size_t>(2 * g));
            EXPECT_EQ(naive_rank(jac), rank_exact(jac));
        }
    }
}

TEST(PMap, JacobianMatchesFiniteDifferenceExactly) {
    // Each component is a polynomial of degree <= 3 in any single coordinate,
    // so the central difference with step h has error h^2/6 * f''' exactly.
    const GenusContext ctx(2);
    const auto pm = PMap::from_table(ctx, build_table(ctx));
    std::mt19937_64 rng(2);
    const auto pt = random_rational_point(pm.coordinates.size(), rng);
    const auto jac = p_jacobian(pm, pt);
    const Rational h(1, 1000);
    for (std::size_t c = 0; c < pt.size(); ++c) {
        auto up = pt, dn = pt;
        up[c] += h;
        dn[c] -= h;
        const auto fu = p_eval(pm, up), fd = p_eval(pm, dn);
        for (std::size_t r = 0; r < fu.size(); ++r) {
            const Rational fd_quot = (fu[r] - fd[r]) / (Rational(2) * h);
            const Rational third = pm.components[r].derivative(pm.coordinates[c]).derivative(pm.coordinates[c])
                                       .derivative(pm.coordinates[c]).constant_term();
            EXPECT_EQ(fd_quot - h * h * third / Rational(6), jac(r, c));
        }
    }
}
