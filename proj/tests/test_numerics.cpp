#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperell/numerics.hpp"
#include "hyperell/variety.hpp"

using namespace hyperell;
using namespace hyperell::numerics;

namespace {

const cplx I(0.0, 1.0);

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Plain symmetric lattice sum over |m|,|n| <= n_max; slow but independent.
WpValues direct_sum(cplx w1, cplx w2, cplx z, int n_max) {
    WpValues v{1.0 / (z * z), -2.0 / (z * z * z), 6.0 / (z * z * z * z)};
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            if (!m && !n) continue;
            const cplx w = static_cast<double>(m) * w1 + static_cast<double>(n) * w2, d = z - w;
            v.p += 1.0 / (d * d) - 1.0 / (w * w);
            v.dp += -2.0 / (d * d * d);
            v.ddp += 6.0 / (d * d * d * d);
        }
    return v;
}

} // namespace

TEST(Eisenstein, SpecialLattices) {
    const auto square = eisenstein(1.0, I);
    EXPECT_LT(std::abs(square.g3), 1e-10 * std::abs(square.g2));
    EXPECT_NEAR(square.g2.imag(), 0.0, 1e-9);
    // g2 of the unit square lattice is Gamma(1/4)^8 / (16 pi^2) ~ 189.0727.
    EXPECT_NEAR(square.g2.real(), std::pow(std::tgamma(0.25), 8) / (16.0 * std::numbers::pi * std::numbers::pi), 1e-8);
    const auto hex = eisenstein(1.0, std::polar(1.0, std::numbers::pi / 3));
    EXPECT_LT(std::abs(hex.g2), 1e-10 * std::abs(hex.g3));
}

TEST(Eisenstein, HomogeneityAndCutoffStability) {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 5; ++n) {
        const auto lat = random_lattice(rng);
        const auto a = eisenstein(lat.omega1, lat.omega2, 40), b = eisenstein(lat.omega1, lat.omega2, 80);
        EXPECT_LT(std::abs(a.g2 - b.g2), 1e-10 * std::abs(b.g2));
        EXPECT_LT(std::abs(a.g3 - b.g3), 1e-10 * std::max(1.0, std::abs(b.g3)));
        // g2(c L) = c^-4 g2(L), g3(c L) = c^-6 g3(L)
        const cplx c(0.7, 0.4);
        const auto s = eisenstein(c * lat.omega1, c * lat.omega2);
        EXPECT_LT(std::abs(s.g2 - a.g2 / std::pow(c, 4)), 1e-10 * std::abs(s.g2));
        EXPECT_LT(std::abs(s.g3 - a.g3 / std::pow(c, 6)), 1e-10 * std::max(1.0, std::abs(s.g3)));
        // Swapping the basis does not change the lattice.
        const auto t = eisenstein(lat.omega2, lat.omega1 + lat.omega2);
        EXPECT_LT(std::abs(t.g2 - a.g2), 1e-9 * std::abs(a.g2));
    }
    EXPECT_THROW(eisenstein(1.0, I, 10), error);
}

TEST(Weierstrass, MatchesDirectLatticeSum) {
    const cplx w1(1.0, 0.1), w2(0.3, 1.2);
    const auto ctx = LatticeContext::make(w1, w2);
    for (cplx z : {cplx(0.31, 0.22), cplx(0.5, 0.6), cplx(-0.2, 0.45)}) {
        const auto fast = wp_all(ctx, z), slow = direct_sum(w1, w2, z, 200);
        EXPECT_LT(rel(fast.p, slow.p), 1e-4);
        EXPECT_LT(rel(fast.dp, slow.dp), 1e-4);
        EXPECT_LT(rel(fast.ddp, slow.ddp), 1e-4);
    }
}

TEST(Weierstrass, ParityPeriodicityDerivative) {
    std::mt19937_64 rng(9);
    for (int n = 0; n < 5; ++n) {
        const auto ctx = random_lattice(rng);
        const cplx z = random_sample_point(ctx, rng, 0.15);
        const auto v = wp_all(ctx, z), m = wp_all(ctx, -z);
        EXPECT_LT(rel(m.p, v.p), 1e-11);
        EXPECT_LT(rel(m.dp, -v.dp), 1e-11);
        EXPECT_LT(rel(m.ddp, v.ddp), 1e-11);
        for (cplx shift : {ctx.omega1, ctx.omega2, ctx.omega1 - ctx.omega2}) {
            const auto s = wp_all(ctx, z + shift);
            EXPECT_LT(rel(s.p, v.p), 1e-10);
            EXPECT_LT(rel(s.dp, v.dp), 1e-10);
        }
        const double h = 1e-4 * std::abs(ctx.omega1);
        const cplx dir = ctx.omega1 / std::abs(ctx.omega1);
        const cplx fd = (wp(ctx, z + h * dir) - wp(ctx, z - h * dir)) / (2.0 * h * dir);
        EXPECT_LT(rel(fd, v.dp), 1e-6);
        const cplx fd2 = (wp_prime(ctx, z + h * dir) - wp_prime(ctx, z - h * dir)) / (2.0 * h * dir);
        EXPECT_LT(rel(fd2, v.ddp), 1e-6);
    }
}

TEST(Weierstrass, CutoffDoublingStable) {
    const auto a = LatticeContext::make(cplx(1.0, 0.2), cplx(-0.4, 0.9), 40);
    const auto b = LatticeContext::make(cplx(1.0, 0.2), cplx(-0.4, 0.9), 80);
    const cplx z(0.27, 0.31);
    EXPECT_LT(rel(wp(a, z), wp(b, z)), 1e-10);
    EXPECT_LT(rel(wp_prime(a, z), wp_prime(b, z)), 1e-10);
}

TEST(Identities, HoldOnRandomLattices) {
    std::mt19937_64 rng(21);
    int samples = 0;
    for (int l = 0; l < 5; ++l) {
        const auto ctx = random_lattice(rng);
        for (int s = 0; s < 5; ++s, ++samples) {
            const cplx z = random_sample_point(ctx, rng, 0.05);
            const auto rep = identity_residuals(ctx, z);
            EXPECT_LT(rep.max_scaled(), 1e-8);
            // Same values one period away.
            EXPECT_LT(identity_residuals(ctx, z + ctx.omega2).max_scaled(), 1e-8);
        }
    }
    EXPECT_GE(samples, 20);
}

TEST(Identities, DetectPerturbedLambda) {
    auto ctx = LatticeContext::make(1.0, cplx(0.2, 1.1));
    ctx.lambda6 += 1.0;
    const auto rep = identity_residuals(ctx, cplx(0.3, 0.4));
    EXPECT_NEAR(rep.residuals[1].raw.real(), -4.0, 1e-8);
    EXPECT_NEAR(rep.residuals[1].raw.imag(), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(rep.residuals[3].raw), 1.0, 1e-8);
    EXPECT_LT(rep.residuals[0].scaled(), 1e-8);
}

TEST(Identities, PolynomialMapRecoversCurveParameters) {
    const GenusContext g1(1);
    const auto pm = PMap::from_table(g1, build_table(g1));
    std::mt19937_64 rng(14);
    for (int n = 0; n < 5; ++n) {
        const auto ctx = random_lattice(rng);
        const auto v = wp_all(ctx, random_sample_point(ctx, rng, 0.1));
        const std::vector<cplx> b{v.p, v.dp, v.ddp};
        const auto lam = pm.evaluate<cplx>(std::span<const cplx>(b), [](const Rational& r) { return cplx(r.to_double()); });
        EXPECT_LT(rel(lam[0], ctx.lambda4), 1e-9);
        EXPECT_LT(rel(lam[1], ctx.lambda6), 1e-9);
    }
}

TEST(Weierstrass, Errors) {
    const auto ctx = LatticeContext::make(1.0, I);
    EXPECT_THROW(wp(ctx, 0.0), near_pole);
    EXPECT_THROW(wp(ctx, cplx(1.0, 1.0) + 1e-4), near_pole);
    EXPECT_NO_THROW(wp(ctx, cplx(0.5, 0.5)));
    EXPECT_THROW(LatticeContext::make(1.0, 2.0), degenerate_lattice);
    EXPECT_THROW(LatticeContext::make(0.0, I), degenerate_lattice);
    EXPECT_THROW(eisenstein(1.0, -3.0), degenerate_lattice);
    // Lower half-plane tau is flipped, not rejected.
    const auto flipped = LatticeContext::make(1.0, -I);
    EXPECT_GT(flipped.tau().imag(), 0.0);
    EXPECT_LT(rel(flipped.g2, ctx.g2), 1e-12);
}

TEST(Independence, MonomialBasis) {
    EXPECT_EQ(wp_monomials(4, true).size(), 5u);
    EXPECT_EQ(wp_monomials(4, false).size(), 4u);
    const auto six = wp_monomials(6, false);
    ASSERT_EQ(six.size(), 7u);
    EXPECT_EQ(six[5].str(), "p^3");
    EXPECT_EQ(six[6].str(), "dp^2");
    for (std::size_t j = 1; j < six.size(); ++j) EXPECT_LE(six[j - 1].weight(), six[j].weight());
}

TEST(Independence, LatticeFamilyFullRank) {
    IndependenceConfig cfg;
    const auto rep = independence_experiment(cfg);
    EXPECT_TRUE(cfg.uses_second());
    EXPECT_TRUE(rep.full_rank);
    EXPECT_GT(rep.sigma_ratio, 1e-6);
    EXPECT_EQ(rep.lattices.size(), 6u);
    EXPECT_FALSE(rep.kernel.has_value());
    EXPECT_NE(rep.str().find("verdict FULL RANK"), std::string::npos);
}

TEST(Independence, SingleLatticeRecoversCubic) {
    IndependenceConfig cfg;
    cfg.lattice_count = 1;
    cfg.weight_bound = 6;
    const auto rep = independence_experiment(cfg);
    EXPECT_FALSE(cfg.uses_second());
    EXPECT_EQ(rep.deficiency, 1u);
    ASSERT_TRUE(rep.kernel.has_value());
    const auto& k = *rep.kernel;
    const auto& lat = rep.lattices.front();
    const std::vector<cplx> expect{-4.0 * lat.lambda6, -4.0 * lat.lambda4, 0.0, 0.0, 0.0, -4.0, 1.0};
    ASSERT_EQ(k.size(), expect.size());
    double scale = 0.0;
    for (auto e : expect) scale = std::max(scale, std::abs(e));
    for (std::size_t j = 0; j < k.size(); ++j) EXPECT_LT(std::abs(k[j] - expect[j]), 1e-5 * scale) << j;
    EXPECT_NE(rep.str().find("verdict DEFICIENCY 1"), std::string::npos);
}

TEST(Independence, SingleLatticeDeficiencyByWeight) {
    IndependenceConfig cfg;
    cfg.lattice_count = 1;
    const std::pair<int, std::size_t> cases[] = {{4, 0}, {5, 0}, {6, 1}, {7, 1}, {8, 2}};
    for (auto [bound, deficiency] : cases) {
        cfg.weight_bound = bound;
        EXPECT_EQ(independence_experiment(cfg).deficiency, deficiency) << "weight " << bound;
    }
    // With p'' in the basis the fixed curve already has a relation at weight 4.
    cfg.include_second = true;
    cfg.weight_bound = 4;
    EXPECT_EQ(independence_experiment(cfg).deficiency, 1u);
}

TEST(Independence, FamilyFullRankAcrossSeeds) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        IndependenceConfig cfg;
        cfg.seed = seed;
        const auto rep = independence_experiment(cfg);
        EXPECT_TRUE(rep.full_rank) << "seed " << seed << " ratio " << rep.sigma_ratio;
    }
}

TEST(Independence, Errors) {
    IndependenceConfig cfg;
    cfg.lattice_count = 1;
    cfg.samples_per_lattice = 3;
    EXPECT_THROW(independence_experiment(cfg), insufficient_samples);
    cfg.samples_per_lattice = 40;
    cfg.weight_bound = 3;
    EXPECT_THROW(independence_experiment(cfg), error);
}

TEST(Independence, Deterministic) {
    IndependenceConfig cfg;
    cfg.lattice_count = 2;
    cfg.samples_per_lattice = 15;
    EXPECT_EQ(independence_experiment(cfg).str(), independence_experiment(cfg).str());
}
