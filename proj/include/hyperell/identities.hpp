#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

#include "hyperell/weierstrass.hpp"

namespace hyperell::numerics {

struct Residual {
    std::string name;
    cplx raw;
    double scale = 0.0;  // largest constituent term magnitude
    double scaled() const { return scale == 0.0 ? std::abs(raw) : std::abs(raw) / scale; }
};

struct ResidualReport {
    WpValues values;
    std::array<Residual, 4> residuals;

    double max_scaled() const {
        double m = 0.0;
        for (const auto& r : residuals) m = std::max(m, r.scaled());
        return m;
    }
};

namespace detail {
inline Residual residual(std::string name, std::initializer_list<cplx> terms) {
    Residual r{std::move(name), 0.0, 0.0};
    for (cplx t : terms) {
        r.raw += t;
        r.scale = std::max(r.scale, std::abs(t));
    }
    return r;
}
} // namespace detail

/// Genus-1 identities with p_{1,1} = p, p_{1,1,1} = p', p_{1,1,1,1} = p'':
///   p'' - 6p^2 - 2 lambda4
///   p'^2 - 4p^3 - 4 lambda4 p - 4 lambda6
///   lambda4 - (p''/2 - 3p^2)
///   lambda6 - (p'^2/4 - p p''/2 + 2p^3)
inline ResidualReport identity_residuals(const LatticeContext& ctx, cplx z) {
    const WpValues v = wp_all(ctx, z);
    const cplx p = v.p, dp = v.dp, ddp = v.ddp, l4 = ctx.lambda4, l6 = ctx.lambda6;
    return {v,
            {detail::residual("p'' - 6p^2 - 2la4", {ddp, -6.0 * p * p, -2.0 * l4}),
             detail::residual("p'^2 - 4p^3 - 4la4*p - 4la6", {dp * dp, -4.0 * p * p * p, -4.0 * l4 * p, -4.0 * l6}),
             detail::residual("la4 - (p''/2 - 3p^2)", {l4, -0.5 * ddp, 3.0 * p * p}),
             detail::residual("la6 - (p'^2/4 - p*p''/2 + 2p^3)", {l6, -0.25 * dp * dp, 0.5 * p * ddp, -2.0 * p * p * p})}};
}

} // namespace hyperell::numerics
