#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "hyperell/errors.hpp"

namespace hyperell::numerics {

using cplx = std::complex<double>;

namespace detail {

// Row sums over the lattice direction omega1 are done in closed form:
//   S_k(u) = sum_n (u + n)^{-k} = pi^k csc^2(pi u) R_k(cot(pi u)),
//   R_2 = 1,  R_{k+1} = (2c R_k + (1 + c^2) R_k') / k.
// The remaining sum over rows converges like exp(-2 pi |m| Im tau).
inline const std::vector<std::vector<double>>& cot_polys() {
    static const auto polys = [] {
        std::vector<std::vector<double>> r(7);
        r[2] = {1.0};
        for (int k = 2; k < 6; ++k) {
            const auto& p = r[static_cast<std::size_t>(k)];
            std::vector<double> next(p.size() + 1, 0.0);
            for (std::size_t d = 0; d < p.size(); ++d) {
                next[d + 1] += 2.0 * p[d];                           // 2c R
                if (d >= 1) {
                    next[d - 1] += static_cast<double>(d) * p[d];    // R'
                    next[d + 1] += static_cast<double>(d) * p[d];    // c^2 R'
                }
            }
            for (auto& x : next) x /= k;
            r[static_cast<std::size_t>(k + 1)] = std::move(next);
        }
        return r;
    }();
    return polys;
}

/// cot(pi u) and csc^2(pi u), stable for large |Im u|.
inline std::pair<cplx, cplx> cot_csc2(cplx u) {
    const cplx i(0.0, 1.0);
    const double pi = std::numbers::pi;
    if (u.imag() >= 0) {
        const cplx q = std::exp(2.0 * pi * i * u);
        return {i * (q + 1.0) / (q - 1.0), -4.0 * q / ((q - 1.0) * (q - 1.0))};
    }
    const cplx q = std::exp(-2.0 * pi * i * u);
    return {i * (1.0 + q) / (1.0 - q), -4.0 * q / ((1.0 - q) * (1.0 - q))};
}

inline cplx row_sum(int k, cplx u) {
    const auto& p = cot_polys().at(static_cast<std::size_t>(k));
    auto [c, s] = cot_csc2(u);
    cplx acc = 0.0;
    for (std::size_t d = p.size(); d-- > 0;) acc = acc * c + p[d];
    return std::pow(std::numbers::pi, k) * s * acc;
}

} // namespace detail

/// sum_n (u+n)^{-k} for k in 2..6.
inline cplx integer_shift_sum(int k, cplx u) {
    if (k < 2 || k > 6) throw error("integer_shift_sum: k must be in 2..6");
    return detail::row_sum(k, u);
}

struct EisensteinInvariants {
    cplx g2;
    cplx g3;
};

/// g2 = 60 sum' w^-4, g3 = 140 sum' w^-6 over the lattice Z omega1 + Z omega2,
/// using `rows` lattice rows on each side of the origin.
inline EisensteinInvariants eisenstein(cplx omega1, cplx omega2, int rows = 40) {
    if (rows < 20) throw error("eisenstein: cutoff must be at least 20 lattice rows");
    if (std::abs(omega1) == 0.0 || std::abs(omega2) == 0.0) throw degenerate_lattice("zero period");
    cplx tau = omega2 / omega1;
    if (std::abs(tau.imag()) < 1e-9 * std::abs(tau)) throw degenerate_lattice("periods are linearly dependent over R");
    if (tau.imag() < 0) tau = -tau;
    const double pi = std::numbers::pi;
    cplx s4 = 2.0 * std::pow(pi, 4) / 90.0, s6 = 2.0 * std::pow(pi, 6) / 945.0;
    for (int m = rows; m >= 1; --m) {
        const cplx u = static_cast<double>(m) * tau;
        s4 += detail::row_sum(4, u) + detail::row_sum(4, -u);
        s6 += detail::row_sum(6, u) + detail::row_sum(6, -u);
    }
    return {60.0 * s4 / std::pow(omega1, 4), 140.0 * s6 / std::pow(omega1, 6)};
}

/// Genus-1 lattice data. lambda4 = -g2/4 and lambda6 = -g3/4 match the
/// cubic p'^2 = 4p^3 + 4 lambda4 p + 4 lambda6.
struct LatticeContext {
    cplx omega1;
    cplx omega2;
    cplx g2;
    cplx g3;
    cplx lambda4;
    cplx lambda6;
    int rows = 40;
    double pole_floor = 0.05;

    static LatticeContext make(cplx omega1, cplx omega2, int rows = 40, double pole_floor = 0.05) {
        if (std::abs(omega1) == 0.0) throw degenerate_lattice("zero period");
        cplx tau = omega2 / omega1;
        if (std::abs(tau.imag()) < 1e-9 * std::abs(tau)) throw degenerate_lattice("periods are linearly dependent over R");
        if (tau.imag() < 0) omega2 = -omega2;
        const auto inv = eisenstein(omega1, omega2, rows);
        const cplx disc = inv.g2 * inv.g2 * inv.g2 - 27.0 * inv.g3 * inv.g3;
        if (std::abs(disc) < 1e-12 * std::pow(std::abs(inv.g2) + std::abs(inv.g3), 3))
            throw degenerate_lattice("vanishing discriminant");
        return {omega1, omega2, inv.g2, inv.g3, -inv.g2 / 4.0, -inv.g3 / 4.0, rows, pole_floor};
    }

    cplx tau() const { return omega2 / omega1; }

    /// Length of the shortest nonzero lattice vector.
    double min_period() const {
        double best = std::abs(omega1);
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                if (a || b) best = std::min(best, std::abs(static_cast<double>(a) * omega1 + static_cast<double>(b) * omega2));
        return best;
    }

    /// Distance from z to the nearest lattice point.
    double lattice_distance(cplx z) const {
        // Solve z = x omega1 + y omega2 over the reals.
        const double det = (std::conj(omega1) * omega2).imag();
        const double x = (std::conj(z) * omega2).imag() / det;
        const double y = (std::conj(omega1) * z).imag() / det;
        double best = std::abs(z);
        for (int a = -1; a <= 2; ++a)
            for (int b = -1; b <= 2; ++b) {
                const cplx w = (std::floor(x) + a) * omega1 + (std::floor(y) + b) * omega2;
                best = std::min(best, std::abs(z - w));
            }
        return best;
    }

    void require_regular(cplx z) const {
        if (lattice_distance(z) < pole_floor * min_period()) throw near_pole("sample point within the pole floor of a lattice point");
    }
};

/// (p, p', p'') at one point.
struct WpValues {
    cplx p;
    cplx dp;
    cplx ddp;
};

/// Weierstrass function and its first two derivatives:
///   p   = z^-2 + sum' [(z-w)^-2 - w^-2]
///   p'  = -2 sum (z-w)^-3,   p'' = 6 sum (z-w)^-4
inline WpValues wp_all(const LatticeContext& ctx, cplx z) {
    ctx.require_regular(z);
    const cplx tau = ctx.tau();
    const cplx u = z / ctx.omega1;
    const double pi = std::numbers::pi;
    cplx s2 = 0.0, s3 = 0.0, s4 = 0.0, g2sum = std::pow(pi, 2) / 3.0;
    for (int m = ctx.rows; m >= 1; --m) {
        const cplx mt = static_cast<double>(m) * tau;
        for (cplx v : {u - mt, u + mt}) {
            s2 += detail::row_sum(2, v);
            s3 += detail::row_sum(3, v);
            s4 += detail::row_sum(4, v);
        }
        g2sum += detail::row_sum(2, mt) + detail::row_sum(2, -mt);
    }
    s2 += detail::row_sum(2, u);
    s3 += detail::row_sum(3, u);
    s4 += detail::row_sum(4, u);
    const cplx w1 = ctx.omega1;
    return {(s2 - g2sum) / (w1 * w1), -2.0 * s3 / std::pow(w1, 3), 6.0 * s4 / std::pow(w1, 4)};
}

inline cplx wp(const LatticeContext& ctx, cplx z) { return wp_all(ctx, z).p; }
inline cplx wp_prime(const LatticeContext& ctx, cplx z) { return wp_all(ctx, z).dp; }
inline cplx wp_second(const LatticeContext& ctx, cplx z) { return wp_all(ctx, z).ddp; }

} // namespace hyperell::numerics
