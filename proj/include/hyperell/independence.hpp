#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/weierstrass.hpp"

namespace hyperell::numerics {

/// Exponents (a, b, c) of p^a p'^b p''^c; graded weight 2a + 3b + 4c.
struct WpMonomial {
    int a = 0, b = 0, c = 0;
    int weight() const { return 2 * a + 3 * b + 4 * c; }
    std::string str() const {
        std::string out;
        auto put = [&](const char* name, int e) {
            if (!e) return;
            if (!out.empty()) out += '*';
            out += name;
            if (e > 1) out += '^' + std::to_string(e);
        };
        put("p", a);
        put("dp", b);
        put("ddp", c);
        return out.empty() ? "1" : out;
    }
    cplx eval(const WpValues& v) const { return std::pow(v.p, a) * std::pow(v.dp, b) * std::pow(v.ddp, c); }
    friend bool operator==(const WpMonomial&, const WpMonomial&) = default;
};

/// Monomials of weight <= bound, ascending by weight. With include_second
/// unset, p'' is left out of the basis.
inline std::vector<WpMonomial> wp_monomials(int weight_bound, bool include_second = true) {
    std::vector<WpMonomial> out;
    for (int w = 0; w <= weight_bound; ++w)
        for (int c = 0; 4 * c <= w; ++c)
            for (int b = 0; 3 * b + 4 * c <= w; ++b) {
                const int rest = w - 3 * b - 4 * c;
                if (rest % 2) continue;
                if (c && !include_second) continue;
                out.push_back({rest / 2, b, c});
            }
    return out;
}

/// Either a lattice family (several lattices, full generator set p, p', p'')
/// or the fixed-curve control (one lattice, p and p' only, since p'' is
/// already the polynomial 6p^2 + 2 lambda4 on a fixed curve).
struct IndependenceConfig {
    int lattice_count = 6;
    int samples_per_lattice = 40;
    int weight_bound = 8;
    std::uint64_t seed = 7;
    double threshold = 1e-6;
    double sample_floor = 0.2;  // minimum distance to the lattice, in units of the shortest period
    int rows = 40;
    std::optional<bool> include_second;  // default: true for families, false for a single lattice

    bool uses_second() const { return include_second.value_or(lattice_count > 1); }
};

struct RankReport {
    std::vector<WpMonomial> monomials;
    std::size_t rows = 0;
    std::vector<double> singular_values;  // descending
    double sigma_ratio = 0.0;             // sigma_min / sigma_max
    std::size_t deficiency = 0;           // count of sigma_i / sigma_max <= threshold
    bool full_rank = false;
    std::vector<LatticeContext> lattices;
    std::optional<std::vector<cplx>> kernel;  // single-lattice mode, in monomial coordinates

    std::string str() const {
        std::ostringstream os;
        os << "columns " << monomials.size() << "\n";
        os << "rows " << rows << "\n";
        os << "sigma_min/sigma_max " << std::scientific << std::setprecision(3) << sigma_ratio << "\n";
        os << "verdict " << (full_rank ? std::string("FULL RANK") : "DEFICIENCY " + std::to_string(deficiency)) << "\n";
        if (kernel) {
            os << "kernel";
            os << std::fixed << std::setprecision(6);
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                const cplx k = (*kernel)[j];
                if (std::abs(k) < 5e-7) continue;
                os << " [" << monomials[j].str() << ": " << k.real() << (k.imag() < 0 ? "-" : "+") << std::abs(k.imag()) << "i]";
            }
            os << "\n";
        }
        return os.str();
    }
};

/// Random lattice: omega1 = r e^{i theta}, tau with |Re| <= 1/2, Im in [0.8, 1.6].
inline LatticeContext random_lattice(std::mt19937_64& rng, int rows = 40) {
    std::uniform_real_distribution<double> scale(0.8, 1.25), angle(0.0, 2.0 * std::numbers::pi), re(-0.5, 0.5), im(0.8, 1.6);
    for (;;) {
        const cplx omega1 = std::polar(scale(rng), angle(rng));
        const double x = re(rng);
        const double y = im(rng);
        const cplx tau(x, y);
        try {
            return LatticeContext::make(omega1, omega1 * tau, rows);
        } catch (const degenerate_lattice&) {
        }
    }
}

/// Uniform point of the fundamental cell at least `floor` shortest periods
/// away from every lattice point.
inline cplx random_sample_point(const LatticeContext& ctx, std::mt19937_64& rng, double floor) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double limit = std::max(floor, ctx.pole_floor) * ctx.min_period();
    for (;;) {
        const cplx z = unit(rng) * ctx.omega1 + unit(rng) * ctx.omega2;
        if (ctx.lattice_distance(z) >= limit) return z;
    }
}

/// Rank of the sample-by-monomial matrix; a kernel vector would be an
/// algebraic relation among p, p', p'' holding at every sample.
inline RankReport independence_experiment(const IndependenceConfig& cfg) {
    if (cfg.weight_bound < 4) throw error("independence_experiment: weight bound must be >= 4");
    if (cfg.lattice_count < 1 || cfg.samples_per_lattice < 1) throw insufficient_samples("no samples requested");
    RankReport rep;
    rep.monomials = wp_monomials(cfg.weight_bound, cfg.uses_second());
    const std::size_t cols = rep.monomials.size();
    rep.rows = static_cast<std::size_t>(cfg.lattice_count) * static_cast<std::size_t>(cfg.samples_per_lattice);
    if (rep.rows < cols)
        throw insufficient_samples(std::to_string(rep.rows) + " samples for " + std::to_string(cols) + " monomials");

    std::mt19937_64 rng(cfg.seed);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rep.rows), static_cast<Eigen::Index>(cols));
    Eigen::Index r = 0;
    for (int l = 0; l < cfg.lattice_count; ++l) {
        rep.lattices.push_back(random_lattice(rng, cfg.rows));
        const auto& lat = rep.lattices.back();
        for (int s = 0; s < cfg.samples_per_lattice; ++s, ++r) {
            const auto v = wp_all(lat, random_sample_point(lat, rng, cfg.sample_floor));
            for (std::size_t j = 0; j < cols; ++j) m(r, static_cast<Eigen::Index>(j)) = rep.monomials[j].eval(v);
        }
    }
    Eigen::VectorXd norms(static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        norms(j) = m.col(j).norm();
        m.col(j) /= norms(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    rep.singular_values.assign(sv.data(), sv.data() + sv.size());
    rep.sigma_ratio = sv(sv.size() - 1) / sv(0);
    for (Eigen::Index j = 0; j < sv.size(); ++j) rep.deficiency += sv(j) / sv(0) <= cfg.threshold;
    rep.full_rank = rep.deficiency == 0;

    if (cfg.lattice_count == 1) {
        // Undo the column scaling and normalize on the highest-weight entry.
        Eigen::VectorXcd v = svd.matrixV().col(svd.matrixV().cols() - 1);
        std::vector<cplx> k(cols);
        double largest = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            k[j] = v(static_cast<Eigen::Index>(j)) / norms(static_cast<Eigen::Index>(j));
            largest = std::max(largest, std::abs(k[j]));
        }
        std::size_t pivot = 0;
        for (std::size_t j = 0; j < cols; ++j)
            if (std::abs(k[j]) > 1e-8 * largest) pivot = j;
        const cplx lead = k[pivot];
        for (auto& x : k) x /= lead;
        rep.kernel = std::move(k);
    }
    return rep;
}

} // namespace hyperell::numerics
