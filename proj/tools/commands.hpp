#pragma once

#include <cstdint>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperell/hyperell.hpp"
#include "hyperell/numerics.hpp"

namespace hyperell::cli {

enum ExitCode : int { ok = 0, usage = 2, verification_failure = 3, numeric_failure = 4 };

struct RunConfig {
    int genus = 1;
    std::string format = "text";
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int cutoff = 40;
    double pole_floor = 0.05;
    int samples = 10;
    int lattices = 6;
    int weight_bound = 8;
    std::string lambda;
    std::string point;
    std::optional<std::string> omega1, omega2;
    bool inject_fault = false;
};

namespace detail {
inline numerics::cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

inline std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
}
} // namespace detail

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const GenusContext ctx(cfg.genus);
        const auto table = build_table(ctx);
        out << (cfg.format == "tree" ? table_tree_text(table) : table_text(table));
        return ok;
    } catch (const internal_inconsistency& e) {
        err << "error: " << e.what() << "\n";
        return verification_failure;
    }
}

/// Uniformization, homogeneity, symmetry and path-independence suites.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const GenusContext ctx(cfg.genus);
    auto table = build_table(ctx);
    if (cfg.inject_fault) table.lambda.at(4) += Poly(1);

    std::vector<std::string> failures;
    const auto rep = uniformize_check(ctx, table);
    for (const auto& c : rep.checks) {
        out << c.line() << "\n";
        if (!c.zero()) failures.push_back(c.id.str());
    }

    std::size_t graded = 0;
    for (const auto& [id, eq] : variety_system(ctx).equations) {
        const int w = id.family == RelationId::Family::BEL1 ? id.i + 3 : id.i + id.j + 4;
        if (!eq.grading().compatible_with(w)) failures.push_back("weight of " + id.str());
        ++graded;
    }
    for (const auto& [s, p] : table.lambda) {
        if (!p.grading().compatible_with(s)) failures.push_back("weight of la" + std::to_string(s));
        ++graded;
    }
    for (const auto& [kl, p] : table.w) {
        if (!p.grading().compatible_with(kl.first + kl.second)) failures.push_back("weight of " + Symbol::w(kl.first, kl.second).name());
        ++graded;
    }
    out << "homogeneity: " << graded << " polynomials checked\n";

    std::size_t pairs = 0;
    for (int i : ctx.odd_indices())
        for (int j : ctx.odd_indices())
            if (i < j) {
                ++pairs;
                if (!(bel2(ctx, i, j) == bel2(ctx, j, i))) failures.push_back("symmetry of " + RelationId::bel2(i, j).str());
            }
    out << "symmetry: " << pairs << " pairs checked\n";

    const auto paths = path_independence(ctx, table);
    for (const auto& p : paths)
        if (!p.identical)
            failures.push_back("path " + Symbol::w(p.entry.first, p.entry.second).name() + " via " + p.via.str());
    out << "path-independence: " << paths.size() << " alternative derivations checked\n";

    out << rep.summary() << "\n";
    if (failures.empty()) return ok;
    for (const auto& f : failures) out << "FAILED: " << f << "\n";
    return verification_failure;
}

inline int reduce_one(const GenusContext& ctx, const RelationTable& table, const std::string& src, std::ostream& out,
                      std::ostream& err) {
    try {
        const auto e = parse(src, ctx);
        out << reduce(ctx, table, *e).str() << "\n";
        return ok;
    } catch (const unsupported_symbol& e) {
        err << "error: UnsupportedSymbol: " << e.what() << "\n"
            << "hint: only p[k,l], p[1,1,k], p[1,1,1,k] and la<s> reduce; higher multi-index closure is not supported\n";
    } catch (const syntax_error& e) {
        err << "error: SyntaxError: " << e.what() << "\n";
    } catch (const index_error& e) {
        err << "error: IndexError: " << e.what() << "\n";
    } catch (const division_by_zero_poly& e) {
        err << "error: DivisionByZeroPoly: " << e.what() << "\n";
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
    }
    return usage;
}

/// One expression, or one per line from `in` when `expr` is empty.
inline int cmd_reduce(const RunConfig& cfg, const std::string& expr, std::istream& in, std::ostream& out, std::ostream& err) {
    const GenusContext ctx(cfg.genus);
    const auto table = build_table(ctx);
    if (!expr.empty()) return reduce_one(ctx, table, expr, out, err);
    int status = ok;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (int s = reduce_one(ctx, table, line, out, err); s != ok) status = s;
    }
    return status;
}

inline int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const GenusContext ctx(cfg.genus);
    const auto pm = PMap::from_table(ctx, build_table(ctx));
    const std::size_t dim = pm.coordinates.size();
    const std::size_t full = pm.components.size();
    if (!cfg.point.empty()) {
        const auto pt = detail::parse_rationals(cfg.point);
        out << "rank " << p_jacobian_rank(pm, pt) << " at (" << detail::join(pt) << ")\n";
        return ok;
    }
    std::mt19937_64 rng(cfg.seed);
    int hits = 0;
    for (int n = 0; n < cfg.samples; ++n) hits += p_jacobian_rank(pm, random_rational_point(dim, rng)) == full;
    const std::vector<Rational> origin(dim, Rational(0));
    out << "rank " << full << " at " << hits << "/" << cfg.samples << " points; rank " << p_jacobian_rank(pm, origin)
        << " at origin\n";
    return hits == cfg.samples ? ok : verification_failure;
}

inline int cmd_disc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.lambda.empty()) {
        err << "error: disc needs --lambda\n";
        return usage;
    }
    const auto lv = LambdaVector::parse(cfg.genus, cfg.lambda);
    const auto d = discriminant(lv);
    out << "disc = " << d << "; lambda " << (d.is_zero() ? "IN" : "NOT IN") << " Sigma_g\n";
    return ok;
}

inline numerics::LatticeContext lattice_from(const RunConfig& cfg, std::mt19937_64& rng) {
    if (cfg.omega1 && cfg.omega2)
        return numerics::LatticeContext::make(detail::parse_complex(*cfg.omega1), detail::parse_complex(*cfg.omega2), cfg.cutoff,
                                              cfg.pole_floor);
    auto lat = numerics::random_lattice(rng, cfg.cutoff);
    lat.pole_floor = cfg.pole_floor;
    return lat;
}

/// Genus-1 identity residuals at seeded random (lattice, z) samples, plus the
/// symbolic lambda formulas evaluated on the numeric generator values.
inline int cmd_numeric(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    using namespace numerics;
    const GenusContext ctx(1);
    const auto pm = PMap::from_table(ctx, build_table(ctx));
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0, worst_p = 0.0;
    out << std::scientific << std::setprecision(3);
    for (int n = 0; n < cfg.samples; ++n) {
        const auto lat = lattice_from(cfg, rng);
        const cplx z = random_sample_point(lat, rng, lat.pole_floor);
        const auto rep = identity_residuals(lat, z);
        const std::vector<cplx> b{rep.values.p, rep.values.dp, rep.values.ddp};
        const auto lam = pm.evaluate<cplx>(std::span<const cplx>(b), [](const Rational& r) { return cplx(r.to_double()); });
        const double perr = std::max(std::abs(lam[0] - lat.lambda4) / std::abs(lat.lambda4),
                                     std::abs(lam[1] - lat.lambda6) / std::max(std::abs(lat.lambda6), std::abs(lat.lambda4)));
        out << "sample " << n << ":";
        for (const auto& r : rep.residuals) out << " " << r.scaled();
        out << " p(b)-lambda " << perr << "\n";
        worst = std::max(worst, rep.max_scaled());
        worst_p = std::max(worst_p, perr);
    }
    const bool pass = worst < cfg.tol && worst_p < cfg.tol;
    out << "max scaled residual " << worst << "; max p(b) deviation " << worst_p << "; tol " << cfg.tol << " -> "
        << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? ok : numeric_failure;
}

inline int cmd_independence(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    using namespace numerics;
    IndependenceConfig family;
    family.lattice_count = cfg.lattices;
    family.samples_per_lattice = cfg.samples;
    family.weight_bound = cfg.weight_bound;
    family.seed = cfg.seed;
    family.rows = cfg.cutoff;
    const auto fam = independence_experiment(family);
    out << "family: " << cfg.lattices << " lattices, generators p, dp, ddp, weight <= " << cfg.weight_bound << "\n" << fam.str();

    IndependenceConfig control = family;
    control.lattice_count = 1;
    control.weight_bound = 6;
    control.samples_per_lattice = cfg.samples;
    const auto single = independence_experiment(control);
    out << "single-lattice control: generators p, dp, weight <= 6\n" << single.str();
    return fam.full_rank && single.deficiency == 1 ? ok : numeric_failure;
}

} // namespace hyperell::cli
