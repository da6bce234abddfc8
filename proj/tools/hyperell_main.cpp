#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace hyperell::cli;
    CLI::App app{"Exact genus-g hyperelliptic function engine"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string expr;

    auto genus = [&](CLI::App* sub) {
        sub->add_option("--genus,-g", cfg.genus, "Genus g >= 1")->check(CLI::Range(1, 64));
    };
    auto numeric_opts = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--cutoff", cfg.cutoff, "Lattice rows summed on each side (>= 20)")->check(CLI::Range(20, 400));
        sub->add_option("--pole-floor", cfg.pole_floor, "Minimum distance to the lattice, in shortest periods")->check(CLI::PositiveNumber);
    };

    auto* table = app.add_subcommand("table", "Print lambda_s and w_{k,l} as polynomials in the generators");
    genus(table);
    table->add_option("--format", cfg.format, "text or tree")->check(CLI::IsMember({"text", "tree"}));

    auto* verify = app.add_subcommand("verify", "Check that the generators uniformize S_g");
    genus(verify);
    verify->add_flag("--inject-fault", cfg.inject_fault, "Test hook: perturb lambda_4 by +1 before checking");

    auto* reduce = app.add_subcommand("reduce", "Reduce an expression to a rational function in the generators");
    genus(reduce);
    reduce->add_option("expr", expr, "Expression; read one per line from stdin when omitted");

    auto* rank = app.add_subcommand("rank", "Exact Jacobian rank of p at random rational points");
    genus(rank);
    rank->add_option("--samples", cfg.samples, "Number of random points")->check(CLI::PositiveNumber);
    rank->add_option("--seed", cfg.seed, "Random seed");
    rank->add_option("--point", cfg.point, "Comma-separated rational point (3g values)");

    auto* disc = app.add_subcommand("disc", "Discriminant of the curve and membership in Sigma_g");
    genus(disc);
    disc->add_option("--lambda", cfg.lambda, "Comma-separated lambda_4, lambda_6, ...")->required();

    auto* numeric = app.add_subcommand("numeric", "Genus-1 numeric residuals of the relations");
    numeric->add_option("--samples", cfg.samples, "Number of (lattice, z) samples")->check(CLI::PositiveNumber);
    numeric->add_option("--tol", cfg.tol, "Tolerance on scaled residuals")->check(CLI::PositiveNumber);
    numeric->add_option("--omega1", cfg.omega1, "Fixed period as re,im");
    numeric->add_option("--omega2", cfg.omega2, "Fixed period as re,im");
    numeric_opts(numeric);

    auto* indep = app.add_subcommand("independence", "Genus-1 monomial rank experiment");
    indep->add_option("--lattices", cfg.lattices, "Lattices in the family")->check(CLI::Range(2, 1000));
    int indep_samples = 40;
    indep->add_option("--samples", indep_samples, "Samples per lattice")->check(CLI::PositiveNumber);
    indep->add_option("--weight-bound", cfg.weight_bound, "Maximum monomial weight")->check(CLI::Range(6, 24));
    numeric_opts(indep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*table) return cmd_table(cfg, std::cout, std::cerr);
        if (*verify) return cmd_verify(cfg, std::cout, std::cerr);
        if (*reduce) return cmd_reduce(cfg, expr, std::cin, std::cout, std::cerr);
        if (*rank) return cmd_rank(cfg, std::cout, std::cerr);
        if (*disc) return cmd_disc(cfg, std::cout, std::cerr);
        if (*numeric) return cmd_numeric(cfg, std::cout, std::cerr);
        if (*indep) {
            cfg.samples = indep_samples;
            return cmd_independence(cfg, std::cout, std::cerr);
        }
    } catch (const hyperell::near_pole& e) {
        std::cerr << "error: " << e.what() << "\n";
        return numeric_failure;
    } catch (const hyperell::degenerate_lattice& e) {
        std::cerr << "error: " << e.what() << "\n";
        return numeric_failure;
    } catch (const hyperell::internal_inconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verification_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
