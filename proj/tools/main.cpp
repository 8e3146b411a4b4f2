#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    using uqaff::cli::RunConfig;
    CLI::App app{"Exact checks for the two-parameter quantum affine sl2 and its spectral R-matrix"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--N", cfg.N, "size of the cyclic block (representation dimension 2N)");
        sub->add_option("--q", cfg.q, "q: 'q' for symbolic, or a real number (numeric ybe)");
        sub->add_option("--a", cfg.a, "second parameter; the representation fixes a = q^-2*w");
        sub->add_option("--order", cfg.order, "series truncation order K");
        sub->add_option("--height", cfg.height, "height bound (relations, pairing) or n bound (rep)");
        sub->add_option("--mode", cfg.mode, "rmatrix: atoms|series; ybe: exact|numeric");
        sub->add_option("--out", cfg.out, "export path");
        sub->add_option("--format", cfg.format, "export format: json|text");
        sub->add_option("--z", cfg.z, "spectral parameter z (numeric ybe)");
        sub->add_option("--w", cfg.w, "spectral parameter w (numeric ybe)");
    };
    auto* rel = app.add_subcommand("relations", "root-vector relation suite");
    common(rel);
    rel->add_option("--perturb", cfg.perturb, "scale all but the first term (negative control)");
    common(app.add_subcommand("pairing", "PBW Gram matrices of the Drinfeld pairing"));
    common(app.add_subcommand("rep", "vector representation checks and export"));
    common(app.add_subcommand("rmatrix", "assemble R(z) and compare with the closed forms"));
    common(app.add_subcommand("ybe", "Yang-Baxter equation, exact or numeric"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        return uqaff::cli::run(cfg, std::cout);
    } catch (const uqaff::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
