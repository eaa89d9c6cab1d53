// catideal: batch front end: parse category/complex description documents,
// dispatch the ideal/homology/axiom computations, and emit reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "catideal/commands.hpp"

using namespace catideal;

int main(int argc, char** argv) {
    CLI::App app{"exact ideal-theoretic homology in finite additive categories"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    std::string out_path;
    CommandOptions opt;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--seed", opt.seed, "seed for all fuzz sampling");
    app.add_option("--enum-cap", opt.enum_cap, "cap for exhaustive element searches");

    std::string catref, cplxref, listref, side = "right", action = "saturate", variant = "right";
    std::vector<std::string> gens;

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a category document");
    validate_cmd->add_option("category", catref, "bundled name or path")->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "saturate generators and run an ideal action");
    ideal_cmd->add_option("category", catref)->required();
    ideal_cmd->add_option("--side", side, "left | right | two-sided");
    ideal_cmd->add_option("--gen", gens, "generator morphism, e.g. Z4>Z2:1 (repeatable)");
    ideal_cmd->add_option("--action", action,
                          "saturate | ker | coker | im | coim | closed | principal | kernel-exists");

    auto* hom_cmd = app.add_subcommand("homology", "homology of a complex document");
    hom_cmd->add_option("category", catref)->required();
    hom_cmd->add_option("complex", cplxref)->required();
    hom_cmd->add_option("--variant", variant, "right | left | classical | compare");

    auto* ax_cmd = app.add_subcommand("axioms", "run the axiom suite");
    ax_cmd->add_option("category", catref)->required();

    auto* k_cmd = app.add_subcommand("khomotopy", "homotopy category of a declared complex list");
    k_cmd->add_option("category", catref)->required();
    k_cmd->add_option("complexes", listref)->required();

    CLI11_PARSE(app, argc, argv);

    Report rep = run_guarded([&]() -> Report {
        if (validate_cmd->parsed()) return cmd_validate(catref);
        if (ideal_cmd->parsed()) return cmd_ideal(catref, side, gens, action, opt);
        if (hom_cmd->parsed()) return cmd_homology(catref, cplxref, variant);
        if (ax_cmd->parsed()) return cmd_axioms(catref, opt);
        return cmd_khomotopy(catref, listref, opt);
    });

    std::string rendered = format == "machine" ? render_machine(rep) : render_human(rep);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << rendered;
    }
    if (rep.exit_code != 0) std::cerr << "catideal: " << rep.status << "\n";
    return rep.exit_code;
}
