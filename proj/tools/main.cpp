// Command-line front end. Parses arguments into a RunManifest and hands off;
// all results go to stdout as JSON, notes and errors to stderr.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "monogen/cli.hpp"

int main(int argc, char** argv) {
    using monogen::cli::RunManifest;

    CLI::App app{"monogenic function calculus over commutative algebras"};
    app.require_subcommand(0, 1);

    RunManifest man;
    bool emit_schema = false;
    app.add_flag("--emit-schema", emit_schema, "print the JSON file formats and exit");

    std::string t_arg;
    double t_re = 0.0, t_im = 0.0;
    bool has_t_re = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol-zero", man.tol_zero, "absolute zero-detection tolerance");
        cmd->add_option("--tol-check", [&man](const CLI::results_t& r) {
            man.tol_check = std::stod(r[0]);
            return true;
        }, "pass/fail tolerance for check subcommands");
        cmd->add_option("--fd-step", [&man](const CLI::results_t& r) {
            man.fd_step = std::stod(r[0]);
            return true;
        }, "finite-difference step");
        cmd->add_option("--quad-nodes", man.quad_nodes, "starting contour node count");
        cmd->add_option("--seed", man.seed, "random seed for the self test");
        cmd->add_flag("--assume-convex", man.assume_convex,
                      "record that the caller asserts a convex domain");
    };

    auto add_input = [&](CLI::App* cmd, const std::string& role, const std::string& help,
                         bool required = true) {
        auto* opt = cmd->add_option(
            "--" + role,
            [&man, role](const CLI::results_t& r) {
                man.inputs[role] = r[0];
                return true;
            },
            help);
        if (required) opt->required();
    };

    {
        auto* c = app.add_subcommand("validate", "check an algebra spec");
        add_input(c, "algebra", "algebra spec file");
        add_common(c);
    }
    {
        auto* c = app.add_subcommand("invert", "invert an element");
        add_input(c, "algebra", "algebra spec file");
        add_input(c, "element", "element file or inline JSON");
        add_common(c);
    }
    {
        auto* c = app.add_subcommand("resolvent", "evaluate (t e_1 - zeta)^{-1}");
        add_input(c, "algebra", "algebra spec file");
        add_input(c, "frame", "frame spec file");
        add_input(c, "point", "point file or inline JSON array");
        c->add_option("--t-re", t_re, "real part of t")->required();
        auto* im = c->add_option("--t-im", t_im, "imaginary part of t");
        (void)im;
        c->callback([&] { has_t_re = true; });
        add_common(c);
    }

    auto add_fn_cmd = [&](const std::string& name, const std::string& help, bool needs_point,
                          bool needs_pde = false) {
        auto* c = app.add_subcommand(name, help);
        add_input(c, "algebra", "algebra spec file");
        add_input(c, "frame", "frame spec file");
        add_input(c, "function", "component function file");
        if (needs_pde) add_input(c, "pde", "operator spec file");
        if (needs_point) {
            add_input(c, "point", "point file or inline JSON array", false);
            add_input(c, "grid", "grid spec file", false);
        }
        add_common(c);
        return c;
    };

    add_fn_cmd("eval", "evaluate through the explicit representation", true);
    add_fn_cmd("eval-contour", "evaluate through contour integrals", true);
    {
        auto* c = add_fn_cmd("derive", "differentiate the component functions", false);
        c->add_option("--order", man.order, "derivative order (default 1)");
    }
    add_fn_cmd("check-cr", "finite-difference Cauchy-Riemann residuals", true);
    {
        auto* c = app.add_subcommand("char-eq", "characteristic sum of an operator");
        add_input(c, "algebra", "algebra spec file");
        add_input(c, "frame", "frame spec file");
        add_input(c, "pde", "operator spec file");
        add_common(c);
    }
    {
        auto* c = app.add_subcommand("p-scan", "grid scan of the coefficient polynomial");
        add_input(c, "pde", "operator spec file");
        add_input(c, "box", "intervals file or inline JSON", false);
        c->add_option("--grid-points", man.grid_points, "points per axis (default 11)");
        add_common(c);
    }
    add_fn_cmd("check-pde", "finite-difference residual of the operator", true, true);
    {
        auto* c = app.add_subcommand("theorem4", "solvability hypotheses report");
        add_input(c, "algebra", "algebra spec file");
        add_input(c, "frame", "frame spec file");
        add_input(c, "pde", "operator spec file");
        add_input(c, "box", "intervals file or inline JSON", false);
        c->add_option("--grid-points", man.grid_points, "points per axis (default 11)");
        add_common(c);
    }
    {
        auto* c = app.add_subcommand("selftest", "run the bundled fixture suite");
        add_common(c);
    }

    CLI11_PARSE(app, argc, argv);

    if (emit_schema) {
        man.emit_schema = true;
        return monogen::cli::run(man, std::cout, std::cerr);
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help() << "\n";
        return 2;
    }
    man.command = app.get_subcommands().front()->get_name();
    if (has_t_re) man.t = monogen::cplx{t_re, t_im};

    return monogen::cli::run(man, std::cout, std::cerr);
}
