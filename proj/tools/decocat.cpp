// decocat: coherence, visibility and collapse of multimode cat states.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "decocat/commands.hpp"

namespace {

std::string join_args(int argc, char** argv)
{
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += argv[i];
    }
    return out;
}

void add_grid_flags(CLI::App* cmd, decocat::numerics::GridSpec& grid)
{
    cmd->add_option("--grid-min", grid.grid_min, "Lower end of the momentum grid")->capture_default_str();
    cmd->add_option("--grid-max", grid.grid_max, "Upper end of the momentum grid")->capture_default_str();
    cmd->add_option("--points", grid.points, "Number of grid points")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace decocat::cli;

    CLI::App app{"Simulate coherence loss and measurement-induced collapse of multimode cat states"};
    app.set_version_flag("--version", "decocat 1.0.0");
    app.require_subcommand(1);

    FringesOptions fringes;
    auto* fr = app.add_subcommand("fringes", "Momentum fringe marginals for a sweep of environment overlaps");
    fr->add_option("--alpha", fringes.alpha, "System mode amplitude")->capture_default_str();
    fr->add_option("--q-env", fringes.q_env, "Environment overlap (repeatable); default sweep 1..0");
    fr->add_option("--beta", fringes.betas, "Environment amplitude (repeatable); q_env = exp(-2 beta^2)");
    add_grid_flags(fr, fringes.grid);
    fr->add_option("--out", fringes.out, "Output directory")->capture_default_str();

    DynamicsOptions dynamics;
    auto* dy = app.add_subcommand("dynamics", "Visibility and Schmidt number versus environment mode count");
    dy->add_option("--alpha", dynamics.alpha, "Per-mode amplitude")->capture_default_str();
    dy->add_option("--n", dynamics.n, "Total number of modes")->capture_default_str();
    dy->add_option("--m-step", dynamics.m_step, "Environment mode increment")->capture_default_str();
    dy->add_option("--m-max", dynamics.m_max, "Largest environment mode count")->capture_default_str();
    dy->add_option("--out", dynamics.out, "Output CSV")->capture_default_str();

    CollapseOptions collapse;
    std::size_t collapse_n = 0;
    auto* co = app.add_subcommand("collapse", "Sequential coordinate measurements of environment modes");
    co->add_option("--alpha", collapse.alpha, "Per-mode amplitude")->capture_default_str();
    co->add_option("--m-max", collapse.m_max, "Number of measured environment modes")->capture_default_str();
    co->add_option("--trajectories", collapse.trajectories, "Number of independent runs")->capture_default_str();
    co->add_option("--seed", collapse.seed, "Master seed")->capture_default_str();
    auto* n_opt = co->add_option("--n", collapse_n, "Total mode count (checked against n alpha^2 >= 10)");
    co->add_option("--out", collapse.out, "Output CSV")->capture_default_str();

    VerifyOptions verify;
    std::string verify_out;
    auto* ve = app.add_subcommand("verify", "Run the built-in numerical self checks");
    auto* verify_out_opt = ve->add_option("--out", verify_out, "Also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidArguments;
    }

    const std::string command_line = join_args(argc, argv);
    if (fr->parsed()) {
        return cmd_fringes(fringes, command_line, std::cerr);
    }
    if (dy->parsed()) {
        return cmd_dynamics(dynamics, command_line, std::cerr);
    }
    if (co->parsed()) {
        if (n_opt->count() > 0) {
            collapse.n = collapse_n;
        }
        return cmd_collapse(collapse, command_line, std::cerr);
    }
    if (verify_out_opt->count() > 0) {
        verify.out = verify_out;
    }
    return cmd_verify(verify, std::cout);
}
