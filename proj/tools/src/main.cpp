#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using filmdecay::cli::Fig2Options;
using filmdecay::cli::RateOptions;
using filmdecay::cli::SweepOptions;

// Shared flag set of rate and sweep. Config files (--config) mirror these as
// key=value lines; --dump-config emits exactly the parseable form.
void attach_rate_options(CLI::App* cmd, RateOptions& o) {
    cmd->add_option("--kind", o.kind, "Transition kind: magnetic | electric")->required();
    cmd->add_option("--freq", o.freq, "Transition frequency [Hz]");
    cmd->add_option("--orient", o.orient, "Squared matrix-element weights wx,wy,wz");
    cmd->add_option("--z", o.z, "Atom height above the film [m]");
    cmd->add_option("--H", o.H, "Film thickness [m] or inf");
    cmd->add_option("--temp", o.temp, "Environment temperature [K]");
    cmd->add_option("--lambda-L", o.lambda_L, "London penetration depth [m]");
    cmd->add_option("--delta", o.delta, "Skin depth [m] or inf");
    cmd->add_option("--eps-re", o.eps_re, "Fixed permittivity, real part");
    cmd->add_option("--eps-im", o.eps_im, "Fixed permittivity, imaginary part (>= 0)");
    cmd->add_flag("--perfect-conductor", o.perfect_conductor, "Ideal-mirror closed forms");
    cmd->add_option("--two-fluid", o.two_fluid,
                    "Gorter-Casimir state T,Tc,lambdaL0,deltaC (K, K, m, m)");
    cmd->add_flag("--dimensionless", o.dimensionless,
                  "Geometry as kz/kH and medium as k*lambda_L / k*delta; rates in units "
                  "of the free-space prefactor");
    cmd->add_option("--kz", o.kz, "Dimensionless atom height k*z");
    cmd->add_option("--kH", o.kH, "Dimensionless film thickness k*H or inf");
    cmd->add_option("--k-lambda-L", o.k_lambda_L, "Dimensionless k*lambda_L");
    cmd->add_option("--k-delta", o.k_delta, "Dimensionless k*delta or inf");
    cmd->add_option("--nbar", o.nbar, "Thermal occupation (dimensionless mode)");
    cmd->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
    cmd->add_option("--format", o.format, "Output format: csv | json");
    cmd->fallthrough();  // --config / --dump-config may follow the subcommand
}

void record_presence(const CLI::App* cmd, RateOptions& o) {
    o.set.freq = cmd->count("--freq") > 0;
    o.set.z = cmd->count("--z") > 0;
    o.set.H = cmd->count("--H") > 0;
    o.set.temp = cmd->count("--temp") > 0;
    o.set.lambda_L = cmd->count("--lambda-L") > 0;
    o.set.delta = cmd->count("--delta") > 0;
    o.set.eps_re = cmd->count("--eps-re") > 0;
    o.set.eps_im = cmd->count("--eps-im") > 0;
    o.set.two_fluid = cmd->count("--two-fluid") > 0;
    o.set.kz = cmd->count("--kz") > 0;
    o.set.kH = cmd->count("--kH") > 0;
    o.set.k_lambda_L = cmd->count("--k-lambda-L") > 0;
    o.set.k_delta = cmd->count("--k-delta") > 0;
    o.set.nbar = cmd->count("--nbar") > 0;
    o.set.rel_tol = cmd->count("--rel-tol") > 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-flip and dipole-flip decay rates of an atom near a thin film"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Read flags from a key=value file (keys as printed by --dump-config)")
        ->configurable(false);
    bool dump_config = false;
    app.add_flag("--dump-config", dump_config, "Print the equivalent config file and exit")
        ->configurable(false);

    RateOptions rate_opts;
    CLI::App* rate = app.add_subcommand("rate", "Evaluate one rate");
    attach_rate_options(rate, rate_opts);

    SweepOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep one axis, emit a table");
    attach_rate_options(sweep, sweep_opts.fixed);
    sweep->add_option("--axis", sweep_opts.axis, "Swept axis: z | H | T | omega | kz")->required();
    sweep->add_option("--start", sweep_opts.start, "First axis value")->required();
    sweep->add_option("--stop", sweep_opts.stop, "Last axis value")->required();
    sweep->add_option("--points", sweep_opts.points, "Number of rows (>= 2)")->required();
    sweep->add_option("--spacing", sweep_opts.spacing, "linear | log");
    sweep->add_option("--out", sweep_opts.out, "Output path ('-' = stdout)");

    Fig2Options fig2_opts;
    CLI::App* fig2 = app.add_subcommand(
        "fig2", "Ideal-mirror rate ratio vs kz for two spin orientations");
    fig2->add_option("--format", fig2_opts.format, "Output format: csv | json");
    fig2->add_option("--out", fig2_opts.out, "Output path ('-' = stdout)");
    fig2->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dump_config) {
            std::fputs(app.config_to_str(false, false).c_str(), stdout);
            return 0;
        }
        if (rate->parsed()) {
            record_presence(rate, rate_opts);
            return filmdecay::cli::run_rate(rate_opts);
        }
        if (sweep->parsed()) {
            record_presence(sweep, sweep_opts.fixed);
            return filmdecay::cli::run_sweep(sweep_opts);
        }
        return filmdecay::cli::run_fig2(fig2_opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
