// pssflow: pseudo-steady productivity index of a well under pre-Darcy,
// Darcy and Forchheimer flow.
//
//   pssflow pi       [--config F] [--set k=v ...] [--regime R] [--raw] [--out F]
//   pssflow sweep    --axis q_over_h|s|v_D|v_F (--values a,b,..|--log-range lo,hi,n) [--regimes R,..]
//   pssflow table    --id 1..4 [--out F]
//   pssflow validate
//   pssflow fit      --input data.csv [--emit-model F] [--out F]
//   pssflow synth    [--v-min X --v-max X --points N --noise X --seed N] [--out F]

#include <pssflow/app.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* cmd, pssflow::app::CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "key = value configuration file");
    cmd->add_option("--set", opt.overrides, "override a configuration key (key=value), repeatable");
    cmd->add_option("--out", opt.out_path, "write CSV output to this file");
    cmd->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
    cmd->add_flag("--raw", opt.raw, "report the index in SI units instead of dimensionless");
    cmd->add_flag("--continuous-predarcy", opt.continuous_predarcy,
                  "rescale lambda to alpha * v_D^s so the law is continuous at v_D");
    cmd->add_option("--threads", opt.threads, "worker threads for sweeps and tables");
}

} // namespace

int main(int argc, char** argv) {
    namespace app = pssflow::app;

    CLI::App cli{"Pseudo-steady well productivity index for pre-Darcy / Darcy / Forchheimer flow"};
    cli.require_subcommand(1);

    app::CommonOptions common;

    auto* pi = cli.add_subcommand("pi", "productivity index of one scenario");
    add_common(pi, common);
    pi->add_option("--regime", common.regime, "regime preset or zone code (D, F, FDD, DDpD, FDpD, FpDpD, preDarcy)");

    app::SweepOptions sweep_opt;
    auto* sweep = cli.add_subcommand("sweep", "productivity index along one parameter axis");
    add_common(sweep, common);
    sweep->add_option("--axis", sweep_opt.axis, "q_over_h, s, v_D or v_F")->required();
    sweep->add_option("--values", sweep_opt.values, "comma-separated axis values");
    sweep->add_option("--log-range", sweep_opt.log_range, "start,stop,points (log-spaced)");
    sweep->add_option("--regimes", sweep_opt.regimes, "comma-separated regimes (default: configured regime)");

    int table_id = 0;
    auto* table = cli.add_subcommand("table", "reproduce a published table with deviations");
    add_common(table, common);
    table->add_option("--id", table_id, "table number 1-4")->required()->check(CLI::Range(1, 4));

    pssflow::ValidationOptions vopt;
    bool inject_fault = false;
    auto* validate = cli.add_subcommand("validate", "run the self-consistency suite");
    validate->add_option("--threads", vopt.threads, "worker threads");
    // Perturbs S_F by 1e-3 to confirm that the suite detects it.
    validate->add_flag("--inject-fault", inject_fault)->group("");

    app::FitOptions fit_opt;
    auto* fit = cli.add_subcommand("fit", "fit pre-Darcy parameters to measurements");
    add_common(fit, common);
    fit->add_option("--input", fit_opt.input_path, "CSV with columns v_m_per_s,grad_p_pa_per_m")->required();
    fit->add_option("--emit-model", fit_opt.emit_model_path, "write the fitted curve to this CSV");

    app::SynthOptions synth_opt;
    auto* synth = cli.add_subcommand("synth", "write synthetic measurements from the configured law");
    add_common(synth, common);
    synth->add_option("--v-min", synth_opt.v_min, "smallest velocity [m/s]");
    synth->add_option("--v-max", synth_opt.v_max, "largest velocity [m/s]");
    synth->add_option("--points", synth_opt.points, "number of log-spaced velocities");
    synth->add_option("--noise", synth_opt.noise_rel, "log-normal relative noise level");
    synth->add_option("--seed", synth_opt.seed, "random seed");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : app::InputFailure;
    }

    if (pi->parsed()) {
        return app::run_pi(common, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
        return app::run_sweep(common, sweep_opt, std::cout, std::cerr);
    }
    if (table->parsed()) {
        return app::run_table(common, table_id, std::cout, std::cerr);
    }
    if (validate->parsed()) {
        if (inject_fault) {
            vopt.forchheimer_fault = 1e-3;
        }
        return app::run_validate(vopt, std::cout, std::cerr);
    }
    if (fit->parsed()) {
        return app::run_fit(common, fit_opt, std::cout, std::cerr);
    }
    if (synth->parsed()) {
        return app::run_synth(common, synth_opt, std::cout, std::cerr);
    }
    return app::InputFailure;
}
