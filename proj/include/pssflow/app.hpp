#pragma once

/**
 * @file app.hpp
 * @brief Subcommand implementations for the `pssflow` tool.
 *
 * Every command writes to the given streams and returns the process exit
 * code: 0 success, 1 validation failure, 2 input/configuration error,
 * 3 numerical failure.
 */

#include <pssflow/config.hpp>
#include <pssflow/errors.hpp>
#include <pssflow/measurements_csv.hpp>
#include <pssflow/prefit.hpp>
#include <pssflow/productivity.hpp>
#include <pssflow/sweep.hpp>
#include <pssflow/table_report.hpp>
#include <pssflow/validation.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pssflow::app {

enum ExitCode : int { Ok = 0, ValidationFailed = 1, InputFailure = 2, NumericalFailure = 3 };

struct CommonOptions {
    std::optional<std::string> config_path;
    std::vector<std::string> overrides;  ///< key=value, applied after the file
    std::optional<std::string> out_path;
    std::optional<std::string> regime;
    std::optional<double> rel_tol;
    bool raw = false;
    bool continuous_predarcy = false;
    unsigned threads = default_thread_count();
};

struct SweepOptions {
    std::string axis;
    std::optional<std::string> values;
    std::optional<std::string> log_range;
    std::optional<std::string> regimes;
};

struct FitOptions {
    std::string input_path;
    std::optional<std::string> emit_model_path;
};

struct SynthOptions {
    double v_min = 1e-9;
    double v_max = 1e-6;
    std::size_t points = 20;
    double noise_rel = 0.0;
    std::uint64_t seed = 1;
};

inline std::string fmt_g(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

/// Configuration from defaults, file, overrides and flags, in that order.
inline RunConfig load_config(const CommonOptions& opt) {
    RunConfig cfg;
    if (opt.config_path) {
        cfg = read_config_file(*opt.config_path, cfg);
    }
    for (const auto& o : opt.overrides) {
        apply_config_override(cfg, o);
    }
    if (opt.regime) {
        apply_config_value(cfg, "regime.preset", *opt.regime);
    }
    if (opt.rel_tol) {
        cfg.rel_tol = *opt.rel_tol;
    }
    if (opt.continuous_predarcy) {
        cfg.continuous_predarcy = true;
    }
    return cfg;
}

namespace detail {

// Runs body, mapping exceptions onto exit codes with a diagnostic on err.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return InputFailure;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return NumericalFailure;
    } catch (const std::domain_error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return NumericalFailure;
    }
}

// Writes to the --out file if given, else to the fallback stream.
inline void with_output(const std::optional<std::string>& path, std::ostream& fallback,
                        const std::function<void(std::ostream&)>& write) {
    if (!path) {
        write(fallback);
        return;
    }
    std::ofstream file(*path);
    if (!file) {
        throw InputError("cannot open output file " + *path);
    }
    write(file);
    if (!file) {
        throw InputError("failed writing output file " + *path);
    }
}

} // namespace detail

inline int run_pi(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const RunConfig cfg = load_config(opt);
        cfg.validate();
        const Scenario scn = cfg.effective_scenario();
        const PiResult pi = compute_pi(scn, cfg.pi_options());

        out << "regime            " << pi.regime.name() << '\n';
        out << "q_over_h          " << fmt_g(scn.q_over_h) << " m^2/s\n";
        out << "r_F               " << fmt_g(pi.zones.r_F) << " m" << (pi.zones.r_F_clamped ? " (clamped)" : "") << '\n';
        out << "r_D               " << fmt_g(pi.zones.r_D) << " m" << (pi.zones.r_D_clamped ? " (clamped)" : "") << '\n';
        out << "S_near_well       " << fmt_g(pi.contributions[0]) << '\n';
        out << "S_middle          " << fmt_g(pi.contributions[1]) << '\n';
        out << "S_near_boundary   " << fmt_g(pi.contributions[2]) << '\n';
        out << "j_raw             " << fmt_g(pi.j_raw) << " m^3/(Pa*s)\n";
        out << "j_dimensionless   " << fmt_g(pi.j_dimensionless) << '\n';
        out << "PI                " << (opt.raw ? fmt_g(pi.j_raw) + " m^3/(Pa*s)" : fmt_g(pi.j_dimensionless)) << '\n';

        if (opt.out_path) {
            detail::with_output(opt.out_path, out, [&](std::ostream& csv) {
                csv << "regime,s,v_D,v_F,q_over_h,r_F,r_D,s_near_well,s_middle,s_near_boundary,j_raw,j_dimensionless\n";
                csv << pi.regime.name() << ',' << format_sci(scn.params.s, 10) << ','
                    << format_sci(scn.params.v_D, 10) << ',' << format_sci(scn.params.v_F, 10) << ','
                    << format_sci(scn.q_over_h, 10) << ',' << format_sci(pi.zones.r_F, 10) << ','
                    << format_sci(pi.zones.r_D, 10) << ',' << format_sci(pi.contributions[0], 10) << ','
                    << format_sci(pi.contributions[1], 10) << ',' << format_sci(pi.contributions[2], 10)
                    << ',' << format_sci(pi.j_raw, 10) << ',' << format_sci(pi.j_dimensionless, 10) << '\n';
            });
        }
        return Ok;
    });
}

inline SweepSpec build_sweep_spec(const SweepOptions& sw, const RunConfig& cfg) {
    SweepSpec spec;
    const auto axis = parse_sweep_axis(sw.axis);
    if (!axis) {
        throw InputError("sweep: unknown axis `" + sw.axis + "` (q_over_h, s, v_D, v_F)");
    }
    spec.axis = *axis;
    if (sw.values.has_value() == sw.log_range.has_value()) {
        throw InputError("sweep: give exactly one of --values or --log-range");
    }
    spec.values = sw.values ? parse_value_list(*sw.values, "values") : parse_log_range(*sw.log_range);
    spec.regimes = sw.regimes ? parse_regime_list(*sw.regimes)
                              : std::vector<RegimeAssignment>{cfg.scenario.regime};
    return spec;
}

inline int run_sweep(const CommonOptions& opt, const SweepOptions& sw, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const RunConfig cfg = load_config(opt);
        cfg.validate();
        const SweepSpec spec = build_sweep_spec(sw, cfg);
        const auto rows = pssflow::run_sweep(cfg, spec, opt.threads);
        detail::with_output(opt.out_path, out, [&](std::ostream& csv) { write_sweep_csv(csv, rows); });
        return Ok;
    });
}

/// CSV goes to --out (report to `out`) or to `out` (report to `err`).
inline int run_table(const CommonOptions& opt, int table_id, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        PiOptions pi_opt;
        if (opt.rel_tol) {
            pi_opt.quadrature.rel_tol = *opt.rel_tol;
        }
        const auto rows = compare_table(table_id, pi_opt, opt.threads);
        detail::with_output(opt.out_path, out, [&](std::ostream& csv) { write_table_csv(csv, rows); });
        write_deviation_report(opt.out_path ? out : err, table_id, rows);
        return Ok;
    });
}

inline int run_validate(const ValidationOptions& vopt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const auto checks = run_validation(vopt);
        write_validation_report(out, checks);
        std::string failed;
        for (const auto& c : checks) {
            if (!c.passed()) {
                failed += (failed.empty() ? "" : ", ") + c.name;
            }
        }
        if (!failed.empty()) {
            err << "validation failed: " << failed << '\n';
            return ValidationFailed;
        }
        out << "all " << checks.size() << " properties passed\n";
        return Ok;
    });
}

/// Fitted piecewise curve evaluated at v.
inline double fitted_gradient(const FitResult& fit, double v) {
    if (fit.has_breakpoint && v < fit.v_D_hat) {
        return fit.lambda_hat * std::pow(v, 1.0 - fit.s_hat);
    }
    return fit.alpha_hat * v;
}

inline int run_fit(const CommonOptions& opt, const FitOptions& fo, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const auto data = read_measurements_file(fo.input_path);
        const FitResult fit = fit_segments(data);
        out << "points            " << data.size() << " (" << fit.points_per_segment.first << " pre-Darcy, "
            << fit.points_per_segment.second << " Darcy)\n";
        out << "breakpoint        " << (fit.has_breakpoint ? "yes" : "no (single Darcy line)") << '\n';
        out << "s_hat             " << fmt_g(fit.s_hat, 10) << '\n';
        out << "lambda_hat        " << fmt_g(fit.lambda_hat, 10) << '\n';
        out << "alpha_hat         " << fmt_g(fit.alpha_hat, 10) << '\n';
        out << "v_D_hat           " << fmt_g(fit.v_D_hat, 6) << " m/s\n";
        out << "sse               " << fmt_g(fit.sse_total, 6) << '\n';
        out << "darcy_slope_free  " << fmt_g(fit.darcy_slope_free, 6) << '\n';

        if (opt.out_path) {
            detail::with_output(opt.out_path, out, [&](std::ostream& csv) {
                csv << "s_hat,lambda_hat,alpha_hat,v_D_hat,sse_total,n_predarcy,n_darcy,has_breakpoint,"
                       "darcy_slope_free\n";
                csv << format_sci(fit.s_hat, 10) << ',' << format_sci(fit.lambda_hat, 10) << ','
                    << format_sci(fit.alpha_hat, 10) << ',' << format_sci(fit.v_D_hat, 10) << ','
                    << format_sci(fit.sse_total, 10) << ',' << fit.points_per_segment.first << ','
                    << fit.points_per_segment.second << ',' << (fit.has_breakpoint ? 1 : 0) << ','
                    << format_sci(fit.darcy_slope_free, 10) << '\n';
            });
        }
        if (fo.emit_model_path) {
            double lo = data.front().v;
            double hi = data.front().v;
            for (const auto& m : data) {
                lo = std::min(lo, m.v);
                hi = std::max(hi, m.v);
            }
            detail::with_output(fo.emit_model_path, out, [&](std::ostream& csv) {
                csv << "v_m_per_s,grad_p_pa_per_m\n";
                for (double v : log_space(lo, hi, 200)) {
                    csv << format_sci(v, 10) << ',' << format_sci(fitted_gradient(fit, v), 10) << '\n';
                }
            });
        }
        return Ok;
    });
}

/// Writes a synthetic measurement file drawn from the configured law.
inline int run_synth(const CommonOptions& opt, const SynthOptions& so, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const RunConfig cfg = load_config(opt);
        cfg.validate();
        if (!(so.v_min > 0.0 && so.v_max > so.v_min) || so.points < 2) {
            throw InputError("synth: need 0 < v_min < v_max and at least 2 points");
        }
        const Scenario scn = cfg.effective_scenario();
        const auto grid = log_space(so.v_min, so.v_max, so.points);
        const auto data = synthesize_measurements(scn.params, grid, so.noise_rel, so.seed);
        detail::with_output(opt.out_path, out, [&](std::ostream& csv) { write_measurements(csv, data); });
        return Ok;
    });
}

} // namespace pssflow::app
