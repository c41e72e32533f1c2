#pragma once

/**
 * @file sweep.hpp
 * @brief One-parameter sweeps of the productivity index.
 */

#include <pssflow/config.hpp>
#include <pssflow/errors.hpp>
#include <pssflow/measurements_csv.hpp>
#include <pssflow/prefit.hpp>
#include <pssflow/productivity.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace pssflow {

enum class SweepAxis { QOverH, S, VD, VF };

inline constexpr std::string_view to_string(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::QOverH: return "q_over_h";
    case SweepAxis::S: return "s";
    case SweepAxis::VD: return "v_D";
    case SweepAxis::VF: return "v_F";
    }
    return "?";
}

inline std::optional<SweepAxis> parse_sweep_axis(std::string_view text) {
    if (text == "q_over_h") return SweepAxis::QOverH;
    if (text == "s") return SweepAxis::S;
    if (text == "v_D") return SweepAxis::VD;
    if (text == "v_F") return SweepAxis::VF;
    return std::nullopt;
}

struct SweepSpec {
    SweepAxis axis = SweepAxis::QOverH;
    std::vector<double> values;
    std::vector<RegimeAssignment> regimes;
};

struct SweepRow {
    SweepAxis axis{};
    double axis_value = 0.0;
    RegimeAssignment regime{};
    double s = 0.0;
    double v_D = 0.0;
    double v_F = 0.0;
    double q_over_h = 0.0;
    double r_F = 0.0;
    double r_D = 0.0;
    double j_raw = 0.0;
    double j_dimensionless = 0.0;
};

/// Base configuration with the axis parameter replaced by `value`.
inline RunConfig with_axis_value(const RunConfig& base, SweepAxis axis, double value) {
    RunConfig cfg = base;
    auto& p = cfg.scenario.params;
    switch (axis) {
    case SweepAxis::QOverH: cfg.scenario.q_over_h = value; break;
    case SweepAxis::S: p.s = value; break;
    case SweepAxis::VD: p.v_D = value; break;
    case SweepAxis::VF: p.v_F = value; break;
    }
    return cfg;
}

/**
 * @brief Evaluate fn(i) for i in [0, n) on up to `threads` workers.
 *
 * Results land in index order. If any call throws, the exception of the
 * lowest failing index is rethrown after all workers have stopped.
 */
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn, unsigned threads) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < count; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

inline unsigned default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

/// Rows in axis-major order: every regime for the first value, then the next value.
inline std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepSpec& spec,
                                       unsigned threads = default_thread_count()) {
    if (spec.values.empty()) {
        throw InputError("sweep: no axis values given");
    }
    if (spec.regimes.empty()) {
        throw InputError("sweep: no regimes given");
    }
    std::vector<RunConfig> points;
    for (double value : spec.values) {
        for (const auto& regime : spec.regimes) {
            RunConfig cfg = with_axis_value(base, spec.axis, value);
            cfg.scenario.regime = regime;
            try {
                cfg.validate();
            } catch (const InputError& e) {
                throw InputError("sweep: " + std::string(to_string(spec.axis)) + " = " +
                                 format_sci(value, 6) + ": " + e.what());
            }
            points.push_back(cfg);
        }
    }
    return parallel_map<SweepRow>(
        points.size(),
        [&](std::size_t i) {
            const RunConfig& cfg = points[i];
            const Scenario scn = cfg.effective_scenario();
            const PiResult pi = compute_pi(scn, cfg.pi_options());
            SweepRow row;
            row.axis = spec.axis;
            row.axis_value = spec.values[i / spec.regimes.size()];
            row.regime = scn.regime;
            row.s = scn.params.s;
            row.v_D = scn.params.v_D;
            row.v_F = scn.params.v_F;
            row.q_over_h = scn.q_over_h;
            row.r_F = pi.zones.r_F;
            row.r_D = pi.zones.r_D;
            row.j_raw = pi.j_raw;
            row.j_dimensionless = pi.j_dimensionless;
            return row;
        },
        threads);
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "axis_name,axis_value,regime,s,v_D,v_F,q_over_h,r_F,r_D,j_raw,j_dimensionless\n";
    for (const auto& r : rows) {
        out << to_string(r.axis) << ',' << format_sci(r.axis_value, 10) << ',' << r.regime.name() << ','
            << format_sci(r.s, 10) << ',' << format_sci(r.v_D, 10) << ',' << format_sci(r.v_F, 10) << ','
            << format_sci(r.q_over_h, 10) << ',' << format_sci(r.r_F, 10) << ','
            << format_sci(r.r_D, 10) << ',' << format_sci(r.j_raw, 10) << ','
            << format_sci(r.j_dimensionless, 10) << '\n';
    }
}

/// Parse "a,b,c" into numbers.
inline std::vector<double> parse_value_list(std::string_view text, std::string_view what) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        double v = 0.0;
        if (!detail::parse_double(item, v)) {
            throw InputError(std::string(what) + ": `" + std::string(item) + "` is not a number");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw InputError(std::string(what) + ": empty list");
    }
    return out;
}

/// Parse "start,stop,points" into log-spaced values.
inline std::vector<double> parse_log_range(std::string_view text) {
    const auto parts = parse_value_list(text, "log range");
    if (parts.size() != 3) {
        throw InputError("log range: expected start,stop,points");
    }
    if (!(parts[0] > 0.0 && parts[1] > 0.0)) {
        throw InputError("log range: start and stop must be > 0");
    }
    if (!(parts[2] >= 1.0) || parts[2] != static_cast<double>(static_cast<std::size_t>(parts[2]))) {
        throw InputError("log range: points must be a positive integer");
    }
    return log_space(parts[0], parts[1], static_cast<std::size_t>(parts[2]));
}

inline std::vector<RegimeAssignment> parse_regime_list(std::string_view text) {
    std::vector<RegimeAssignment> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = detail::trim(text.substr(0, comma));
        const auto regime = parse_regime(item);
        if (!regime) {
            throw InputError("regimes: unknown regime `" + std::string(item) + "`");
        }
        out.push_back(*regime);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw InputError("regimes: empty list");
    }
    return out;
}

} // namespace pssflow
