#pragma once

/**
 * @file config.hpp
 * @brief Flat `key = value` run configuration.
 *
 * Recognised keys (defaults are the reference reservoir):
 *
 *   geometry.r_e  geometry.r_w  geometry.h
 *   params.alpha  params.beta  params.lambda  params.s  params.gamma
 *   params.v_D    params.v_F
 *   flow.q_over_h
 *   regime.preset                 D, F, FDD, DDpD, FDpD, FpDpD, preDarcy or any
 *                                 three-zone code such as "pDDF"
 *   model.continuous_predarcy     true/false; lambda := alpha * v_D^s
 *   numerics.rel_tol              quadrature relative tolerance
 *
 * `#` starts a comment. Unknown keys and unparsable values are errors.
 */

#include <pssflow/errors.hpp>
#include <pssflow/kinematics.hpp>
#include <pssflow/measurements_csv.hpp>
#include <pssflow/model.hpp>
#include <pssflow/productivity.hpp>

#include <fstream>
#include <istream>
#include <string>
#include <string_view>

namespace pssflow {

struct RunConfig {
    Scenario scenario{};
    bool continuous_predarcy = false;
    double rel_tol = 1e-10;

    /// Scenario as evaluated: continuity rescaling applied, then validated.
    [[nodiscard]] Scenario effective_scenario() const {
        Scenario scn = scenario;
        if (continuous_predarcy) {
            scn.params = scn.params.with_continuous_predarcy();
        }
        scn.validate();
        return scn;
    }

    [[nodiscard]] PiOptions pi_options() const {
        PiOptions opt;
        opt.quadrature.rel_tol = rel_tol;
        return opt;
    }

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
            throw InputError("numerics.rel_tol must lie in (0, 1)");
        }
        try {
            (void)effective_scenario();
        } catch (const InputError& e) {
            throw InputError(std::string("invalid configuration: ") + e.what());
        }
    }
};

namespace detail {

inline double config_number(std::string_view key, std::string_view value) {
    double out = 0.0;
    if (!parse_double(value, out)) {
        throw InputError("config: key " + std::string(key) + " expects a number, got `" +
                         std::string(value) + "`");
    }
    return out;
}

inline bool config_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    throw InputError("config: key " + std::string(key) + " expects true/false, got `" +
                     std::string(value) + "`");
}

} // namespace detail

/// Apply one `key`, `value` pair to the configuration.
inline void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
    key = detail::trim(key);
    value = detail::trim(value);
    auto& scn = cfg.scenario;
    auto num = [&] { return detail::config_number(key, value); };
    if (key == "geometry.r_e") {
        scn.geometry.r_e = num();
    } else if (key == "geometry.r_w") {
        scn.geometry.r_w = num();
    } else if (key == "geometry.h") {
        scn.geometry.h = num();
    } else if (key == "params.alpha") {
        scn.params.alpha = num();
    } else if (key == "params.beta") {
        scn.params.beta = num();
    } else if (key == "params.lambda") {
        scn.params.lambda = num();
    } else if (key == "params.s") {
        scn.params.s = num();
    } else if (key == "params.gamma") {
        scn.params.gamma = num();
    } else if (key == "params.v_D") {
        scn.params.v_D = num();
    } else if (key == "params.v_F") {
        scn.params.v_F = num();
    } else if (key == "flow.q_over_h") {
        scn.q_over_h = num();
    } else if (key == "regime.preset") {
        const auto regime = parse_regime(value);
        if (!regime) {
            throw InputError("config: key regime.preset has unknown regime `" + std::string(value) + "`");
        }
        scn.regime = *regime;
    } else if (key == "model.continuous_predarcy") {
        cfg.continuous_predarcy = detail::config_bool(key, value);
    } else if (key == "numerics.rel_tol") {
        cfg.rel_tol = num();
    } else {
        throw InputError("config: unknown key `" + std::string(key) + "`");
    }
}

/// Apply a `key=value` override string.
inline void apply_config_override(RunConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw InputError("config: override `" + std::string(assignment) + "` is not key=value");
    }
    apply_config_value(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

inline void read_config(std::istream& in, RunConfig& cfg) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = detail::trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw InputError("config: line " + std::to_string(lineno) + " is not key = value");
        }
        apply_config_value(cfg, view.substr(0, eq), view.substr(eq + 1));
    }
}

inline RunConfig read_config_file(const std::string& path, RunConfig base = {}) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("config: cannot open " + path);
    }
    read_config(in, base);
    return base;
}

} // namespace pssflow
