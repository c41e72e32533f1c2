#pragma once

/**
 * @file model.hpp
 * @brief Flow parameters and the piecewise pre-Darcy / Darcy / Forchheimer law.
 *
 * The momentum balance is written as
 *   g(|v|) v = -grad p
 * with the resistance
 *   g(xi) = lambda * xi^(-s)     pre-Darcy     (0 <= xi <= v_D)
 *   g(xi) = alpha                Darcy         (v_D <= xi <= v_F)
 *   g(xi) = alpha + beta * xi    Forchheimer   (xi >= v_F)
 *
 * and, equivalently, v = -K(|grad p|) grad p with the mobility K.
 * All quantities are SI.
 */

#include <pssflow/errors.hpp>

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pssflow {

/**
 * @brief Hydrodynamic coefficients and critical velocities.
 */
struct FlowParameters {
    double alpha = 1.01e10;    ///< Darcy coefficient mu/k [Pa*s/m^2]
    double beta = 2.4318e11;   ///< Forchheimer coefficient [Pa*s^2/m^3]
    double lambda = 1.01e10;   ///< pre-Darcy coefficient [Pa*s^(1-s)/m^(2-s)]
    double s = 0.7;            ///< pre-Darcy exponent [-]
    double gamma = 1e-8;       ///< fluid compressibility [1/Pa]
    double v_D = 1e-7;         ///< pre-Darcy / Darcy transition velocity [m/s]
    double v_F = 1e-5;         ///< Darcy / Forchheimer transition velocity [m/s]

    /// Throws InputError naming the first violated constraint.
    void validate() const {
        auto require = [](bool ok, const char* what) {
            if (!ok) {
                throw InputError(what);
            }
        };
        require(std::isfinite(alpha) && alpha > 0.0, "alpha must be finite and > 0");
        require(std::isfinite(beta) && beta >= 0.0, "beta must be finite and >= 0");
        require(std::isfinite(lambda) && lambda > 0.0, "lambda must be finite and > 0");
        require(std::isfinite(s) && s >= 0.0 && s <= 1.0, "s must lie in [0, 1]");
        require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be finite and >= 0");
        require(std::isfinite(v_D) && v_D >= 0.0, "v_D must be finite and >= 0");
        require(std::isfinite(v_F) && v_F >= v_D, "v_F must be finite and >= v_D");
    }

    /// Copy with lambda rescaled to alpha * v_D^s so that g is continuous at v_D.
    [[nodiscard]] FlowParameters with_continuous_predarcy() const {
        if (!(v_D > 0.0)) {
            throw InputError("continuous pre-Darcy rescaling requires v_D > 0");
        }
        FlowParameters out = *this;
        out.lambda = alpha * std::pow(v_D, s);
        return out;
    }
};

enum class ZoneLaw { PreDarcy, Darcy, Forchheimer };

inline constexpr std::string_view to_string(ZoneLaw law) {
    switch (law) {
    case ZoneLaw::PreDarcy: return "pD";
    case ZoneLaw::Darcy: return "D";
    case ZoneLaw::Forchheimer: return "F";
    }
    return "?";
}

/**
 * @brief Which law governs each of the three velocity zones.
 *
 * Zones are ordered from the well outwards: fast (near the well), moderate
 * (middle) and slow (near the outer boundary).
 */
struct RegimeAssignment {
    ZoneLaw near_well = ZoneLaw::Darcy;
    ZoneLaw middle = ZoneLaw::Darcy;
    ZoneLaw near_boundary = ZoneLaw::Darcy;

    [[nodiscard]] constexpr std::array<ZoneLaw, 3> zones() const {
        return {near_well, middle, near_boundary};
    }

    friend constexpr bool operator==(const RegimeAssignment&, const RegimeAssignment&) = default;

    /// Canonical short name: "D", "F", "preDarcy" for uniform regimes,
    /// otherwise the concatenated zone codes ("FDD", "FDpD", "FpDpD", ...).
    [[nodiscard]] std::string name() const {
        if (near_well == middle && middle == near_boundary) {
            return near_well == ZoneLaw::PreDarcy ? std::string("preDarcy")
                                                  : std::string(to_string(near_well));
        }
        std::string out;
        for (ZoneLaw law : zones()) {
            out += to_string(law);
        }
        return out;
    }

    static constexpr RegimeAssignment uniform(ZoneLaw law) { return {law, law, law}; }
};

namespace regimes {
inline constexpr RegimeAssignment D = RegimeAssignment::uniform(ZoneLaw::Darcy);
inline constexpr RegimeAssignment F = RegimeAssignment::uniform(ZoneLaw::Forchheimer);
inline constexpr RegimeAssignment FDD{ZoneLaw::Forchheimer, ZoneLaw::Darcy, ZoneLaw::Darcy};
inline constexpr RegimeAssignment DDpD{ZoneLaw::Darcy, ZoneLaw::Darcy, ZoneLaw::PreDarcy};
inline constexpr RegimeAssignment FDpD{ZoneLaw::Forchheimer, ZoneLaw::Darcy, ZoneLaw::PreDarcy};
inline constexpr RegimeAssignment FpDpD{ZoneLaw::Forchheimer, ZoneLaw::PreDarcy, ZoneLaw::PreDarcy};
inline constexpr RegimeAssignment PreDarcy = RegimeAssignment::uniform(ZoneLaw::PreDarcy);

/// The seven named presets, in reporting order.
inline constexpr std::array<RegimeAssignment, 7> all_presets{D, F, FDD, DDpD, FDpD, FpDpD, PreDarcy};
} // namespace regimes

/**
 * @brief Parse a regime name.
 *
 * Accepts "D", "F", "preDarcy" (also "pD", "pure-preDarcy") and any
 * three-zone concatenation of the codes F, D and pD, e.g. "FDpD" or "pDDF".
 * Returns std::nullopt for anything else.
 */
inline std::optional<RegimeAssignment> parse_regime(std::string_view text) {
    if (text == "D" || text == "Darcy") {
        return regimes::D;
    }
    if (text == "F" || text == "Forch" || text == "Forchheimer") {
        return regimes::F;
    }
    if (text == "pD" || text == "preDarcy" || text == "pure-preDarcy") {
        return regimes::PreDarcy;
    }
    std::array<ZoneLaw, 3> laws{};
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (count == laws.size()) {
            return std::nullopt;
        }
        if (text.substr(pos, 2) == "pD") {
            laws[count++] = ZoneLaw::PreDarcy;
            pos += 2;
        } else if (text[pos] == 'D') {
            laws[count++] = ZoneLaw::Darcy;
            ++pos;
        } else if (text[pos] == 'F') {
            laws[count++] = ZoneLaw::Forchheimer;
            ++pos;
        } else {
            return std::nullopt;
        }
    }
    if (count != laws.size()) {
        return std::nullopt;
    }
    return RegimeAssignment{laws[0], laws[1], laws[2]};
}

/**
 * @brief Resistance g(xi) of a single law [Pa*s/m^2].
 *
 * Throws std::domain_error for negative speed, or for xi = 0 under the
 * pre-Darcy law with s > 0 where g is singular.
 */
inline double g_eval(const FlowParameters& p, ZoneLaw law, double xi) {
    if (!(xi >= 0.0)) {
        throw std::domain_error("resistance: speed must be >= 0");
    }
    switch (law) {
    case ZoneLaw::PreDarcy:
        if (xi == 0.0 && p.s > 0.0) {
            throw std::domain_error("resistance: pre-Darcy law is singular at zero speed");
        }
        return p.s == 0.0 ? p.lambda : p.lambda * std::pow(xi, -p.s);
    case ZoneLaw::Darcy:
        return p.alpha;
    case ZoneLaw::Forchheimer:
        return p.alpha + p.beta * xi;
    }
    throw std::logic_error("resistance: unknown law");
}

/**
 * @brief Mobility K(|grad p|) of a single law [m^2/(Pa*s)].
 *
 * Inverse of g: for P = g(xi) * xi, K(P) * P = xi. Undefined for the
 * pre-Darcy law at s = 1 (std::domain_error).
 */
inline double k_eval(const FlowParameters& p, ZoneLaw law, double grad_p) {
    if (!(grad_p >= 0.0)) {
        throw std::domain_error("mobility: pressure gradient must be >= 0");
    }
    switch (law) {
    case ZoneLaw::PreDarcy: {
        if (p.s >= 1.0) {
            throw std::domain_error("mobility: pre-Darcy inverse form is undefined for s = 1");
        }
        if (p.s == 0.0) {
            return 1.0 / p.lambda;
        }
        if (grad_p == 0.0) {
            throw std::domain_error("mobility: pre-Darcy law is singular at zero gradient");
        }
        // lambda^(-1/(1-s)) * P^(s/(1-s)), evaluated in log form.
        return std::exp((p.s * std::log(grad_p) - std::log(p.lambda)) / (1.0 - p.s));
    }
    case ZoneLaw::Darcy:
        return 1.0 / p.alpha;
    case ZoneLaw::Forchheimer:
        return 2.0 / (p.alpha + std::sqrt(p.alpha * p.alpha + 4.0 * p.beta * grad_p));
    }
    throw std::logic_error("mobility: unknown law");
}

/// Zone (0 = near well, 1 = middle, 2 = near boundary) that a speed falls into.
inline constexpr int zone_of_speed(const FlowParameters& p, double speed) {
    if (speed > p.v_F) {
        return 0;
    }
    if (speed < p.v_D) {
        return 2;
    }
    return 1;
}

/// Resistance under a regime, choosing the law from the speed thresholds.
inline double regime_resistance(const FlowParameters& p, const RegimeAssignment& regime, double speed) {
    return g_eval(p, regime.zones()[static_cast<std::size_t>(zone_of_speed(p, speed))], speed);
}

} // namespace pssflow
