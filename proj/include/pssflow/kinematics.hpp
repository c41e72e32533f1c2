#pragma once

/**
 * @file kinematics.hpp
 * @brief Pseudo-steady radial velocity field and its three-zone partition.
 *
 * For a fully penetrating well of radius r_w in a closed cylinder of radius
 * r_e and thickness h, the pseudo-steady speed is
 *   v(r) = A (r_e^2 - r^2) / r,   A = Q / (2 pi h (r_e^2 - r_w^2)).
 */

#include <pssflow/errors.hpp>
#include <pssflow/model.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pssflow {

/// Cylindrical reservoir dimensions [m].
struct Geometry {
    double r_e = 1000.0;
    double r_w = 0.3;
    double h = 10.0;

    void validate() const {
        if (!(std::isfinite(r_w) && r_w > 0.0)) {
            throw InputError("r_w must be finite and > 0");
        }
        if (!(std::isfinite(r_e) && r_e > r_w)) {
            throw InputError("r_e must be finite and > r_w");
        }
        if (!(std::isfinite(h) && h > 0.0)) {
            throw InputError("h must be finite and > 0");
        }
    }
};

/// Everything needed to evaluate one productivity index.
struct Scenario {
    Geometry geometry{};
    FlowParameters params{};
    RegimeAssignment regime = regimes::D;
    double q_over_h = 1e-4;  ///< specific flux Q/h [m^2/s]

    void validate() const {
        geometry.validate();
        params.validate();
        if (!(std::isfinite(q_over_h) && q_over_h > 0.0)) {
            throw InputError("q_over_h must be finite and > 0");
        }
    }

    /// Total well flux Q [m^3/s].
    [[nodiscard]] double total_flux() const { return q_over_h * geometry.h; }
};

/// Radii delimiting the fast, moderate and slow zones.
struct ZonePartition {
    double r_F = 0.0;          ///< fast / moderate boundary [m]
    double r_D = 0.0;          ///< moderate / slow boundary [m]
    bool r_F_clamped = false;  ///< r(v_F) fell outside [r_w, r_e]
    bool r_D_clamped = false;  ///< r(v_D) fell outside [r_w, r_e]
};

/**
 * @brief A = Q/|U| with |U| = 2 pi h (r_e^2 - r_w^2) [1/s].
 *
 * |U| here is twice the geometric annulus volume; every downstream formula
 * (velocity, integrals, tabulated indices) uses this same A.
 */
inline double flux_density(const Scenario& scn) {
    scn.validate();
    const auto& g = scn.geometry;
    return scn.q_over_h / (2.0 * std::numbers::pi * (g.r_e - g.r_w) * (g.r_e + g.r_w));
}

namespace detail {

// Speed without range checks; callers guarantee r in [r_w, r_e].
inline double speed_at(double A, double r_e, double r) {
    return A * (r_e - r) * (r_e + r) / r;
}

// Positive root of A r^2 + v r - A r_e^2 = 0 in rationalised form.
inline double radius_at(double A, double r_e, double v) {
    return 2.0 * A * r_e * r_e / (v + std::hypot(v, 2.0 * A * r_e));
}

} // namespace detail

/// Pseudo-steady speed v(r) [m/s] for r in [r_w, r_e].
inline double velocity_profile(const Scenario& scn, double r) {
    const double A = flux_density(scn);
    const auto& g = scn.geometry;
    if (!(r >= g.r_w && r <= g.r_e)) {
        throw InputError("velocity_profile: radius " + std::to_string(r) + " outside [r_w, r_e]");
    }
    return detail::speed_at(A, g.r_e, r);
}

/// Inverse of velocity_profile for v in [0, v(r_w)].
inline double radius_of_velocity(const Scenario& scn, double v) {
    const double A = flux_density(scn);
    const auto& g = scn.geometry;
    const double v_max = detail::speed_at(A, g.r_e, g.r_w);
    if (!(v >= 0.0 && v <= v_max)) {
        throw InputError("radius_of_velocity: speed outside [0, v(r_w)]");
    }
    return std::clamp(detail::radius_at(A, g.r_e, v), g.r_w, g.r_e);
}

/**
 * @brief Critical radii r_F = r(v_F) and r_D = r(v_D), clamped to [r_w, r_e].
 *
 * A clamped radius produces an empty zone; e.g. v_F >= v(r_w) leaves no
 * fast zone and v_D = 0 leaves no slow zone.
 */
inline ZonePartition partition_zones(const Scenario& scn) {
    const double A = flux_density(scn);
    const auto& g = scn.geometry;
    const auto clamp_radius = [&](double v, bool& clamped) {
        const double r = detail::radius_at(A, g.r_e, v);
        const double c = std::clamp(r, g.r_w, g.r_e);
        clamped = (r != c);
        return c;
    };
    ZonePartition zp;
    zp.r_F = clamp_radius(scn.params.v_F, zp.r_F_clamped);
    zp.r_D = clamp_radius(scn.params.v_D, zp.r_D_clamped);
    // radius_at is decreasing in v and v_D <= v_F; guard against rounding.
    zp.r_D = std::max(zp.r_D, zp.r_F);
    return zp;
}

} // namespace pssflow
