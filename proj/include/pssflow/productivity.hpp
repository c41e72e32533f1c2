#pragma once

/**
 * @file productivity.hpp
 * @brief Pseudo-steady productivity index for any three-zone regime.
 *
 *   J = L / (S_near[r_w, r_F] + S_mid[r_F, r_D] + S_far[r_D, r_e]),
 *   L = 2 pi h (r_e^2 - r_w^2)^2,
 *
 * where each S is the zone integral of the law assigned to that zone.
 * Empty zones contribute nothing, so the uniform regimes and the mixed
 * ones (FDD, DDpD, FDpD, FpDpD, ...) share one code path. The reported
 * dimensionless index is J * alpha / (2 pi h).
 */

#include <pssflow/kinematics.hpp>
#include <pssflow/model.hpp>
#include <pssflow/zone_integrals.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace pssflow {

struct PiOptions {
    QuadratureOptions quadrature{};
    /// Multiplies every Forchheimer zone integral. 1 in normal use; the
    /// validation harness sets it != 1 to check that it detects the change.
    double forchheimer_scale = 1.0;
};

struct PiResult {
    double j_raw = 0.0;            ///< [m^3/(Pa*s)]
    double j_dimensionless = 0.0;  ///< j_raw * alpha / (2 pi h)
    ZonePartition zones{};
    std::array<double, 3> contributions{};  ///< per-zone S values, near well first
    double denominator = 0.0;               ///< L / j_raw
    RegimeAssignment regime{};
};

/// alpha / (2 pi h), the factor turning a raw index into the dimensionless one.
inline double dimensionless_factor(const Scenario& scn) {
    return scn.params.alpha / (2.0 * std::numbers::pi * scn.geometry.h);
}

/// L = 2 pi h (r_e^2 - r_w^2)^2.
inline double pi_numerator(const Geometry& g) {
    const double span = (g.r_e - g.r_w) * (g.r_e + g.r_w);
    return 2.0 * std::numbers::pi * g.h * span * span;
}

namespace detail {

struct Segment {
    double r1;
    double r2;
    ZoneLaw law;
};

inline std::array<Segment, 3> zone_segments(const Scenario& scn, const ZonePartition& zp) {
    const auto laws = scn.regime.zones();
    return {Segment{scn.geometry.r_w, zp.r_F, laws[0]}, Segment{zp.r_F, zp.r_D, laws[1]},
            Segment{zp.r_D, scn.geometry.r_e, laws[2]}};
}

// Adjacent zones governed by the same law are fused, so e.g. the Darcy
// regime is always a single S_D[r_w, r_e] regardless of where r_F, r_D fall.
inline std::vector<Segment> merged_segments(const std::array<Segment, 3>& zones) {
    std::vector<Segment> out;
    for (const auto& z : zones) {
        if (!out.empty() && out.back().law == z.law) {
            out.back().r2 = z.r2;
        } else {
            out.push_back(z);
        }
    }
    return out;
}

inline double scaled_zone_integral(const Scenario& scn, const Segment& seg, const PiOptions& opt) {
    if (seg.r1 == seg.r2) {
        return 0.0;
    }
    const double value = zone_integral(scn, seg.law, seg.r1, seg.r2, opt.quadrature);
    return seg.law == ZoneLaw::Forchheimer ? value * opt.forchheimer_scale : value;
}

} // namespace detail

/// Productivity index of the scenario's regime.
inline PiResult compute_pi(const Scenario& scn, const PiOptions& opt = {}) {
    scn.validate();
    PiResult out;
    out.regime = scn.regime;
    out.zones = partition_zones(scn);
    const auto zones = detail::zone_segments(scn, out.zones);
    for (std::size_t i = 0; i < zones.size(); ++i) {
        out.contributions[i] = detail::scaled_zone_integral(scn, zones[i], opt);
    }
    double denominator = 0.0;
    for (const auto& seg : detail::merged_segments(zones)) {
        denominator += detail::scaled_zone_integral(scn, seg, opt);
    }
    out.denominator = denominator;
    out.j_raw = pi_numerator(scn.geometry) / denominator;
    out.j_dimensionless = out.j_raw * dimensionless_factor(scn);
    return out;
}

/// J_regime / J_D = S_D[r_w, r_e] / (regime denominator).
inline double darcy_ratio(const Scenario& scn, const PiOptions& opt = {}) {
    const PiResult pi = compute_pi(scn, opt);
    return s_darcy(scn, scn.geometry.r_w, scn.geometry.r_e) / pi.denominator;
}

} // namespace pssflow
