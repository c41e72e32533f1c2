#pragma once

/**
 * @file oracle.hpp
 * @brief Independent checks of the productivity index.
 *
 * pi_from_profile() builds the basic pressure profile
 *   W(r) = int_{r_w}^{r} g(v(rho)) v(rho) d rho,   W(r_w) = 0,
 * by quadrature and evaluates the index from its volume average,
 *   J = Q V / int_U W dx = Q (r_e^2 - r_w^2) / (2 int r W(r) dr),
 * with V = pi h (r_e^2 - r_w^2) the annulus volume. This shares no code
 * with the zone-integral route except the kinematics and the law itself.
 *
 * compressible_velocity() integrates the radial continuity equation with
 * the compressibility term kept, for comparison with the truncated field.
 */

#include <pssflow/errors.hpp>
#include <pssflow/kinematics.hpp>
#include <pssflow/model.hpp>
#include <pssflow/ode.hpp>
#include <pssflow/productivity.hpp>
#include <pssflow/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace pssflow {

struct ProfileSample {
    double r = 0.0;  ///< [m]
    double w = 0.0;  ///< basic pressure profile W(r) [Pa]
    double v = 0.0;  ///< truncated speed v(r) [m/s]
};

namespace detail {

// Piecewise-smooth pieces of the profile: zone boundaries plus laws.
struct ProfileModel {
    const Scenario& scn;
    double A;
    std::array<Segment, 3> zones;
    std::array<double, 3> w_start{};  // W at the inner edge of each zone
    QuadratureOptions quad;

    ProfileModel(const Scenario& s, const QuadratureOptions& q)
        : scn(s), A(flux_density(s)), zones(zone_segments(s, partition_zones(s))), quad(q) {
        double w = 0.0;
        for (std::size_t i = 0; i < zones.size(); ++i) {
            w_start[i] = w;
            w += gradient_integral(zones[i].law, zones[i].r1, zones[i].r2);
        }
    }

    // |grad W| = g(v) v under the given law.
    [[nodiscard]] double gradient(ZoneLaw law, double r) const {
        const double v = speed_at(A, scn.geometry.r_e, r);
        if (v == 0.0) {
            return 0.0;
        }
        return g_eval(scn.params, law, v) * v;
    }

    [[nodiscard]] double gradient_integral(ZoneLaw law, double r1, double r2) const {
        if (r1 == r2) {
            return 0.0;
        }
        return integrate_adaptive([&](double r) { return gradient(law, r); }, r1, r2, quad).value;
    }

    [[nodiscard]] std::size_t zone_index(double r) const {
        if (r <= zones[0].r2) {
            return 0;
        }
        if (r <= zones[1].r2) {
            return 1;
        }
        return 2;
    }

    [[nodiscard]] double profile(double r) const {
        const std::size_t i = zone_index(r);
        return w_start[i] + gradient_integral(zones[i].law, zones[i].r1, r);
    }

    // W at r for r known to lie in zone i (avoids re-deciding at boundaries).
    [[nodiscard]] double profile_in_zone(std::size_t i, double r) const {
        return w_start[i] + gradient_integral(zones[i].law, zones[i].r1, r);
    }
};

} // namespace detail

/// Basic pressure profile W(r) [Pa], zero on the well and nondecreasing.
inline double pressure_profile(const Scenario& scn, double r, const QuadratureOptions& opt = {}) {
    scn.validate();
    const auto& g = scn.geometry;
    if (!(r >= g.r_w && r <= g.r_e)) {
        throw InputError("pressure_profile: radius outside [r_w, r_e]");
    }
    return detail::ProfileModel(scn, opt).profile(r);
}

/// W sampled at the given radii (each within [r_w, r_e]).
inline std::vector<ProfileSample> sample_profile(const Scenario& scn, std::span<const double> radii,
                                                 const QuadratureOptions& opt = {}) {
    scn.validate();
    const detail::ProfileModel model(scn, opt);
    std::vector<ProfileSample> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (!(r >= scn.geometry.r_w && r <= scn.geometry.r_e)) {
            throw InputError("sample_profile: radius outside [r_w, r_e]");
        }
        out.push_back({r, model.profile(r), velocity_profile(scn, r)});
    }
    return out;
}

/**
 * @brief Productivity index from the volume-averaged pressure profile.
 *
 * Nested quadrature: the outer integral of r W(r) runs zone by zone and
 * every W evaluation is itself an adaptive integral. contributions[i]
 * holds zone i's share of the denominator so that they sum to L / j_raw.
 */
inline PiResult pi_from_profile(const Scenario& scn, const QuadratureOptions& opt = {}) {
    scn.validate();
    const detail::ProfileModel model(scn, opt);
    const auto& g = scn.geometry;
    const double span = (g.r_e - g.r_w) * (g.r_e + g.r_w);

    std::array<double, 3> moment{};
    double total_moment = 0.0;
    for (std::size_t i = 0; i < model.zones.size(); ++i) {
        const auto& z = model.zones[i];
        if (z.r1 == z.r2) {
            continue;
        }
        moment[i] = integrate_adaptive([&](double r) { return r * model.profile_in_zone(i, r); },
                                       z.r1, z.r2, opt)
                        .value;
        total_moment += moment[i];
    }

    PiResult out;
    out.regime = scn.regime;
    out.zones = partition_zones(scn);
    out.j_raw = scn.total_flux() * span / (2.0 * total_moment);
    out.j_dimensionless = out.j_raw * dimensionless_factor(scn);
    out.denominator = pi_numerator(g) / out.j_raw;
    for (std::size_t i = 0; i < moment.size(); ++i) {
        out.contributions[i] = total_moment > 0.0 ? out.denominator * moment[i] / total_moment : 0.0;
    }
    return out;
}

struct CompressibleSample {
    double r = 0.0;
    double v_gamma = 0.0;  ///< speed with the compressibility term [m/s]
    double v = 0.0;        ///< truncated speed [m/s]
};

/**
 * @brief Radial speed of the slightly compressible pseudo-steady flow.
 *
 * Solves d(r v)/dr = -r (2A + gamma g(v) v^2), v(r_e) = 0, backwards from
 * r_e. At gamma = 0 this reproduces velocity_profile. The law in each zone
 * is the regime's law on the truncated partition. The result is sampled at
 * the given radii, which may be in any order.
 */
inline std::vector<CompressibleSample> compressible_velocity(const Scenario& scn, double gamma,
                                                             std::span<const double> radii,
                                                             const OdeOptions& opt = {}) {
    scn.validate();
    if (!(std::isfinite(gamma) && gamma >= 0.0)) {
        throw InputError("compressible_velocity: gamma must be finite and >= 0");
    }
    const auto& g = scn.geometry;
    const double A = flux_density(scn);
    const auto zones = detail::zone_segments(scn, partition_zones(scn));

    std::vector<std::size_t> order(radii.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!(radii[i] >= g.r_w && radii[i] <= g.r_e)) {
            throw InputError("compressible_velocity: radius outside [r_w, r_e]");
        }
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return radii[a] > radii[b]; });

    // Stops: zone boundaries and sample radii, visited from r_e inwards.
    auto law_at = [&](double r_hi) {
        // Law of the zone containing the open interval just below r_hi.
        for (std::size_t i = 3; i-- > 0;) {
            if (r_hi > zones[i].r1) {
                return zones[i].law;
            }
        }
        return zones[0].law;
    };

    std::vector<CompressibleSample> out(radii.size());
    double r = g.r_e;
    double y = 0.0;  // y = r v_gamma
    std::size_t next_sample = 0;
    auto emit_samples_at_current = [&]() {
        while (next_sample < order.size() && radii[order[next_sample]] == r) {
            const std::size_t idx = order[next_sample++];
            out[idx] = {r, y / r, detail::speed_at(A, g.r_e, r)};
        }
    };
    emit_samples_at_current();
    while (next_sample < order.size()) {
        double target = radii[order[next_sample]];
        for (const auto& z : zones) {
            if (z.r1 < r && z.r1 > target) {
                target = std::max(target, z.r1);
            }
        }
        const ZoneLaw law = law_at(r);
        auto rhs = [&](double x, double yy) {
            const double v = std::max(yy, 0.0) / x;
            double dissipation = 0.0;
            if (gamma > 0.0 && v > 0.0) {
                dissipation = gamma * g_eval(scn.params, law, v) * v * v;
            }
            return -x * (2.0 * A + dissipation);
        };
        y = integrate_ode(rhs, r, y, target, opt);
        r = target;
        emit_samples_at_current();
    }
    return out;
}

/// max over the samples of |v_gamma - v|.
inline double max_compressibility_deviation(std::span<const CompressibleSample> samples) {
    double worst = 0.0;
    for (const auto& s : samples) {
        worst = std::max(worst, std::abs(s.v_gamma - s.v));
    }
    return worst;
}

} // namespace pssflow
