#pragma once

/**
 * @file validation.hpp
 * @brief Self-check suite behind `pssflow validate`.
 *
 * Each property reports the measured quantity and the admissible range.
 */

#include <pssflow/kinematics.hpp>
#include <pssflow/measurements_csv.hpp>
#include <pssflow/oracle.hpp>
#include <pssflow/prefit.hpp>
#include <pssflow/productivity.hpp>
#include <pssflow/quadrature.hpp>
#include <pssflow/sweep.hpp>
#include <pssflow/zone_integrals.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace pssflow {

struct PropertyCheck {
    std::string name;
    double measured = 0.0;
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] bool passed() const { return measured >= lower && measured <= upper; }
};

struct ValidationOptions {
    /// Relative perturbation applied to every Forchheimer zone integral of
    /// the primary route. Non-zero only to prove that the suite notices.
    double forchheimer_fault = 0.0;
    unsigned threads = default_thread_count();
};

inline double relative_difference(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

/// Reference reservoir with the given overrides.
inline Scenario reference_reservoir(double q_over_h, double s, RegimeAssignment regime) {
    Scenario scn;
    scn.q_over_h = q_over_h;
    scn.params.s = s;
    scn.regime = regime;
    return scn;
}

namespace detail {

inline PropertyCheck check_oracle_equivalence(const ValidationOptions& opt) {
    std::vector<Scenario> cases;
    for (const auto& regime : regimes::all_presets) {
        for (double q : {1e-4, 1e-2, 1.0}) {
            for (double s : {0.3, 0.7}) {
                cases.push_back(reference_reservoir(q, s, regime));
            }
        }
    }
    PiOptions pi_opt;
    pi_opt.forchheimer_scale = 1.0 + opt.forchheimer_fault;
    const auto diffs = parallel_map<double>(
        cases.size(),
        [&](std::size_t i) {
            return relative_difference(compute_pi(cases[i], pi_opt).j_raw, pi_from_profile(cases[i]).j_raw);
        },
        opt.threads);
    return {"oracle_equivalence (zone integrals vs pressure profile, rel)",
            *std::max_element(diffs.begin(), diffs.end()), 0.0, 1e-6};
}

inline PropertyCheck check_closed_forms() {
    const Scenario base = reference_reservoir(1.0, 0.7, regimes::D);
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> pick(base.geometry.r_w, base.geometry.r_e);
    const double A = flux_density(base);
    const double re = base.geometry.r_e;
    const QuadratureOptions tight{1e-13, 1e-300, 2000};
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double a = pick(rng);
        double b = pick(rng);
        if (a > b) {
            std::swap(a, b);
        }
        const auto darcy = [&](double r) {
            const double u = (re - r) * (re + r);
            return base.params.alpha * u * u / r;
        };
        const auto forch = [&](double r) {
            const double u = (re - r) * (re + r);
            return (base.params.alpha + base.params.beta * A * u / r) * u * u / r;
        };
        worst = std::max(worst, relative_difference(s_darcy(base, a, b), integrate_adaptive(darcy, a, b, tight).value));
        worst = std::max(worst, relative_difference(s_forch(base, a, b), integrate_adaptive(forch, a, b, tight).value));
    }
    return {"closed_form_vs_quadrature (S_D, S_F, rel)", worst, 0.0, 1e-9};
}

inline PropertyCheck check_round_trip() {
    double worst = 0.0;
    for (double re : {1000.0, 100.0}) {
        Scenario scn;
        scn.geometry.r_e = re;
        for (double r : log_space(scn.geometry.r_w, re, 100)) {
            worst = std::max(worst, relative_difference(radius_of_velocity(scn, velocity_profile(scn, r)), r));
        }
    }
    return {"inverse_round_trip (r(v(r)) vs r, rel)", worst, 0.0, 1e-10};
}

inline PropertyCheck check_forchheimer_monotone() {
    std::size_t violations = 0;
    double prev = std::numeric_limits<double>::infinity();
    for (double q : log_space(1e-7, 1e4, 23)) {
        const double j = compute_pi(reference_reservoir(q, 0.7, regimes::F)).j_dimensionless;
        violations += (j < prev) ? 0 : 1;
        prev = j;
    }
    return {"forchheimer_decreasing_in_flux (violations)", static_cast<double>(violations), 0.0, 0.0};
}

inline PropertyCheck check_predarcy_monotone() {
    std::size_t violations = 0;
    for (const auto& regime : {regimes::DDpD, regimes::FDpD}) {
        for (double q : {1e-4, 1e-2}) {
            double prev = std::numeric_limits<double>::infinity();
            for (int k = 0; k <= 10; ++k) {
                const double j = compute_pi(reference_reservoir(q, 0.1 * k, regime)).j_dimensionless;
                violations += (j <= prev * (1.0 + 1e-12)) ? 0 : 1;
                prev = j;
            }
        }
    }
    return {"predarcy_nonincreasing_in_s (violations)", static_cast<double>(violations), 0.0, 0.0};
}

inline PropertyCheck check_vd_limit() {
    Scenario fdpd = reference_reservoir(1e-4, 0.3, regimes::FDpD);
    fdpd.geometry.r_e = 100.0;
    fdpd.params.v_D = 0.0;
    Scenario fdd = fdpd;
    fdd.regime = regimes::FDD;
    return {"fdpd_to_fdd_as_vD_to_0 (rel)",
            relative_difference(compute_pi(fdpd).j_raw, compute_pi(fdd).j_raw), 0.0, 1e-10};
}

} // namespace detail

/// Scenario used for the compressibility scaling check: a low-rate well in
/// which gamma = 1e-4 .. 1e-3 still perturbs the speed only slightly.
inline Scenario compressibility_scenario() {
    Scenario scn;
    scn.geometry.r_e = 100.0;
    scn.q_over_h = 1e-9;
    scn.regime = regimes::D;
    return scn;
}

/// max|v_gamma - v| at gamma_hi divided by the same at gamma_lo.
inline double compressibility_error_ratio(const Scenario& scn, double gamma_hi, double gamma_lo,
                                          std::size_t samples = 200) {
    const auto radii = log_space(scn.geometry.r_w, scn.geometry.r_e, samples);
    const double hi = max_compressibility_deviation(compressible_velocity(scn, gamma_hi, radii));
    const double lo = max_compressibility_deviation(compressible_velocity(scn, gamma_lo, radii));
    return hi / lo;
}

inline std::vector<PropertyCheck> run_validation(const ValidationOptions& opt = {}) {
    std::vector<PropertyCheck> out;
    out.push_back(detail::check_oracle_equivalence(opt));
    out.push_back(detail::check_closed_forms());
    out.push_back(detail::check_round_trip());
    out.push_back(detail::check_forchheimer_monotone());
    out.push_back(detail::check_predarcy_monotone());
    out.push_back(detail::check_vd_limit());
    out.push_back({"gamma_linearity (error ratio gamma=1e-3 vs 1e-4)",
                   compressibility_error_ratio(compressibility_scenario(), 1e-3, 1e-4), 9.0, 11.0});
    out.push_back({"gamma_linearity_physical (error ratio gamma=1e-8 vs 1e-9, FDD)",
                   compressibility_error_ratio(reference_reservoir(1e-4, 0.7, regimes::FDD), 1e-8, 1e-9),
                   9.0, 11.0});
    return out;
}

inline void write_validation_report(std::ostream& out, const std::vector<PropertyCheck>& checks) {
    for (const auto& c : checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << "  measured=" << format_sci(c.measured, 4)
            << "  allowed=[" << format_sci(c.lower, 3) << ", " << format_sci(c.upper, 3) << "]\n";
    }
}

} // namespace pssflow
