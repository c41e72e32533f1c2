#pragma once

/**
 * @file zone_integrals.hpp
 * @brief Per-zone dissipation integrals S_D, S_F and S_pD.
 *
 * With u(r) = r_e^2 - r^2:
 *   S_D [r1,r2] = alpha * int u^2 / r dr
 *   S_F [r1,r2] = int (alpha + beta A u / r) u^2 / r dr
 *   S_pD[r1,r2] = lambda A^(-s) * int u^(2-s) r^(s-1) dr
 *
 * S_D and S_F have elementary antiderivatives and are evaluated in extended
 * precision; S_pD is integrated numerically.
 */

#include <pssflow/errors.hpp>
#include <pssflow/kinematics.hpp>
#include <pssflow/model.hpp>
#include <pssflow/quadrature.hpp>

#include <cmath>
#include <string>

namespace pssflow {

namespace detail {

inline void check_zone_interval(const Scenario& scn, double r1, double r2, const char* who) {
    const auto& g = scn.geometry;
    if (!(g.r_w <= r1 && r1 <= r2 && r2 <= g.r_e)) {
        throw InputError(std::string(who) + ": interval [" + std::to_string(r1) + ", " +
                         std::to_string(r2) + "] not inside [r_w, r_e] or reversed");
    }
}

// int_{r1}^{r2} (r_e^2 - r^2)^2 / r dr
inline long double darcy_kernel(long double re, long double r1, long double r2) {
    const long double re2 = re * re;
    const long double d1 = r2 - r1;
    const long double sum2 = r2 * r2 + r1 * r1;
    return re2 * re2 * std::log1p(d1 / r1) - re2 * d1 * (r2 + r1) + d1 * (r2 + r1) * sum2 / 4.0L;
}

// int_{r1}^{r2} (r_e^2 - r^2)^3 / r^2 dr
inline long double forchheimer_kernel(long double re, long double r1, long double r2) {
    const long double re2 = re * re;
    const long double d1 = r2 - r1;
    const long double cube_diff = d1 * (r2 * r2 + r2 * r1 + r1 * r1);
    const long double fifth_diff =
        d1 * (r2 * r2 * r2 * r2 + r2 * r2 * r2 * r1 + r2 * r2 * r1 * r1 + r2 * r1 * r1 * r1 +
              r1 * r1 * r1 * r1);
    return re2 * re2 * re2 * d1 / (r1 * r2) - 3.0L * re2 * re2 * d1 + re2 * cube_diff -
           fifth_diff / 5.0L;
}

} // namespace detail

/// Darcy zone integral S_D[r1, r2].
inline double s_darcy(const Scenario& scn, double r1, double r2) {
    scn.validate();
    detail::check_zone_interval(scn, r1, r2, "s_darcy");
    if (r1 == r2) {
        return 0.0;
    }
    return static_cast<double>(static_cast<long double>(scn.params.alpha) *
                               detail::darcy_kernel(scn.geometry.r_e, r1, r2));
}

/// Forchheimer zone integral S_F[r1, r2]; reduces to S_D when beta = 0.
inline double s_forch(const Scenario& scn, double r1, double r2) {
    scn.validate();
    detail::check_zone_interval(scn, r1, r2, "s_forch");
    if (r1 == r2) {
        return 0.0;
    }
    const long double re = scn.geometry.r_e;
    const long double darcy = static_cast<long double>(scn.params.alpha) * detail::darcy_kernel(re, r1, r2);
    const long double inertial = static_cast<long double>(scn.params.beta) * flux_density(scn) *
                                 detail::forchheimer_kernel(re, r1, r2);
    return static_cast<double>(darcy + inertial);
}

/// Integrand of S_pD without the lambda A^(-s) prefactor.
inline double predarcy_kernel(double r_e, double s, double r) {
    const double u = (r_e - r) * (r_e + r);
    if (s == 0.0) {
        return u * u / r;
    }
    return std::pow(u, 2.0 - s) * std::pow(r, s - 1.0);
}

/// Pre-Darcy zone integral S_pD[r1, r2], computed by adaptive quadrature.
inline IntegralResult s_predarcy_detailed(const Scenario& scn, double r1, double r2,
                                          const QuadratureOptions& opt = {}) {
    scn.validate();
    detail::check_zone_interval(scn, r1, r2, "s_predarcy");
    if (r1 == r2) {
        return {};
    }
    const double r_e = scn.geometry.r_e;
    const double s = scn.params.s;
    const double A = flux_density(scn);
    const double prefactor = scn.params.lambda * std::pow(A, -s);
    IntegralResult res = integrate_adaptive(
        [r_e, s](double r) { return predarcy_kernel(r_e, s, r); }, r1, r2, opt);
    res.value *= prefactor;
    res.abs_error_estimate *= prefactor;
    return res;
}

inline double s_predarcy(const Scenario& scn, double r1, double r2, const QuadratureOptions& opt = {}) {
    return s_predarcy_detailed(scn, r1, r2, opt).value;
}

/// Zone integral for whichever law is given.
inline double zone_integral(const Scenario& scn, ZoneLaw law, double r1, double r2,
                            const QuadratureOptions& opt = {}) {
    switch (law) {
    case ZoneLaw::PreDarcy: return s_predarcy(scn, r1, r2, opt);
    case ZoneLaw::Darcy: return s_darcy(scn, r1, r2);
    case ZoneLaw::Forchheimer: return s_forch(scn, r1, r2);
    }
    throw std::logic_error("zone_integral: unknown law");
}

} // namespace pssflow
