#pragma once

/**
 * @file ode.hpp
 * @brief Scalar adaptive Dormand-Prince 5(4) integrator.
 *
 * Integrates y' = f(x, y) from x0 to x1 (either direction) with a mixed
 * absolute/relative local error tolerance and returns y(x1).
 */

#include <pssflow/errors.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>

namespace pssflow {

struct OdeOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    double initial_step = 0.0;  ///< 0 picks |x1 - x0| / 100
    long max_steps = 1'000'000;
};

struct OdeStats {
    long accepted = 0;
    long rejected = 0;
};

template <class F>
    requires std::invocable<F&, double, double>
double integrate_ode(F&& f, double x0, double y0, double x1, const OdeOptions& opt = {},
                     OdeStats* stats = nullptr) {
    // Dormand-Prince tableau.
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    // Difference between 5th and embedded 4th order weights.
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double span = x1 - x0;
    if (span == 0.0) {
        return y0;
    }
    const double dir = span > 0.0 ? 1.0 : -1.0;
    double h = opt.initial_step > 0.0 ? dir * opt.initial_step : span / 100.0;
    double x = x0;
    double y = y0;
    double k1 = f(x, y);
    OdeStats local;

    while (dir * (x1 - x) > 0.0) {
        if (local.accepted + local.rejected >= opt.max_steps) {
            throw NumericalError("integrate_ode: step limit reached");
        }
        if (dir * (x + h - x1) > 0.0) {
            h = x1 - x;
        }
        const double k2 = f(x + c2 * h, y + h * a21 * k1);
        const double k3 = f(x + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const double k4 = f(x + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(x + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 = f(x + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = f(x + h, y_new);
        const double err = std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        const double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y), std::abs(y_new));
        const double ratio = err / scale;

        if (!std::isfinite(y_new)) {
            ++local.rejected;
            h *= 0.25;
        } else if (ratio <= 1.0) {
            x = (dir * (x + h - x1) >= 0.0) ? x1 : x + h;
            y = y_new;
            k1 = k7;
            ++local.accepted;
            const double grow = ratio == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(ratio, -0.2));
            h *= grow;
        } else {
            ++local.rejected;
            h *= std::max(0.2, 0.9 * std::pow(ratio, -0.2));
        }
        if (std::abs(h) < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
            throw NumericalError("integrate_ode: step size underflow at x = " + std::to_string(x));
        }
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return y;
}

} // namespace pssflow
