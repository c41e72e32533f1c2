#pragma once

/**
 * @file prefit.hpp
 * @brief Pre-Darcy parameter recovery from (velocity, pressure gradient) data.
 *
 * In log-log coordinates the two low-velocity laws are straight lines:
 *   log|grad p| = log lambda + (1 - s) log v     (v < v_D)
 *   log|grad p| = log alpha  +         log v     (v > v_D)
 * fit_segments() tries every split of the velocity-sorted data that leaves
 * at least three points on each side, fits both lines by least squares
 * (the Darcy line with its slope pinned to 1, the pre-Darcy slope
 * constrained to [0, 1]) and keeps the split with the smallest total
 * squared residual. A one-line Darcy model is preferred when the extra
 * three parameters do not pay for themselves under the Bayesian
 * information criterion.
 */

#include <pssflow/errors.hpp>
#include <pssflow/model.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pssflow {

struct FlowMeasurement {
    double v = 0.0;       ///< superficial velocity [m/s]
    double grad_p = 0.0;  ///< pressure gradient magnitude [Pa/m]
};

struct FitResult {
    double s_hat = 0.0;
    double lambda_hat = 0.0;
    double alpha_hat = 0.0;
    double v_D_hat = 0.0;  ///< 0 when no pre-Darcy segment was detected
    double sse_total = 0.0;
    std::pair<std::size_t, std::size_t> points_per_segment{};  ///< (pre-Darcy, Darcy)
    bool has_breakpoint = false;
    double darcy_slope_free = 0.0;  ///< unconstrained log-log slope of the Darcy segment
    double sse_darcy_only = 0.0;    ///< residual of the single-line Darcy model
};

namespace detail {

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double sse = 0.0;
};

// Least squares y = c + m x with m restricted to [slope_lo, slope_hi].
// The profiled residual is a convex quadratic in m, so clamping the free
// optimum gives the constrained one.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y, double slope_lo,
                        double slope_hi) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw InputError("fit_segments: degenerate segment (zero velocity variance)");
    }
    LineFit f;
    f.slope = std::clamp(sxy / sxx, slope_lo, slope_hi);
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - f.intercept - f.slope * x[i];
        f.sse += r * r;
    }
    return f;
}

inline LineFit fit_unit_slope(std::span<const double> x, std::span<const double> y) {
    double c = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        c += y[i] - x[i];
    }
    c /= static_cast<double>(x.size());
    LineFit f{c, 1.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - x[i] - c;
        f.sse += r * r;
    }
    return f;
}

inline double bic(double sse, std::size_t n, int parameters) {
    // Residual variances below 1e-20 are treated as an exact fit.
    const double nn = static_cast<double>(n);
    return nn * std::log(std::max(sse / nn, 1e-20)) + parameters * std::log(nn);
}

} // namespace detail

inline constexpr std::size_t min_fit_points = 6;
inline constexpr std::size_t min_segment_points = 3;

/**
 * @brief Segmented log-log fit of measured pressure gradients.
 *
 * Requires at least six points with distinct, positive velocities and
 * positive gradients. The input order does not matter. Among splits with
 * equal residual the one with the smaller breakpoint velocity wins.
 */
inline FitResult fit_segments(std::span<const FlowMeasurement> data) {
    if (data.size() < min_fit_points) {
        throw InputError("fit_segments: at least 6 points required, got " + std::to_string(data.size()));
    }
    std::vector<FlowMeasurement> pts(data.begin(), data.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(pts[i].v > 0.0 && std::isfinite(pts[i].v))) {
            throw InputError("fit_segments: velocity at point " + std::to_string(i + 1) + " must be > 0");
        }
        if (!(pts[i].grad_p > 0.0 && std::isfinite(pts[i].grad_p))) {
            throw InputError("fit_segments: pressure gradient at point " + std::to_string(i + 1) +
                             " must be > 0");
        }
    }
    std::sort(pts.begin(), pts.end(), [](const FlowMeasurement& a, const FlowMeasurement& b) {
        return a.v < b.v || (a.v == b.v && a.grad_p < b.grad_p);
    });
    if (pts.front().v == pts.back().v) {
        throw InputError("fit_segments: all velocities are equal");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].v == pts[i - 1].v) {
            throw InputError("fit_segments: duplicate velocity " + std::to_string(pts[i].v));
        }
    }

    const std::size_t n = pts.size();
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::log(pts[i].v);
        y[i] = std::log(pts[i].grad_p);
    }
    const std::span<const double> xs(x);
    const std::span<const double> ys(y);

    FitResult best;
    best.sse_total = std::numeric_limits<double>::infinity();
    for (std::size_t k = min_segment_points; k + min_segment_points <= n; ++k) {
        const auto low = detail::fit_line(xs.first(k), ys.first(k), 0.0, 1.0);
        const auto high = detail::fit_unit_slope(xs.subspan(k), ys.subspan(k));
        const double sse = low.sse + high.sse;
        // Candidates are visited in increasing breakpoint order, so a strict
        // comparison keeps the smaller v_D on ties.
        if (sse < best.sse_total) {
            best.sse_total = sse;
            best.s_hat = 1.0 - low.slope;
            best.lambda_hat = std::exp(low.intercept);
            best.alpha_hat = std::exp(high.intercept);
            best.v_D_hat = std::sqrt(pts[k - 1].v * pts[k].v);
            best.points_per_segment = {k, n - k};
            best.darcy_slope_free =
                n - k >= 2 ? detail::fit_line(xs.subspan(k), ys.subspan(k), -1e300, 1e300).slope : 1.0;
        }
    }

    const auto darcy = detail::fit_unit_slope(xs, ys);
    best.sse_darcy_only = darcy.sse;
    if (detail::bic(darcy.sse, n, 1) <= detail::bic(best.sse_total, n, 4)) {
        FitResult fallback;
        fallback.s_hat = 0.0;
        fallback.alpha_hat = std::exp(darcy.intercept);
        fallback.lambda_hat = fallback.alpha_hat;
        fallback.v_D_hat = 0.0;
        fallback.sse_total = darcy.sse;
        fallback.points_per_segment = {0, n};
        fallback.has_breakpoint = false;
        fallback.darcy_slope_free = detail::fit_line(xs, ys, -1e300, 1e300).slope;
        fallback.sse_darcy_only = darcy.sse;
        return fallback;
    }
    best.has_breakpoint = true;
    return best;
}

/**
 * @brief Synthetic measurements |grad p| = g(v) v under the piecewise law.
 *
 * The law is chosen by velocity (pre-Darcy below v_D, Forchheimer above
 * v_F). With noise_rel > 0 each gradient is multiplied by
 * exp(noise_rel * N(0,1)) drawn from a generator seeded with `seed`.
 */
inline std::vector<FlowMeasurement> synthesize_measurements(const FlowParameters& params,
                                                            std::span<const double> v_grid,
                                                            double noise_rel, std::uint64_t seed) {
    params.validate();
    if (!(noise_rel >= 0.0)) {
        throw InputError("synthesize_measurements: noise_rel must be >= 0");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<FlowMeasurement> out;
    out.reserve(v_grid.size());
    for (double v : v_grid) {
        if (!(v > 0.0)) {
            throw InputError("synthesize_measurements: velocities must be > 0");
        }
        ZoneLaw law = ZoneLaw::Darcy;
        if (v < params.v_D) {
            law = ZoneLaw::PreDarcy;
        } else if (v > params.v_F) {
            law = ZoneLaw::Forchheimer;
        }
        double grad = g_eval(params, law, v) * v;
        if (noise_rel > 0.0) {
            grad *= std::exp(noise_rel * normal(rng));
        }
        out.push_back({v, grad});
    }
    return out;
}

/// n log-spaced values from lo to hi inclusive.
inline std::vector<double> log_space(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace pssflow
