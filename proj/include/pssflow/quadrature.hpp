#pragma once

/**
 * @file quadrature.hpp
 * @brief Globally adaptive 7/15-point Gauss-Kronrod integration.
 *
 * The panel with the largest error estimate is bisected until the summed
 * estimate falls below max(abs_tol, rel_tol * |value|). Panel values are
 * summed in left-to-right order so results do not depend on the order in
 * which panels were refined.
 */

#include <pssflow/errors.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace pssflow {

struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t subdivisions = 0;  ///< number of panels in the final partition
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    std::size_t max_panels = 2000;
};

/// Raised when the panel cap is reached; carries the best available estimate.
class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, IntegralResult best)
        : NumericalError(what), best_(best) {}

    [[nodiscard]] const IntegralResult& best_estimate() const noexcept { return best_; }

private:
    IntegralResult best_;
};

namespace detail {

// Kronrod abscissae (descending) and weights; odd indices are the Gauss nodes.
inline constexpr std::array<double, 8> kronrod_x{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kronrod_w[7];
    double gauss = fc * gauss_w[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_x[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kronrod_w[j] * sum;
        if (j % 2 == 1) {
            gauss += gauss_w[j / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

struct PanelByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

} // namespace detail

/**
 * @brief Integrate f over [a, b].
 *
 * Returns exactly 0 for a == b. Throws std::invalid_argument for a > b or
 * non-positive tolerances, NumericalError for a non-finite integrand value,
 * and QuadratureError when max_panels is reached before convergence.
 */
template <class F>
    requires std::invocable<F&, double>
IntegralResult integrate_adaptive(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    if (!(a <= b)) {
        throw std::invalid_argument("integrate_adaptive: require a <= b");
    }
    if (!(opt.rel_tol > 0.0 && opt.abs_tol > 0.0) || opt.max_panels == 0) {
        throw std::invalid_argument("integrate_adaptive: tolerances must be > 0");
    }
    if (a == b) {
        return {};
    }

    std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelByError> open;
    std::vector<detail::Panel> done;  // panels too narrow to split further
    double value = 0.0;
    double error = 0.0;

    auto push = [&](const detail::Panel& p) {
        if (!std::isfinite(p.value)) {
            throw NumericalError("integrate_adaptive: integrand is not finite on [" +
                                 std::to_string(p.a) + ", " + std::to_string(p.b) + "]");
        }
        value += p.value;
        error += p.error;
        open.push(p);
    };

    push(detail::gauss_kronrod_15(f, a, b));

    auto finish = [&]() {
        std::vector<detail::Panel> panels = std::move(done);
        while (!open.empty()) {
            panels.push_back(open.top());
            open.pop();
        }
        std::sort(panels.begin(), panels.end(),
                  [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
        IntegralResult out;
        for (const auto& p : panels) {
            out.value += p.value;
            out.abs_error_estimate += p.error;
        }
        out.subdivisions = panels.size();
        return out;
    };

    while (true) {
        const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
        if (error <= target || open.empty()) {
            break;
        }
        if (open.size() + done.size() >= opt.max_panels) {
            throw QuadratureError("integrate_adaptive: panel cap reached before convergence", finish());
        }
        const detail::Panel worst = open.top();
        open.pop();
        value -= worst.value;
        error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
            // Cannot resolve further; keep the panel but stop refining it.
            value += worst.value;
            error += worst.error;
            done.push_back(worst);
            continue;
        }
        push(detail::gauss_kronrod_15(f, worst.a, mid));
        push(detail::gauss_kronrod_15(f, mid, worst.b));
    }

    IntegralResult out = finish();
    const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(out.value));
    if (out.abs_error_estimate > target) {
        throw QuadratureError("integrate_adaptive: accuracy limited by floating-point resolution", out);
    }
    return out;
}

} // namespace pssflow
