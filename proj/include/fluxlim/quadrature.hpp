#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "fluxlim/core.hpp"

namespace fluxlim {

struct QuadOptions {
    double abs_tol = 1e-11;
    double rel_tol = 0.0;
    int max_intervals = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

namespace detail {

// 15-point Kronrod abscissae on [0, 1] half-range (node 7 is the centre) with
// the embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    double magnitude;  // Kronrod estimate of the integral of |f|
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_15(const F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = kronrod_weights[7] * fc;
    double gauss = gauss_weights[3] * fc;
    double magnitude = kronrod_weights[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double lo = f(centre - dx), hi = f(centre + dx);
        const double pair = lo + hi;
        kronrod += kronrod_weights[j] * pair;
        magnitude += kronrod_weights[j] * (std::abs(lo) + std::abs(hi));
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss), magnitude * std::abs(half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|), or below the
/// roundoff floor 50 * machine epsilon * integral of |f|. Throws
/// NumericalError when max_intervals is exhausted first.
template <class F>
QuadResult integrate(const F& f, double a, double b, const QuadOptions& opt = {}) {
    if (a == b) return {};
    if (b < a) {
        QuadResult r = integrate(f, b, a, opt);
        r.value = -r.value;
        return r;
    }
    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gauss_kronrod_15(f, a, b));
    double value = panels.top().value;
    double error = panels.top().error;
    double magnitude = panels.top().magnitude;
    constexpr double roundoff = 50.0 * std::numeric_limits<double>::epsilon();
    int evaluations = 15;
    int intervals = 1;
    auto require_finite = [&] {
        if (!std::isfinite(value) || !std::isfinite(error)) {
            std::ostringstream os;
            os << "quadrature on [" << a << ", " << b << "] produced a non-finite value";
            throw NumericalError(os.str());
        }
    };
    require_finite();
    while (error > std::max({opt.abs_tol, opt.rel_tol * std::abs(value), roundoff * magnitude})) {
        if (intervals >= opt.max_intervals) {
            std::ostringstream os;
            os << "quadrature on [" << a << ", " << b << "] did not reach tolerance "
               << opt.abs_tol << " (estimate " << error << ")";
            throw NumericalError(os.str());
        }
        const detail::Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        // Panel no longer splittable in floating point.
        if (!(mid > worst.a && mid < worst.b)) break;
        panels.pop();
        const detail::Panel lo = detail::gauss_kronrod_15(f, worst.a, mid);
        const detail::Panel hi = detail::gauss_kronrod_15(f, mid, worst.b);
        value += lo.value + hi.value - worst.value;
        error += lo.error + hi.error - worst.error;
        magnitude += lo.magnitude + hi.magnitude - worst.magnitude;
        evaluations += 30;
        ++intervals;
        panels.push(lo);
        panels.push(hi);
        // Re-sum periodically to avoid drift from the running updates.
        if (intervals % 64 == 0) {
            auto copy = panels;
            value = 0.0;
            error = 0.0;
            magnitude = 0.0;
            while (!copy.empty()) {
                value += copy.top().value;
                error += copy.top().error;
                magnitude += copy.top().magnitude;
                copy.pop();
            }
        }
    }
    require_finite();
    return {value, error, evaluations};
}

}  // namespace fluxlim
