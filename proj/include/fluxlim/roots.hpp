#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "fluxlim/core.hpp"

namespace fluxlim {

struct RootOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_iterations = 200;
};

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Brent's bracketed root finder (inverse quadratic / secant steps safeguarded
/// by bisection). Requires f(lo) and f(hi) of opposite sign or one of them zero.
template <class F>
RootResult find_root(const F& f, double lo, double hi, const RootOptions& opt = {}) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream os;
        os << "root not bracketed on [" << lo << ", " << hi << "]: f = " << fa << ", " << fb;
        throw NumericalError(os.str());
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 1; iter <= opt.max_iterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol =
            2.0 * eps * std::abs(b) + 0.5 * std::max(opt.abs_tol, opt.rel_tol * std::abs(b));
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return {b, fb, iter};
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    std::ostringstream os;
    os << "root finder exceeded " << opt.max_iterations << " iterations near " << b;
    throw NumericalError(os.str());
}

/// Plain bisection down to adjacent doubles. For monotone f only.
template <class F>
double bisect(const F& f, double lo, double hi, int max_iterations = 2000) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    const double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream os;
        os << "bisection interval [" << lo << ", " << hi << "] does not bracket a root";
        throw NumericalError(os.str());
    }
    for (int i = 0; i < max_iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace fluxlim
