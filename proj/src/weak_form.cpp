#include "fluxlim/weak_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fluxlim/profile.hpp"

namespace fluxlim {

namespace {

// A maximal xi-interval on which the solution is either one constant state or
// the interior of one fan.
struct Segment {
    double xi_lo;
    double xi_hi;
    const Wave* fan;  // nullptr for a constant segment
    State constant;
};

std::vector<Segment> segments_of(const RiemannSolution& sol) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<Segment> out;
    double cursor = -inf;
    State current = sol.left;
    for (std::size_t i = 0; i < sol.waves.size(); ++i) {
        const auto [lo, hi] = wave_extent(sol.waves[i]);
        if (lo > cursor) out.push_back({cursor, lo, nullptr, current});
        const bool is_fan = !std::holds_alternative<Shock>(sol.waves[i]) &&
                            !std::holds_alternative<Contact>(sol.waves[i]) &&
                            !std::holds_alternative<DeltaShock>(sol.waves[i]);
        if (is_fan && hi > lo) out.push_back({lo, hi, &sol.waves[i], {}});
        cursor = std::max(cursor, hi);
        current = sol.state_after(i);
    }
    out.push_back({cursor, inf, nullptr, current});
    return out;
}

State fan_state(const Wave& fan, const FluxParams& params, double xi) {
    if (std::holds_alternative<VacuumFan>(fan)) return {0.0, xi};
    if (const auto* f = std::get_if<ConstantDensityFan>(&fan)) return {f->rho, xi};
    return rarefaction_state(std::get<Rarefaction>(fan), params, xi);
}

// Integrates regular(state, t, x) over the test function's support box plus
// delta(d, t) along each delta-shock line.
template <class Regular, class Singular>
double space_time_integral(const RiemannSolution& sol, const TestFunction& psi,
                           const PairingOptions& opt, const Regular& regular, const Singular& singular) {
    const std::vector<Segment> segments = segments_of(sol);
    std::vector<DeltaShock> deltas;
    for (const Wave& w : sol.waves) {
        if (const auto* d = std::get_if<DeltaShock>(&w)) deltas.push_back(*d);
    }
    auto slice = [&](double t) {
        double total = 0.0;
        for (const Segment& seg : segments) {
            const double a = std::max(psi.x_lo, seg.xi_lo * t);
            const double b = std::min(psi.x_hi, seg.xi_hi * t);
            if (!(a < b)) continue;
            if (seg.fan == nullptr) {
                total += integrate([&](double x) { return regular(seg.constant, t, x); }, a, b, opt.inner)
                             .value;
            } else {
                total += integrate(
                             [&](double x) {
                                 return regular(fan_state(*seg.fan, sol.params, x / t), t, x);
                             },
                             a, b, opt.inner)
                             .value;
            }
        }
        for (const DeltaShock& d : deltas) total += singular(d, t);
        return total;
    };
    return integrate(slice, psi.t_lo, psi.t_hi, opt.outer).value;
}

}  // namespace

Pairing pair_with(const RiemannSolution& sol, const TestFunction& psi, const PairingOptions& opt) {
    const double mass = space_time_integral(
        sol, psi, opt, [&](const State& s, double t, double x) { return s.rho * psi.value(t, x); },
        [&](const DeltaShock& d, double t) {
            return d.weight_rate_mass * t * psi.value(t, d.sigma * t);
        });
    const double momentum = space_time_integral(
        sol, psi, opt,
        [&](const State& s, double t, double x) { return s.rho * s.u * psi.value(t, x); },
        [&](const DeltaShock& d, double t) {
            return d.weight_rate_momentum * t * psi.value(t, d.sigma * t);
        });
    return {mass, momentum};
}

std::array<double, 2> weak_form_residual(const RiemannSolution& sol, const TestFunction& psi,
                                         const PairingOptions& opt) {
    const FluxParams& p = sol.params;
    auto press = [&](double rho) {
        return p.eps2 == 0.0 ? 0.0 : p.eps2 * std::pow(rho, p.gamma) / p.gamma;
    };
    // Transport of the line measure: psi_t + sigma psi_x evaluated on x = sigma t.
    auto along = [&](const DeltaShock& d, double t) {
        const double x = d.sigma * t;
        return psi.dt(t, x) + d.sigma * psi.dx(t, x);
    };
    const double mass = space_time_integral(
        sol, psi, opt,
        [&](const State& s, double t, double x) {
            return s.rho * psi.dt(t, x) + (s.rho * s.u - 2.0 * p.eps1 * s.u) * psi.dx(t, x);
        },
        [&](const DeltaShock& d, double t) { return d.weight_rate_mass * t * along(d, t); });
    const double momentum = space_time_integral(
        sol, psi, opt,
        [&](const State& s, double t, double x) {
            const double flux = s.rho * s.u * s.u - p.eps1 * s.u * s.u + press(s.rho);
            return s.rho * s.u * psi.dt(t, x) + flux * psi.dx(t, x);
        },
        [&](const DeltaShock& d, double t) { return d.weight_rate_momentum * t * along(d, t); });
    return {mass, momentum};
}

std::array<double, 2> weak_form_residual_zp(const RiemannSolution& sol, const TestFunction& psi,
                                            const PairingOptions& opt) {
    if (sol.system != SystemKind::ZeroPressure) {
        throw ContractError("weak_form_residual_zp expects a zero-pressure solution");
    }
    return weak_form_residual(sol, psi, opt);
}

}  // namespace fluxlim
