#include "fluxlim/profile.hpp"

#include <algorithm>
#include <cmath>

#include "fluxlim/isentropic.hpp"
#include "fluxlim/roots.hpp"

namespace fluxlim {

const char* to_string(SampleKind kind) {
    switch (kind) {
        case SampleKind::Constant: return "const";
        case SampleKind::Fan: return "fan";
        case SampleKind::Vacuum: return "vacuum";
        case SampleKind::ConstantDensity: return "constant_density";
        case SampleKind::Boundary: return "boundary";
        case SampleKind::Delta: return "delta";
    }
    return "?";
}

State rarefaction_state(const Rarefaction& fan, const FluxParams& params, double xi) {
    const double floor = 2.0 * params.eps1;
    const State& anchor = fan.anchor;
    if (xi <= fan.xi_left && fan.family == 1) return anchor;
    if (xi >= fan.xi_right && fan.family == 2) return anchor;

    auto state_at = [&](double tau) {
        const double rho = floor + tau * tau;
        const double u = fan.family == 1 ? wave_curve_u_from_left(rho, anchor, params)
                                         : wave_curve_u_from_right(rho, anchor, params);
        return State{rho, u};
    };
    // lambda_1 decreases and lambda_2 increases with rho along their fans.
    auto mismatch = [&](double tau) {
        const State s = state_at(tau);
        const double c = sound_speed(s.rho, params);
        return fan.family == 1 ? (s.u - c) - xi : (s.u + c) - xi;
    };
    const double tau_anchor = std::sqrt(anchor.rho - floor);
    const double f0 = mismatch(0.0);
    const double f1 = mismatch(tau_anchor);
    // Outside the reachable range (degenerate fan or xi past the far edge).
    if ((f0 > 0.0) == (f1 > 0.0)) {
        return std::abs(f0) < std::abs(f1) ? state_at(0.0) : anchor;
    }
    return state_at(find_root(mismatch, 0.0, tau_anchor, {0.0, 0.0, 200}).root);
}

ProfileSample sample_profile(const RiemannSolution& sol, double xi) {
    const State* current = &sol.left;
    for (std::size_t i = 0; i < sol.waves.size(); ++i) {
        const Wave& wave = sol.waves[i];
        const auto [lo, hi] = wave_extent(wave);
        if (xi < lo) return {*current, SampleKind::Constant, std::nullopt};
        if (xi <= hi) {
            if (const auto* d = std::get_if<DeltaShock>(&wave)) {
                return {sol.state_after(i), SampleKind::Delta, *d};
            }
            if (std::holds_alternative<Shock>(wave) || std::holds_alternative<Contact>(wave)) {
                return {sol.state_after(i), SampleKind::Boundary, std::nullopt};
            }
            if (std::holds_alternative<VacuumFan>(wave)) {
                return {State{0.0, xi}, SampleKind::Vacuum, std::nullopt};
            }
            if (const auto* f = std::get_if<ConstantDensityFan>(&wave)) {
                return {State{f->rho, xi}, SampleKind::ConstantDensity, std::nullopt};
            }
            const auto& fan = std::get<Rarefaction>(wave);
            return {rarefaction_state(fan, sol.params, xi), SampleKind::Fan, std::nullopt};
        }
        current = &sol.state_after(i);
    }
    return {*current, SampleKind::Constant, std::nullopt};
}

}  // namespace fluxlim
