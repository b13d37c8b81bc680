#include "fluxlim/solve.hpp"

#include "fluxlim/isentropic.hpp"
#include "fluxlim/perturbed_transport.hpp"
#include "fluxlim/solution_checks.hpp"
#include "fluxlim/transport.hpp"

namespace fluxlim {

RiemannSolution solve_riemann(SystemKind system, const State& left, const State& right,
                              const FluxParams& params) {
    validate(left, right, params, system);
    switch (system) {
        case SystemKind::ZeroPressure: {
            RiemannSolution sol = solve_zero_pressure(left, right);
            sol.params.gamma = params.gamma;
            return sol;
        }
        case SystemKind::PerturbedTransport: {
            RiemannSolution sol = solve_perturbed_transport(left, right, params.eps1);
            sol.params.gamma = params.gamma;
            return sol;
        }
        case SystemKind::Isentropic: return solve_isentropic(left, right, params);
    }
    throw ValidationError("unknown system");
}

nlohmann::json solution_diagnostics(const RiemannSolution& sol) {
    nlohmann::json d = nlohmann::json::object();
    for (std::size_t i = 0; i < sol.waves.size(); ++i) {
        if (const auto* delta = std::get_if<DeltaShock>(&sol.waves[i])) {
            const DeltaShockData data{delta->sigma, delta->geometric_weight_rate(), sol.state_before(i),
                                      sol.state_after(i)};
            const auto r = grh_residual(data, data.step_left, data.step_right, sol.params.eps1);
            d["grh_residual"] = {r[0], r[1], r[2]};
            d["overcompressive"] = check_overcompressive(delta->sigma, data.step_left, data.step_right);
        }
    }
    if (sol.system == SystemKind::Isentropic) {
        const Region region = classify_region(sol.left, sol.right, sol.params);
        d["region"] = to_string(region);
        if (region != Region::RR_CD) {
            const IntermediateState mid = solve_intermediate(sol.left, sol.right, sol.params);
            nlohmann::json m{{"rho_star", mid.rho_star}, {"u_star", mid.u_star}, {"iterations", mid.iterations}};
            if (mid.sigma1) m["sigma1"] = *mid.sigma1;
            if (mid.sigma2) m["sigma2"] = *mid.sigma2;
            d["intermediate"] = m;
        }
        nlohmann::json shocks = nlohmann::json::array();
        for (const Wave& w : sol.waves) {
            if (const auto* s = std::get_if<Shock>(&w)) {
                const auto r = rh_residual(s->left, s->right, s->speed, sol.params);
                shocks.push_back({{"family", s->family},
                                  {"rh_residual", {r[0], r[1]}},
                                  {"lax", lax_admissible(*s, sol.params)}});
            }
        }
        d["shocks"] = shocks;
    }
    d["invariant_violations"] = check_solution(sol);
    d["warnings"] = parameter_warnings(sol.params);
    return d;
}

}  // namespace fluxlim
