#include "fluxlim/transport.hpp"

#include <cmath>

namespace fluxlim {

double DeltaShockData::mass_rate() const { return w_rate * std::sqrt(1.0 + sigma * sigma); }

DeltaShock DeltaShockData::as_wave() const {
    const double m = mass_rate();
    return DeltaShock{sigma, m, m * sigma};
}

std::array<double, 3> grh_residual(const DeltaShockData& d, const State& left, const State& right,
                                   double eps1) {
    auto jump = [&](auto q) { return q(right) - q(left); };
    const double j_rho = jump([](const State& s) { return s.rho; });
    const double j_rho_u = jump([](const State& s) { return s.rho * s.u; });
    const double j_mass_flux = jump([&](const State& s) { return s.rho * s.u - 2.0 * eps1 * s.u; });
    const double j_mom_flux =
        jump([&](const State& s) { return s.rho * s.u * s.u - eps1 * s.u * s.u; });

    // x(t) = sigma t, so dx/dt is sigma identically.
    const double dxdt = d.sigma;
    const double m = d.mass_rate();
    return {dxdt - d.sigma, m - (d.sigma * j_rho - j_mass_flux),
            m * d.sigma - (d.sigma * j_rho_u - j_mom_flux)};
}

std::array<double, 3> grh_residual_zp(const DeltaShockData& d, const State& left, const State& right) {
    return grh_residual(d, left, right, 0.0);
}

bool check_overcompressive(double sigma, const State& left, const State& right) {
    return right.u < sigma && sigma < left.u;
}

DeltaShockData zero_pressure_delta(const State& left, const State& right) {
    if (!(left.u > right.u)) throw ContractError("zero-pressure delta shock requires u_- > u_+");
    const double sl = std::sqrt(left.rho);
    const double sr = std::sqrt(right.rho);
    if (sl + sr == 0.0) throw ContractError("zero-pressure delta shock requires rho_- + rho_+ > 0");
    const double sigma = (sr * right.u + sl * left.u) / (sl + sr);
    const double w_rate = sl * sr * (left.u - right.u) / std::sqrt(1.0 + sigma * sigma);
    return {sigma, w_rate, left, right};
}

RiemannSolution solve_zero_pressure(const State& left, const State& right) {
    const FluxParams params{0.0, 0.0, 2.0};
    validate(left, right, params, SystemKind::ZeroPressure);
    RiemannSolution sol{SystemKind::ZeroPressure, params, left, right, {}, {}};
    if (left.u < right.u) {
        sol.waves = {Contact{left.u}, VacuumFan{left.u, right.u}, Contact{right.u}};
        sol.middles = {State{0.0, left.u}, State{0.0, right.u}};
    } else if (left.u > right.u) {
        sol.waves = {zero_pressure_delta(left, right).as_wave()};
    } else if (left.rho != right.rho) {
        sol.waves = {Contact{left.u}};
    }
    return sol;
}

}  // namespace fluxlim
