#pragma once

#include <array>

#include "fluxlim/core.hpp"

namespace fluxlim {

/// Delta-shock data for the transport systems: speed, geometric weight rate
/// w(t)/t, and the regular part (the two constant states either side of the
/// support line x = sigma * t).
struct DeltaShockData {
    double sigma = 0.0;
    double w_rate = 0.0;
    State step_left;
    State step_right;

    /// w(t) * sqrt(1 + sigma^2) / t.
    double mass_rate() const;
    DeltaShock as_wave() const;
};

/// Residuals of the generalized Rankine-Hugoniot ODEs along x = sigma t with
/// w(t) = w_rate * t:
///   r1 = dx/dt - sigma
///   r2 = d(w sqrt(1+sigma^2))/dt - (sigma [rho] - [rho u - 2 eps1 u])
///   r3 = d(w sigma sqrt(1+sigma^2))/dt - (sigma [rho u] - [rho u^2 - eps1 u^2])
/// eps1 = 0 gives the zero-pressure relations.
std::array<double, 3> grh_residual(const DeltaShockData& d, const State& left, const State& right,
                                   double eps1);

/// Zero-pressure form of grh_residual.
std::array<double, 3> grh_residual_zp(const DeltaShockData& d, const State& left, const State& right);

/// Overcompressive entropy condition u_+ < sigma < u_-.
bool check_overcompressive(double sigma, const State& left, const State& right);

/// Delta shock of the zero-pressure system; requires u_- > u_+.
DeltaShockData zero_pressure_delta(const State& left, const State& right);

/// Exact Riemann solution of the zero-pressure (transport) equations.
RiemannSolution solve_zero_pressure(const State& left, const State& right);

}  // namespace fluxlim
