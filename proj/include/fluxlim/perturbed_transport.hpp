#pragma once

#include <span>
#include <vector>

#include "fluxlim/core.hpp"
#include "fluxlim/transport.hpp"

namespace fluxlim {

/// Delta-shock speed of the eps1-perturbed transport system, u_- > u_+.
///
/// Evaluates the entropy-admissible root in closed form,
///   sigma = ([(rho - eps1) u] + sqrt((rho_- - eps1)(rho_+ - eps1)) (u_- - u_+)) / [rho],
/// and the midpoint (u_- + u_+) / 2 when rho_- == rho_+ exactly. Throws
/// NumericalError if the result violates u_+ < sigma < u_-.
double delta_speed_eps1(const State& left, const State& right, double eps1);

/// Full delta-shock data (speed, geometric weight rate, regular part).
DeltaShockData perturbed_delta(const State& left, const State& right, double eps1);

/// Residual of the quadratic location equation
///   [rho]/2 x^2 - [rho u] t x + ([2 eps1 u] sigma + [rho u^2 - eps1 u^2]) t^2 / 2 = 0
/// at x = sigma t, t = 1, divided by the magnitude of its largest term.
double location_quadratic_residual(const State& left, const State& right, double eps1, double sigma);

/// Exact Riemann solution of the eps1-perturbed transport system (eps2 = 0).
RiemannSolution solve_perturbed_transport(const State& left, const State& right, double eps1);

struct Eps1LimitRow {
    double eps1 = 0.0;
    double sigma = 0.0;
    double w_rate = 0.0;
    double sigma_error = 0.0;   // |sigma(eps1) - sigma(0)|
    double w_rate_error = 0.0;  // |w_rate(eps1) - w_rate(0)|
};

/// Delta-shock speed and weight along a schedule of eps1 values, with the
/// discrepancy to the zero-pressure delta shock. Requires u_- > u_+ and a
/// strictly decreasing schedule of eps1 >= 0 with rho_+- > 2 eps1.
std::vector<Eps1LimitRow> eps1_limit_table(const State& left, const State& right,
                                           std::span<const double> schedule);

}  // namespace fluxlim
