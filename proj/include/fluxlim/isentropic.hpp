#pragma once

#include <array>
#include <optional>
#include <string>

#include "fluxlim/core.hpp"

namespace fluxlim {

/// Wave configuration of a Riemann solution of the two-parameter system:
/// S = shock, R = rarefaction, first letter the 1-wave. RR_CD is the
/// two-rarefaction configuration with a constant-density fan in between.
enum class Region { SS, SR, RS, RR, RR_CD };

const char* to_string(Region region);

struct IntermediateState {
    double rho_star = 0.0;
    double u_star = 0.0;
    std::optional<double> sigma1;  // set when the 1-wave is a shock
    std::optional<double> sigma2;  // set when the 2-wave is a shock
    Region region = Region::RR;
    int iterations = 0;
};

/// Checks gamma > 1, eps2 > 0, eps1 >= 0 and rho_+- > 2 eps1. The isentropic
/// wave-curve machinery also covers eps1 = 0 (the plain polytropic gas); use
/// validate(..., SystemKind::Isentropic) for the strict eps1 > 0 contract.
void check_isentropic_domain(const State& left, const State& right, const FluxParams& params);

/// Integral of sqrt(eps2 s^(gamma-2) / (s - 2 eps1)) over [a, b], a, b >= 2 eps1.
///
/// The inverse square-root singularity at s = 2 eps1 is removed with
/// s = 2 eps1 + tau^2, leaving the smooth integrand 2 sqrt(eps2 s^(gamma-2)).
/// Returns a negative value when b < a.
double rarefaction_integral(double a, double b, const FluxParams& params);

/// sqrt(eps2 (rho - anchor)(rho^g - anchor^g) / (g (anchor rho - eps1 (rho + anchor)))):
/// the velocity jump magnitude across a shock joining densities anchor and rho.
double shock_jump(double rho, double anchor, const FluxParams& params);

/// Velocity of the state with density rho reachable from `left` by a 1-wave
/// (rarefaction for rho <= rho_-, shock otherwise). Strictly decreasing in rho.
double wave_curve_u_from_left(double rho, const State& left, const FluxParams& params);

/// Velocity of the state with density rho from which `right` is reachable by a
/// 2-wave. Strictly increasing in rho.
double wave_curve_u_from_right(double rho, const State& right, const FluxParams& params);

/// wave_curve_u_from_left - wave_curve_u_from_right; strictly decreasing.
double wave_curve_gap(double rho, const State& left, const State& right, const FluxParams& params);

Region classify_region(const State& left, const State& right, const FluxParams& params);

/// Intermediate state between the 1- and 2-wave. Throws ContractError for
/// RR_CD data, NumericalError if the root cannot be bracketed or converged.
IntermediateState solve_intermediate(const State& left, const State& right, const FluxParams& params);

/// Shock speed from mass conservation, [rho u - 2 eps1 u] / [rho].
double rh_shock_speed(const State& l, const State& r, double eps1);

/// Both Rankine-Hugoniot residuals of a jump, each divided by the magnitude of
/// its largest term.
std::array<double, 2> rh_residual(const State& l, const State& r, double sigma, const FluxParams& params);

/// Strict Lax inequalities for a shock of the given family.
bool lax_admissible(const Shock& shock, const FluxParams& params);

/// Exact Riemann solution of the two-parameter flux-approximated system.
RiemannSolution solve_isentropic(const State& left, const State& right, const FluxParams& params);

/// Fan edges u1, u2 where the 1- and 2-rarefaction curves meet rho = 2 eps1.
std::pair<double, double> constant_density_edges(const State& left, const State& right,
                                                 const FluxParams& params);

/// (u_+ - u_-) minus both rarefaction integrals from 2 eps to rho_+-, with
/// eps1 = eps2 = eps. Nonnegative exactly when the constant-density fan appears.
double vacuum_gap(double eps, const State& left, const State& right, double gamma);

struct VacuumThreshold {
    /// Smallest eps > 0 with vacuum_gap(eps) = 0; empty when the fan is present
    /// on all of (0, min(rho_+-)/2).
    std::optional<double> eps0;
    double upper_bound = 0.0;  // min(rho_+-)/2
};

VacuumThreshold vacuum_threshold(const State& left, const State& right, double gamma);

}  // namespace fluxlim
