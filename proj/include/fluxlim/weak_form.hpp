#pragma once

#include <array>

#include "fluxlim/core.hpp"
#include "fluxlim/quadrature.hpp"
#include "fluxlim/test_function.hpp"

namespace fluxlim {

/// Tolerances for the nested space-time quadrature.
struct PairingOptions {
    QuadOptions inner{1e-12, 1e-12, 2000};
    QuadOptions outer{1e-11, 1e-12, 2000};
};

/// Distributional pairings of the density and momentum of a self-similar
/// solution with a test function,
///   <rho, psi> = int int rho(x/t) psi dx dt + sum over delta shocks of int m t psi(t, sigma t) dt,
/// where m = w sqrt(1 + sigma^2) / t is the delta's mass rate (the line
/// measure's arclength factor folded in) and the momentum uses sigma * m.
struct Pairing {
    double mass = 0.0;
    double momentum = 0.0;
};

Pairing pair_with(const RiemannSolution& sol, const TestFunction& psi, const PairingOptions& opt = {});

/// Weak-form residuals of the conservation laws of sol.system:
///   <rho, psi_t> + <rho u - 2 eps1 u, psi_x>
///   <rho u, psi_t> + <rho u^2 - eps1 u^2 + eps2 p(rho), psi_x>
/// with delta-shock contributions on the support line. Zero for weak solutions.
std::array<double, 2> weak_form_residual(const RiemannSolution& sol, const TestFunction& psi,
                                         const PairingOptions& opt = {});

/// weak_form_residual restricted to zero-pressure solutions.
std::array<double, 2> weak_form_residual_zp(const RiemannSolution& sol, const TestFunction& psi,
                                            const PairingOptions& opt = {});

}  // namespace fluxlim
