#pragma once

#include <json.hpp>

#include "fluxlim/core.hpp"

namespace fluxlim {

/// Validates the data for `system` and dispatches to its exact solver.
RiemannSolution solve_riemann(SystemKind system, const State& left, const State& right,
                              const FluxParams& params);

/// Solver-specific diagnostics: delta-shock residuals, isentropic region and
/// intermediate state, shock residuals, parameter warnings.
nlohmann::json solution_diagnostics(const RiemannSolution& sol);

}  // namespace fluxlim
