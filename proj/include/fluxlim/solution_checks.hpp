#pragma once

#include <string>
#include <vector>

#include "fluxlim/core.hpp"

namespace fluxlim {

/// Structural and physical invariants of a Riemann solution. Returns one
/// message per violation; an empty result means the solution is consistent.
///
/// Checked: middles count, nondecreasing wave extents, Rankine-Hugoniot
/// residuals (relative 1e-9), strict Lax inequalities and jump directions of
/// shocks, overcompressivity and generalized RH residuals of delta shocks,
/// fan density 2 eps1 and rarefaction anchors.
std::vector<std::string> check_solution(const RiemannSolution& sol);

}  // namespace fluxlim
