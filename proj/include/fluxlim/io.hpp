#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fluxlim/core.hpp"

namespace fluxlim {

using json = nlohmann::json;

/// CSV number formatting: 9 significant digits.
std::string csv_number(double v);

/// Writes one CSV line from already formatted fields (',' separator, '\n' ending).
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

json to_json(const State& s);
json to_json(const FluxParams& p);
json to_json(const Wave& w);

/// Solution object with keys system, params, left, right, waves, middles and
/// diagnostics (copied from the argument).
json solution_to_json(const RiemannSolution& sol, const json& diagnostics = json::object());

/// Inverse of solution_to_json. Throws ValidationError on schema errors.
RiemannSolution solution_from_json(const json& j);

/// One row per wave: wave,kind,family,xi_left,xi_right,rho_left,u_left,
/// rho_right,u_right,w_rate,weight_rate_mass,weight_rate_momentum.
void write_solution_csv(std::ostream& out, const RiemannSolution& sol);

}  // namespace fluxlim
