#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fluxlim/core.hpp"
#include "fluxlim/test_function.hpp"

namespace fluxlim {

/// Path along which (eps1, eps2) -> 0 is driven by a scalar schedule eps:
/// Equal (eps, eps), Eps1Squared (eps^2, eps), Eps2Squared (eps, eps^2).
enum class EpsPath { Equal, Eps1Squared, Eps2Squared };

const char* to_string(EpsPath path);
EpsPath path_from_string(const std::string& name);  // "eq", "e1sq", "e2sq"

using EpsPair = std::pair<double, double>;  // (eps1, eps2)

std::vector<EpsPair> make_schedule(std::span<const double> eps, EpsPath path);

/// eps = 10^-k for k = first..last.
std::vector<double> decade_schedule(int first, int last);

struct SweepRecord {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double rho_star = 0.0;
    double u_star = 0.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double p_scaled = 0.0;  // eps2 * rho_star^gamma
    double mass_gap = 0.0;  // rho_star * (sigma2 - sigma1)
};

/// Zero-pressure limits the two-shock columns approach.
struct TwoShockTargets {
    double sigma = 0.0;       // limit of u*, sigma1, sigma2
    double p_scaled = 0.0;    // gamma rho_- rho_+ ((u_- - u_+) / (sqrt(rho_-) + sqrt(rho_+)))^2
    double mass_gap = 0.0;    // sigma [rho] - [rho u]
    double momentum_gap = 0.0;  // sigma [rho u] - [rho u^2]
    double w1_rate = 0.0;     // mass_gap / sqrt(1 + sigma^2)
    double w2_rate = 0.0;     // momentum_gap / sqrt(1 + sigma^2)
};

TwoShockTargets two_shock_targets(const State& left, const State& right, double gamma);

/// Two-shock intermediate data along a decreasing (eps1, eps2) schedule.
/// Throws ContractError naming the first entry that is not strictly below
/// its predecessor or does not produce two shocks.
std::vector<SweepRecord> sweep_two_shock(const State& left, const State& right, double gamma,
                                         std::span<const EpsPair> schedule);

/// Distance of each sweep column to its limit and the monotonicity verdicts.
struct TwoShockConvergence {
    std::vector<double> sigma1_error, sigma2_error, u_star_error, p_scaled_error, mass_gap_error;
    bool rho_star_increasing = true;
    bool errors_decreasing = true;
};

TwoShockConvergence analyze_two_shock(std::span<const SweepRecord> records, const TwoShockTargets& targets);

struct WeakLimitEntry {
    double eps1 = 0.0;
    double eps2 = 0.0;
    std::string test;
    double pairing_mass = 0.0;      // int int rho^eps psi
    double pairing_momentum = 0.0;  // int int rho^eps u^eps psi
    double target_mass = 0.0;
    double target_momentum = 0.0;
    double error_mass = 0.0;
    double error_momentum = 0.0;
    double scale_mass = 0.0;  // |regular part| + |delta part| of the target
    double scale_momentum = 0.0;
};

struct WeakLimitReport {
    std::vector<WeakLimitEntry> entries;  // schedule-major, then test order
    /// Emergent weight rates rho*(sigma2 - sigma1)/sqrt(1+sigma^2) and
    /// rho* u* (sigma2 - sigma1)/sqrt(1+sigma^2) per schedule entry.
    std::vector<double> w1_rate_emergent, w2_rate_emergent;
    double w1_rate = 0.0;  // closed-form limit
    double w2_rate = 0.0;
    bool decreasing = true;  // every test's errors decrease along the schedule
    double worst_final_relative = 0.0;  // max final error / scale
};

/// Pairs each two-shock solution of the schedule with the tests and compares
/// against the step-plus-delta limit (the zero-pressure delta-shock solution).
WeakLimitReport weak_limit_weights(const State& left, const State& right, double gamma,
                                   std::span<const EpsPair> schedule, std::span<const TestFunction> tests);

struct RarefactionSweepRow {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double u1 = 0.0;  // left edge of the constant-density fan
    double u2 = 0.0;  // right edge
    double rho_mid = 0.0;
    double u1_error = 0.0;  // |u1 - u_-|
    double u2_error = 0.0;  // |u2 - u_+|
    std::vector<std::pair<double, State>> samples;  // (xi, state) at the requested interior points
};

struct RarefactionSweepReport {
    std::optional<double> eps0;  // vacuum threshold on the diagonal eps1 = eps2
    std::vector<RarefactionSweepRow> rows;
    bool edges_converging = true;  // u1, u2 errors and rho_mid strictly decreasing
};

/// Constant-density two-rarefaction solutions along a decreasing schedule.
/// Every entry must satisfy max(eps1, eps2) < eps0 and lie in RR_CD, otherwise
/// ContractError.
RarefactionSweepReport sweep_two_rarefaction(const State& left, const State& right, double gamma,
                                             std::span<const EpsPair> schedule,
                                             std::span<const double> xi_samples);

}  // namespace fluxlim
