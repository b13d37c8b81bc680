#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fluxlim {

// Error hierarchy. The CLI maps each class to its own exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Invalid FluxParams (gamma <= 1, negative eps, non-finite values).
struct ParameterError : Error {
    using Error::Error;
};
/// Argument outside the mathematical domain of an operation (e.g. rho < 2*eps1).
struct DomainError : Error {
    using Error::Error;
};
/// Riemann data not admissible for the requested system.
struct ValidationError : Error {
    using Error::Error;
};
/// Root finding or quadrature failed to reach its tolerance.
struct NumericalError : Error {
    using Error::Error;
};
/// Caller violated an operation's precondition (wrong region, bad schedule).
struct ContractError : Error {
    using Error::Error;
};

/// Primitive unknowns: density and velocity.
struct State {
    double rho = 0.0;
    double u = 0.0;

    friend bool operator==(const State&, const State&) = default;
};

/// Flux perturbation strengths and adiabatic exponent.
///
/// eps1 perturbs the transport fluxes, eps2 scales the pressure p(rho) = rho^gamma / gamma.
struct FluxParams {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double gamma = 2.0;

    friend bool operator==(const FluxParams&, const FluxParams&) = default;
};

enum class SystemKind { ZeroPressure, PerturbedTransport, Isentropic };

const char* to_string(SystemKind kind);
SystemKind system_from_string(const std::string& name);

// Elementary waves. Every wave occupies a closed interval [xi_lo, xi_hi] of
// the self-similar variable xi = x / t; discontinuities have xi_lo == xi_hi.

struct Shock {
    int family = 1;  // 1: backward, 2: forward
    double speed = 0.0;
    State left;
    State right;
};

/// Centred rarefaction fan. `anchor` is the outer constant state the wave curve
/// is parameterized from: the left state for family 1, the right state for family 2.
struct Rarefaction {
    int family = 1;
    double xi_left = 0.0;
    double xi_right = 0.0;
    State anchor;
};

struct Contact {
    double speed = 0.0;
};

/// Weighted delta shock supported on x = sigma * t.
///
/// weight_rate_mass is w(t) * sqrt(1 + sigma^2) / t; the geometric weight w(t)
/// of the line measure is weight_rate_mass * t / sqrt(1 + sigma^2).
/// weight_rate_momentum = sigma * weight_rate_mass.
struct DeltaShock {
    double sigma = 0.0;
    double weight_rate_mass = 0.0;
    double weight_rate_momentum = 0.0;

    /// Geometric weight per unit time, w(t) / t.
    double geometric_weight_rate() const;
};

/// Vacuum region rho = 0, u = xi.
struct VacuumFan {
    double xi_left = 0.0;
    double xi_right = 0.0;
};

/// Constant-density region rho = 2 * eps1, u = xi.
struct ConstantDensityFan {
    double xi_left = 0.0;
    double xi_right = 0.0;
    double rho = 0.0;
};

using Wave = std::variant<Shock, Rarefaction, Contact, DeltaShock, VacuumFan, ConstantDensityFan>;

/// Interval in xi covered by a wave.
std::pair<double, double> wave_extent(const Wave& wave);
const char* wave_kind(const Wave& wave);

/// Self-similar Riemann solution: waves ordered left to right in xi, with the
/// constant states between consecutive waves.
struct RiemannSolution {
    SystemKind system = SystemKind::ZeroPressure;
    FluxParams params;
    State left;
    State right;
    std::vector<Wave> waves;
    std::vector<State> middles;

    /// State immediately left of wave i (left, or middles[i-1]).
    const State& state_before(std::size_t i) const;
    /// State immediately right of wave i (middles[i], or right).
    const State& state_after(std::size_t i) const;
};

/// rho^gamma / gamma.
double pressure(double rho, const FluxParams& params);

/// Characteristic speeds u -/+ sqrt(eps2 * rho^(gamma-2) * (rho - 2 eps1)).
std::pair<double, double> eigenvalues(const State& s, const FluxParams& params);

/// sqrt(eps2 * rho^(gamma-2) * (rho - 2 eps1)); zero at rho == 2 eps1.
double sound_speed(double rho, const FluxParams& params);

/// Throws ParameterError unless gamma > 1 and eps1, eps2 >= 0 are finite.
void validate_params(const FluxParams& params);

/// System-specific admissibility of Riemann data. Throws ParameterError for
/// bad parameters and ValidationError for inadmissible states; the message
/// names the violated bound and the side.
void validate(const State& left, const State& right, const FluxParams& params, SystemKind system);

/// Non-fatal notes about parameters (currently: gamma > 3 has no test oracles).
std::vector<std::string> parameter_warnings(const FluxParams& params);

/// |a - b| <= tol * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double tol = 1e-12);

}  // namespace fluxlim
