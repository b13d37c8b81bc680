#include "fluxlim/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fluxlim {

const char* to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::ZeroPressure: return "zp";
        case SystemKind::PerturbedTransport: return "pt";
        case SystemKind::Isentropic: return "ise";
    }
    return "?";
}

SystemKind system_from_string(const std::string& name) {
    if (name == "zp") return SystemKind::ZeroPressure;
    if (name == "pt") return SystemKind::PerturbedTransport;
    if (name == "ise") return SystemKind::Isentropic;
    throw ValidationError("unknown system '" + name + "' (expected zp, pt or ise)");
}

double DeltaShock::geometric_weight_rate() const {
    return weight_rate_mass / std::sqrt(1.0 + sigma * sigma);
}

std::pair<double, double> wave_extent(const Wave& wave) {
    struct Visitor {
        std::pair<double, double> operator()(const Shock& w) const { return {w.speed, w.speed}; }
        std::pair<double, double> operator()(const Rarefaction& w) const { return {w.xi_left, w.xi_right}; }
        std::pair<double, double> operator()(const Contact& w) const { return {w.speed, w.speed}; }
        std::pair<double, double> operator()(const DeltaShock& w) const { return {w.sigma, w.sigma}; }
        std::pair<double, double> operator()(const VacuumFan& w) const { return {w.xi_left, w.xi_right}; }
        std::pair<double, double> operator()(const ConstantDensityFan& w) const {
            return {w.xi_left, w.xi_right};
        }
    };
    return std::visit(Visitor{}, wave);
}

const char* wave_kind(const Wave& wave) {
    static constexpr const char* names[] = {"shock",       "rarefaction", "contact",
                                            "delta_shock", "vacuum_fan",  "constant_density_fan"};
    return names[wave.index()];
}

const State& RiemannSolution::state_before(std::size_t i) const {
    return i == 0 ? left : middles.at(i - 1);
}

const State& RiemannSolution::state_after(std::size_t i) const {
    return i + 1 >= waves.size() ? right : middles.at(i);
}

void validate_params(const FluxParams& params) {
    if (!std::isfinite(params.gamma) || !(params.gamma > 1.0)) {
        std::ostringstream os;
        os << "gamma must exceed 1 (got " << params.gamma << ")";
        throw ParameterError(os.str());
    }
    if (!std::isfinite(params.eps1) || params.eps1 < 0.0) {
        throw ParameterError("eps1 must be finite and >= 0");
    }
    if (!std::isfinite(params.eps2) || params.eps2 < 0.0) {
        throw ParameterError("eps2 must be finite and >= 0");
    }
}

double pressure(double rho, const FluxParams& params) {
    validate_params(params);
    if (!(rho >= 0.0)) throw DomainError("pressure: density must be >= 0");
    return std::pow(rho, params.gamma) / params.gamma;
}

double sound_speed(double rho, const FluxParams& params) {
    const double excess = rho - 2.0 * params.eps1;
    if (excess < 0.0) {
        std::ostringstream os;
        os << "density " << rho << " below 2*eps1 = " << 2.0 * params.eps1;
        throw DomainError(os.str());
    }
    if (excess == 0.0 || rho == 0.0 || params.eps2 == 0.0) return 0.0;
    return std::sqrt(params.eps2 * std::pow(rho, params.gamma - 2.0) * excess);
}

std::pair<double, double> eigenvalues(const State& s, const FluxParams& params) {
    validate_params(params);
    const double c = sound_speed(s.rho, params);
    return {s.u - c, s.u + c};
}

namespace {

void check_state(const State& s, const char* side, double floor, bool strict) {
    if (!std::isfinite(s.rho) || !std::isfinite(s.u)) {
        throw ValidationError(std::string(side) + " state is not finite");
    }
    const bool bad = strict ? !(s.rho > floor) : !(s.rho >= floor);
    if (bad) {
        std::ostringstream os;
        os << side << " state: rho = " << s.rho << (strict ? " <= " : " < ");
        if (floor == 0.0 && !strict) {
            os << "0";
        } else {
            os << "2*eps1 = " << floor;
        }
        throw ValidationError(os.str());
    }
}

}  // namespace

void validate(const State& left, const State& right, const FluxParams& params, SystemKind system) {
    validate_params(params);
    switch (system) {
        case SystemKind::ZeroPressure:
            if (params.eps1 != 0.0 || params.eps2 != 0.0) {
                throw ValidationError("zero-pressure system requires eps1 = eps2 = 0");
            }
            check_state(left, "left", 0.0, false);
            check_state(right, "right", 0.0, false);
            return;
        case SystemKind::PerturbedTransport:
            if (!(params.eps1 > 0.0)) throw ValidationError("perturbed transport requires eps1 > 0");
            if (params.eps2 != 0.0) throw ValidationError("perturbed transport requires eps2 = 0");
            break;
        case SystemKind::Isentropic:
            if (!(params.eps1 > 0.0)) throw ValidationError("isentropic system requires eps1 > 0");
            if (!(params.eps2 > 0.0)) throw ValidationError("isentropic system requires eps2 > 0");
            break;
    }
    check_state(left, "left", 2.0 * params.eps1, true);
    check_state(right, "right", 2.0 * params.eps1, true);
}

std::vector<std::string> parameter_warnings(const FluxParams& params) {
    std::vector<std::string> out;
    if (params.gamma > 3.0) {
        std::ostringstream os;
        os << "gamma = " << params.gamma << " lies outside the tested range (1, 3]";
        out.push_back(os.str());
    }
    return out;
}

bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace fluxlim
