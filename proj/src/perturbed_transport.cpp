#include "fluxlim/perturbed_transport.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fluxlim {

namespace {

void require_compressive(const State& left, const State& right) {
    if (!(left.u > right.u)) throw ContractError("delta shock requires u_- > u_+");
}

void require_floor(const State& left, const State& right, double eps1) {
    if (!(eps1 >= 0.0) || !std::isfinite(eps1)) throw ParameterError("eps1 must be finite and >= 0");
    if (!(left.rho > 2.0 * eps1) || !(right.rho > 2.0 * eps1)) {
        std::ostringstream os;
        os << "densities " << left.rho << ", " << right.rho << " must exceed 2*eps1 = " << 2.0 * eps1;
        throw ValidationError(os.str());
    }
}

}  // namespace

double delta_speed_eps1(const State& left, const State& right, double eps1) {
    require_compressive(left, right);
    require_floor(left, right, eps1);
    double sigma;
    if (left.rho == right.rho) {
        sigma = 0.5 * (left.u + right.u);
    } else {
        // ([(rho - eps1) u] + sqrt(a b) (u_- - u_+)) / [rho] with a = rho_- - eps1,
        // b = rho_+ - eps1; dividing through by sqrt(b) - sqrt(a) removes the
        // cancellation for nearly equal densities.
        const double sa = std::sqrt(left.rho - eps1);
        const double sb = std::sqrt(right.rho - eps1);
        sigma = (sb * right.u + sa * left.u) / (sa + sb);
    }
    if (!check_overcompressive(sigma, left, right)) {
        std::ostringstream os;
        os << "delta-shock speed " << sigma << " violates u_+ < sigma < u_- (" << right.u << ", "
           << left.u << ")";
        throw NumericalError(os.str());
    }
    return sigma;
}

DeltaShockData perturbed_delta(const State& left, const State& right, double eps1) {
    const double sigma = delta_speed_eps1(left, right, eps1);
    double mass_rate;
    if (left.rho == right.rho) {
        // [2 eps1 u - rho u] with equal densities
        mass_rate = (left.rho - 2.0 * eps1) * (left.u - right.u);
    } else {
        const double jump_eps_u = eps1 * (right.u - left.u);
        mass_rate =
            jump_eps_u + std::sqrt((left.rho - eps1) * (right.rho - eps1)) * (left.u - right.u);
    }
    return {sigma, mass_rate / std::sqrt(1.0 + sigma * sigma), left, right};
}

double location_quadratic_residual(const State& left, const State& right, double eps1, double sigma) {
    const double jump_rho = right.rho - left.rho;
    const double jump_rho_u = right.rho * right.u - left.rho * left.u;
    const double jump_2eps_u = 2.0 * eps1 * (right.u - left.u);
    const double jump_mom = (right.rho - eps1) * right.u * right.u - (left.rho - eps1) * left.u * left.u;
    const double a = 0.5 * jump_rho * sigma * sigma;
    const double b = -jump_rho_u * sigma;
    const double c = 0.5 * (jump_2eps_u * sigma + jump_mom);
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
    return (a + b + c) / scale;
}

RiemannSolution solve_perturbed_transport(const State& left, const State& right, double eps1) {
    const FluxParams params{eps1, 0.0, 2.0};
    validate(left, right, params, SystemKind::PerturbedTransport);
    RiemannSolution sol{SystemKind::PerturbedTransport, params, left, right, {}, {}};
    const double floor = 2.0 * eps1;
    if (left.u < right.u) {
        sol.waves = {Contact{left.u}, ConstantDensityFan{left.u, right.u, floor}, Contact{right.u}};
        sol.middles = {State{floor, left.u}, State{floor, right.u}};
    } else if (left.u > right.u) {
        sol.waves = {perturbed_delta(left, right, eps1).as_wave()};
    } else if (left.rho != right.rho) {
        sol.waves = {Contact{left.u}};
    }
    return sol;
}

std::vector<Eps1LimitRow> eps1_limit_table(const State& left, const State& right,
                                           std::span<const double> schedule) {
    require_compressive(left, right);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        require_floor(left, right, schedule[i]);
        if (i > 0 && !(schedule[i] < schedule[i - 1])) {
            throw ValidationError("eps1 schedule must be strictly decreasing");
        }
    }
    const DeltaShockData limit = zero_pressure_delta(left, right);
    std::vector<Eps1LimitRow> rows(schedule.size());
    std::transform(schedule.begin(), schedule.end(), rows.begin(), [&](double eps1) {
        const DeltaShockData d = perturbed_delta(left, right, eps1);
        return Eps1LimitRow{eps1, d.sigma, d.w_rate, std::abs(d.sigma - limit.sigma),
                            std::abs(d.w_rate - limit.w_rate)};
    });
    return rows;
}

}  // namespace fluxlim
