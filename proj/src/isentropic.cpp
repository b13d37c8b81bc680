#include "fluxlim/isentropic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fluxlim/quadrature.hpp"
#include "fluxlim/roots.hpp"

namespace fluxlim {

const char* to_string(Region region) {
    switch (region) {
        case Region::SS: return "SS";
        case Region::SR: return "SR";
        case Region::RS: return "RS";
        case Region::RR: return "RR";
        case Region::RR_CD: return "RR_CD";
    }
    return "?";
}

void check_isentropic_domain(const State& left, const State& right, const FluxParams& params) {
    validate_params(params);
    if (!(params.eps2 > 0.0)) throw ValidationError("isentropic wave curves require eps2 > 0");
    const double floor = 2.0 * params.eps1;
    for (const auto& [side, s] : {std::pair{"left", left}, std::pair{"right", right}}) {
        if (!std::isfinite(s.rho) || !std::isfinite(s.u) || !(s.rho > floor)) {
            std::ostringstream os;
            os << side << " state: rho = " << s.rho << " <= 2*eps1 = " << floor;
            throw ValidationError(os.str());
        }
    }
}

double rarefaction_integral(double a, double b, const FluxParams& params) {
    validate_params(params);
    const double floor = 2.0 * params.eps1;
    if (a < floor || b < floor) {
        std::ostringstream os;
        os << "rarefaction integral endpoints [" << a << ", " << b << "] below 2*eps1 = " << floor;
        throw DomainError(os.str());
    }
    if (a == b || params.eps2 == 0.0) return 0.0;
    if (b < a) return -rarefaction_integral(b, a, params);
    const double tau_a = std::sqrt(a - floor);
    const double tau_b = std::sqrt(b - floor);
    const double g2 = params.gamma - 2.0;
    auto integrand = [&](double tau) {
        const double s = floor + tau * tau;
        return 2.0 * std::sqrt(params.eps2 * std::pow(s, g2));
    };
    return integrate(integrand, tau_a, tau_b, QuadOptions{1e-11, 0.0, 4000}).value;
}

double shock_jump(double rho, double anchor, const FluxParams& params) {
    const double g = params.gamma;
    const double denom = anchor * rho - params.eps1 * (rho + anchor);
    if (!(denom > 0.0)) {
        std::ostringstream os;
        os << "shock-curve denominator rho_l rho_r - eps1 (rho_l + rho_r) = " << denom
           << " is not positive";
        throw DomainError(os.str());
    }
    if (rho == anchor) return 0.0;
    const double num = (rho - anchor) * (std::pow(rho, g) - std::pow(anchor, g));
    return std::sqrt(params.eps2 * num / (g * denom));
}

double wave_curve_u_from_left(double rho, const State& left, const FluxParams& params) {
    if (rho <= left.rho) return left.u + rarefaction_integral(rho, left.rho, params);
    return left.u - shock_jump(rho, left.rho, params);
}

double wave_curve_u_from_right(double rho, const State& right, const FluxParams& params) {
    if (rho <= right.rho) return right.u - rarefaction_integral(rho, right.rho, params);
    return right.u + shock_jump(rho, right.rho, params);
}

double wave_curve_gap(double rho, const State& left, const State& right, const FluxParams& params) {
    return wave_curve_u_from_left(rho, left, params) - wave_curve_u_from_right(rho, right, params);
}

std::pair<double, double> constant_density_edges(const State& left, const State& right,
                                                 const FluxParams& params) {
    const double floor = 2.0 * params.eps1;
    return {wave_curve_u_from_left(floor, left, params), wave_curve_u_from_right(floor, right, params)};
}

Region classify_region(const State& left, const State& right, const FluxParams& params) {
    check_isentropic_domain(left, right, params);
    const auto [u1, u2] = constant_density_edges(left, right, params);
    if (u1 <= u2) return Region::RR_CD;
    // The gap is decreasing, so the root lies above rho_-+ exactly when the gap there is positive.
    const bool left_shock = wave_curve_gap(left.rho, left, right, params) > 0.0;
    const bool right_shock = wave_curve_gap(right.rho, left, right, params) > 0.0;
    if (left_shock) return right_shock ? Region::SS : Region::SR;
    return right_shock ? Region::RS : Region::RR;
}

double rh_shock_speed(const State& l, const State& r, double eps1) {
    // [rho u - 2 eps1 u] / [rho] rewritten about the right state.
    return r.u + (l.rho - 2.0 * eps1) * (r.u - l.u) / (r.rho - l.rho);
}

std::array<double, 2> rh_residual(const State& l, const State& r, double sigma, const FluxParams& params) {
    const double e1 = params.eps1;
    auto p = [&](double rho) { return params.eps2 * std::pow(rho, params.gamma) / params.gamma; };
    const double mass_terms[] = {sigma * l.rho, sigma * r.rho, r.rho * r.u, l.rho * l.u,
                                 2.0 * e1 * r.u, 2.0 * e1 * l.u};
    const double mass = -sigma * (r.rho - l.rho) + (r.rho * r.u - 2.0 * e1 * r.u) -
                        (l.rho * l.u - 2.0 * e1 * l.u);
    const double mom_terms[] = {sigma * r.rho * r.u, sigma * l.rho * l.u, r.rho * r.u * r.u,
                                l.rho * l.u * l.u,   e1 * r.u * r.u,      e1 * l.u * l.u,
                                p(r.rho),            p(l.rho)};
    const double mom = -sigma * (r.rho * r.u - l.rho * l.u) +
                       (r.rho * r.u * r.u - e1 * r.u * r.u + p(r.rho)) -
                       (l.rho * l.u * l.u - e1 * l.u * l.u + p(l.rho));
    auto scale = [](const auto& terms) {
        double m = 1e-300;
        for (double t : terms) m = std::max(m, std::abs(t));
        return m;
    };
    return {mass / scale(mass_terms), mom / scale(mom_terms)};
}

bool lax_admissible(const Shock& shock, const FluxParams& params) {
    const auto [l1, l2] = eigenvalues(shock.left, params);
    const auto [r1, r2] = eigenvalues(shock.right, params);
    const double s = shock.speed;
    if (shock.family == 1) return s < l1 && r1 < s && s < r2;
    return l1 < s && s < l2 && r2 < s;
}

IntermediateState solve_intermediate(const State& left, const State& right, const FluxParams& params) {
    const Region region = classify_region(left, right, params);
    if (region == Region::RR_CD) {
        throw ContractError(
            "data lie in the constant-density region; the intermediate state is the fan "
            "rho = 2*eps1 (use solve_isentropic)");
    }
    auto gap = [&](double rho) { return wave_curve_gap(rho, left, right, params); };
    const double lo_rho = std::min(left.rho, right.rho);
    const double hi_rho = std::max(left.rho, right.rho);

    // Bracket the root between consecutive breakpoints of the two curves.
    double lo, hi;
    const double g_lo_rho = gap(lo_rho);
    const double g_hi_rho = gap(hi_rho);
    if (g_lo_rho <= 0.0) {
        lo = 2.0 * params.eps1;
        hi = lo_rho;
    } else if (g_hi_rho <= 0.0) {
        lo = lo_rho;
        hi = hi_rho;
    } else {
        lo = hi_rho;
        hi = 2.0 * hi_rho;
        const double cap = std::ldexp(hi_rho, 60);
        while (gap(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > cap) {
                std::ostringstream os;
                os << "no sign change of the wave-curve gap below rho = " << cap;
                throw NumericalError(os.str());
            }
        }
    }
    const RootResult root = find_root(gap, lo, hi, RootOptions{1e-12, 0.0, 200});

    IntermediateState out;
    out.region = region;
    out.rho_star = root.root;
    out.iterations = root.iterations;
    // The mean of both curves is exact under left/right mirror symmetry.
    out.u_star = 0.5 * (wave_curve_u_from_left(root.root, left, params) +
                        wave_curve_u_from_right(root.root, right, params));
    const State star{out.rho_star, out.u_star};
    if (region == Region::SS || region == Region::SR) {
        out.sigma1 = rh_shock_speed(left, star, params.eps1);
    }
    if (region == Region::SS || region == Region::RS) {
        out.sigma2 = rh_shock_speed(star, right, params.eps1);
    }
    return out;
}

RiemannSolution solve_isentropic(const State& left, const State& right, const FluxParams& params) {
    check_isentropic_domain(left, right, params);
    RiemannSolution sol{SystemKind::Isentropic, params, left, right, {}, {}};
    const double floor = 2.0 * params.eps1;
    const auto [l1, l2] = eigenvalues(left, params);
    const auto [r1, r2] = eigenvalues(right, params);
    (void)l2;
    (void)r1;

    if (classify_region(left, right, params) == Region::RR_CD) {
        const auto [u1, u2] = constant_density_edges(left, right, params);
        sol.waves = {Rarefaction{1, l1, u1, left}, ConstantDensityFan{u1, u2, floor},
                     Rarefaction{2, u2, r2, right}};
        sol.middles = {State{floor, u1}, State{floor, u2}};
        return sol;
    }

    const IntermediateState mid = solve_intermediate(left, right, params);
    const State star{mid.rho_star, mid.u_star};
    const auto [s1, s2] = eigenvalues(star, params);
    if (mid.sigma1) {
        sol.waves.push_back(Shock{1, *mid.sigma1, left, star});
    } else {
        sol.waves.push_back(Rarefaction{1, l1, s1, left});
    }
    if (mid.sigma2) {
        sol.waves.push_back(Shock{2, *mid.sigma2, star, right});
    } else {
        sol.waves.push_back(Rarefaction{2, s2, r2, right});
    }
    sol.middles = {star};
    return sol;
}

double vacuum_gap(double eps, const State& left, const State& right, double gamma) {
    const FluxParams params{eps, eps, gamma};
    return (right.u - left.u) - rarefaction_integral(2.0 * eps, left.rho, params) -
           rarefaction_integral(2.0 * eps, right.rho, params);
}

VacuumThreshold vacuum_threshold(const State& left, const State& right, double gamma) {
    validate_params(FluxParams{0.0, 0.0, gamma});
    if (!(left.u < right.u)) throw ContractError("vacuum threshold requires u_- < u_+");
    if (!(left.rho > 0.0) || !(right.rho > 0.0)) {
        throw ValidationError("vacuum threshold requires positive densities");
    }
    VacuumThreshold out;
    out.upper_bound = 0.5 * std::min(left.rho, right.rho);
    auto h = [&](double eps) { return vacuum_gap(eps, left, right, gamma); };

    // Scan a geometric grid upward from eps = 0 (where h = u_+ - u_- > 0) for
    // the first sign change, then refine inside that cell.
    constexpr int per_decade = 32;
    constexpr int decades = 16;
    const double top = out.upper_bound * (1.0 - 1e-12);
    double prev = 0.0;
    for (int k = per_decade * decades; k >= 0; --k) {
        const double eps = top * std::pow(10.0, -static_cast<double>(k) / per_decade);
        if (h(eps) <= 0.0) {
            out.eps0 = find_root(h, prev, eps, RootOptions{1e-14, 0.0, 400}).root;
            return out;
        }
        prev = eps;
    }
    return out;
}

}  // namespace fluxlim
