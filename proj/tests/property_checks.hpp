#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance run.
// Each returns how many cases were examined and the first failure, if any.

#include <cmath>
#include <sstream>
#include <string>

#include "fluxlim/isentropic.hpp"
#include "fluxlim/profile.hpp"
#include "oracles.hpp"

namespace props {

struct Outcome {
    int checked = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0 && checked > 0; }
};

inline std::string describe(const fluxlim::State& l, const fluxlim::State& r, const fluxlim::FluxParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << l.rho << "," << l.u << ")/(" << r.rho << "," << r.u << ") eps1=" << p.eps1 << " eps2=" << p.eps2
       << " gamma=" << p.gamma;
    return os.str();
}

struct Instance {
    fluxlim::State left, right;
    fluxlim::FluxParams params;
};

inline Instance random_instance(oracle::Rng& rng, bool gamma_two_only) {
    static constexpr double gammas[] = {1.4, 5.0 / 3.0, 2.0, 2.5, 3.0};
    Instance in;
    in.params.gamma = gamma_two_only ? 2.0 : gammas[rng.integer(0, 4)];
    in.params.eps1 = rng.uniform(0.001, 0.2);
    in.params.eps2 = rng.uniform(0.01, 2.0);
    const double floor = 2.0 * in.params.eps1;
    in.left = {floor + rng.uniform(0.05, 5.0), rng.uniform(-3.0, 3.0)};
    in.right = {floor + rng.uniform(0.05, 5.0), rng.uniform(-3.0, 3.0)};
    return in;
}

// Strict Lax inequalities, Rankine-Hugoniot relations and jump directions of
// every shock, over `target` randomized data sets whose solution has a shock.
inline Outcome lax_inequalities(int target, unsigned long long seed) {
    using namespace fluxlim;
    Outcome out;
    oracle::Rng rng(seed);
    while (out.checked < target) {
        const Instance in = random_instance(rng, false);
        const Region region = classify_region(in.left, in.right, in.params);
        if (region != Region::SS && region != Region::SR && region != Region::RS) continue;
        ++out.checked;
        const RiemannSolution sol = solve_isentropic(in.left, in.right, in.params);
        const auto& p = in.params;
        for (const Wave& w : sol.waves) {
            const auto* s = std::get_if<Shock>(&w);
            if (!s) continue;
            const State& l = s->left;
            const State& r = s->right;
            const double l1L = oracle::lambda(1, l.rho, l.u, p.eps1, p.eps2, p.gamma);
            const double l2L = oracle::lambda(2, l.rho, l.u, p.eps1, p.eps2, p.gamma);
            const double l1R = oracle::lambda(1, r.rho, r.u, p.eps1, p.eps2, p.gamma);
            const double l2R = oracle::lambda(2, r.rho, r.u, p.eps1, p.eps2, p.gamma);
            const double sg = s->speed;
            const bool lax = s->family == 1 ? (l1R < sg && sg < l1L && sg < l2R) : (l2R < sg && sg < l2L && l1L < sg);
            if (!lax) out.fail("Lax inequalities, family " + std::to_string(s->family) + ": " + describe(in.left, in.right, p));
            const bool direction = r.u < l.u && (s->family == 1 ? l.rho < r.rho : l.rho > r.rho);
            if (!direction) out.fail("jump direction: " + describe(in.left, in.right, p));
            const double mass_l = l.rho * l.u - 2.0 * p.eps1 * l.u, mass_r = r.rho * r.u - 2.0 * p.eps1 * r.u;
            const double mom_l = l.rho * l.u * l.u - p.eps1 * l.u * l.u + p.eps2 * std::pow(l.rho, p.gamma) / p.gamma;
            const double mom_r = r.rho * r.u * r.u - p.eps1 * r.u * r.u + p.eps2 * std::pow(r.rho, p.gamma) / p.gamma;
            const double res_mass = sg * (r.rho - l.rho) - (mass_r - mass_l);
            const double res_mom = sg * (r.rho * r.u - l.rho * l.u) - (mom_r - mom_l);
            const double scale_mass = std::abs(sg) * (r.rho + l.rho) + std::abs(mass_r) + std::abs(mass_l);
            const double scale_mom = std::abs(sg) * (std::abs(r.rho * r.u) + std::abs(l.rho * l.u)) +
                                     std::abs(mom_r) + std::abs(mom_l);
            if (std::abs(res_mass) > 1e-9 * scale_mass || std::abs(res_mom) > 1e-9 * scale_mom) {
                out.fail("Rankine-Hugoniot: " + describe(in.left, in.right, p));
            }
        }
    }
    return out;
}

// Both wave curves are strictly monotone on random pairs rho_a < rho_b.
inline Outcome wave_curve_monotonicity(int pairs, unsigned long long seed) {
    using namespace fluxlim;
    Outcome out;
    oracle::Rng rng(seed);
    for (int i = 0; i < pairs; ++i) {
        const Instance in = random_instance(rng, false);
        const double floor = 2.0 * in.params.eps1;
        const double top = 4.0 * std::max(in.left.rho, in.right.rho);
        double a = floor + rng.uniform(0.0, 1.0) * (top - floor);
        double b = floor + rng.uniform(0.0, 1.0) * (top - floor);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        ++out.checked;
        if (!(wave_curve_u_from_left(a, in.left, in.params) > wave_curve_u_from_left(b, in.left, in.params))) {
            out.fail("left curve not decreasing: " + describe(in.left, in.right, in.params));
        }
        if (!(wave_curve_u_from_right(a, in.right, in.params) < wave_curve_u_from_right(b, in.right, in.params))) {
            out.fail("right curve not increasing: " + describe(in.left, in.right, in.params));
        }
    }
    return out;
}

// lambda_family(sample(xi)) == xi inside every rarefaction fan.
inline Outcome sampler_fan_consistency(int samples, unsigned long long seed) {
    using namespace fluxlim;
    Outcome out;
    oracle::Rng rng(seed);
    while (out.checked < samples) {
        const Instance in = random_instance(rng, false);
        const RiemannSolution sol = solve_isentropic(in.left, in.right, in.params);
        for (const Wave& w : sol.waves) {
            const auto* fan = std::get_if<Rarefaction>(&w);
            if (!fan || !(fan->xi_left < fan->xi_right)) continue;
            const double xi = fan->xi_left + rng.uniform(0.0, 1.0) * (fan->xi_right - fan->xi_left);
            const ProfileSample s = sample_profile(sol, xi);
            const auto p = in.params;
            const double lam = oracle::lambda(fan->family, s.state.rho, s.state.u, p.eps1, p.eps2, p.gamma);
            ++out.checked;
            if (s.kind != SampleKind::Fan && !(xi == fan->xi_left || xi == fan->xi_right)) {
                out.fail("sample inside fan not flagged as fan: " + describe(in.left, in.right, p));
            }
            if (std::abs(lam - xi) > 1e-10 * std::max(1.0, std::abs(xi))) {
                std::ostringstream os;
                os << "lambda(sample(" << xi << ")) = " << lam << ": " << describe(in.left, in.right, p);
                out.fail(os.str());
            }
        }
    }
    return out;
}

// Region and intermediate density agree with a brute-force sign scan of the
// gamma = 2 gap function.
inline Outcome classifier_vs_scan(int instances, unsigned long long seed, int grid = 1000000) {
    using namespace fluxlim;
    Outcome out;
    oracle::Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        FluxParams p{rng.uniform(0.0, 0.1), rng.uniform(0.05, 1.0), 2.0};
        const double floor = 2.0 * p.eps1;
        const State l{floor + rng.uniform(0.1, 3.0), rng.uniform(-1.5, 1.5)};
        const State r{floor + rng.uniform(0.1, 3.0), rng.uniform(-1.5, 1.5)};
        const oracle::Data d{l.rho, l.u, r.rho, r.u};
        const oracle::Scan scan = oracle::scan_gap_g2(d, p.eps1, p.eps2, grid);
        const Region region = classify_region(l, r, p);
        ++out.checked;
        if (scan.constant_density) {
            if (region != Region::RR_CD) out.fail("expected RR_CD: " + describe(l, r, p));
            continue;
        }
        if (std::isnan(scan.root)) {
            out.fail("scan found no root: " + describe(l, r, p));
            continue;
        }
        // Acceptable regions given where the root can lie inside its grid cell.
        auto region_at = [&](double rho) {
            const bool one_shock = rho > l.rho;
            const bool two_shock = rho > r.rho;
            if (one_shock && two_shock) return Region::SS;
            if (one_shock) return Region::SR;
            if (two_shock) return Region::RS;
            return Region::RR;
        };
        const Region a = region_at(scan.cell_lo), b = region_at(scan.cell_hi), c = region_at(scan.root);
        if (region != a && region != b && region != c) {
            out.fail(std::string("region ") + to_string(region) + " vs scan " + to_string(c) + ": " + describe(l, r, p));
            continue;
        }
        const IntermediateState mid = solve_intermediate(l, r, p);
        if (std::abs(mid.rho_star - scan.root) > 1e-6 * std::max(1.0, scan.root)) {
            std::ostringstream os;
            os.precision(12);
            os << "rho_star " << mid.rho_star << " vs scan " << scan.root << ": " << describe(l, r, p);
            out.fail(os.str());
        }
    }
    return out;
}

}  // namespace props
