#include "fluxlim/solution_checks.hpp"

#include <cmath>
#include <sstream>

#include "fluxlim/isentropic.hpp"
#include "fluxlim/transport.hpp"

namespace fluxlim {

namespace {

constexpr double rh_tol = 1e-9;

}  // namespace

std::vector<std::string> check_solution(const RiemannSolution& sol) {
    std::vector<std::string> issues;
    auto fail = [&](std::size_t i, const std::string& what) {
        std::ostringstream os;
        os << "wave " << i << " (" << wave_kind(sol.waves[i]) << "): " << what;
        issues.push_back(os.str());
    };

    const std::size_t expected_middles = sol.waves.empty() ? 0 : sol.waves.size() - 1;
    if (sol.middles.size() != expected_middles) {
        std::ostringstream os;
        os << "expected " << expected_middles << " middle states, found " << sol.middles.size();
        issues.push_back(os.str());
        return issues;
    }

    double previous_hi = -INFINITY;
    for (std::size_t i = 0; i < sol.waves.size(); ++i) {
        const Wave& wave = sol.waves[i];
        const auto [lo, hi] = wave_extent(wave);
        if (!(lo <= hi)) fail(i, "extent is reversed");
        if (lo < previous_hi && !nearly_equal(lo, previous_hi, 1e-12)) fail(i, "overlaps previous wave");
        previous_hi = hi;

        const State& before = sol.state_before(i);
        const State& after = sol.state_after(i);

        if (const auto* s = std::get_if<Shock>(&wave)) {
            if (!(s->left == before) || !(s->right == after)) fail(i, "side states disagree with neighbours");
            const auto r = rh_residual(s->left, s->right, s->speed, sol.params);
            if (std::abs(r[0]) > rh_tol || std::abs(r[1]) > rh_tol) fail(i, "Rankine-Hugoniot residual");
            if (!lax_admissible(*s, sol.params)) fail(i, "Lax inequalities violated");
            const bool rho_up = s->left.rho < s->right.rho;
            const bool u_down = s->right.u < s->left.u;
            if (!u_down || (s->family == 1) != rho_up) fail(i, "jump direction inconsistent with family");
        } else if (const auto* d = std::get_if<DeltaShock>(&wave)) {
            if (!check_overcompressive(d->sigma, before, after)) fail(i, "not overcompressive");
            if (!(d->weight_rate_mass > 0.0)) fail(i, "non-positive weight");
            const DeltaShockData data{d->sigma, d->geometric_weight_rate(), before, after};
            const auto r = grh_residual(data, before, after, sol.params.eps1);
            const double scale = std::max(1.0, std::abs(d->weight_rate_momentum) + d->weight_rate_mass);
            for (double v : r) {
                if (std::abs(v) > rh_tol * scale) fail(i, "generalized Rankine-Hugoniot residual");
            }
            if (!nearly_equal(d->weight_rate_momentum, d->sigma * d->weight_rate_mass, 1e-12)) {
                fail(i, "momentum weight differs from sigma * mass weight");
            }
        } else if (const auto* f = std::get_if<ConstantDensityFan>(&wave)) {
            if (f->rho != 2.0 * sol.params.eps1) fail(i, "density differs from 2*eps1");
        } else if (const auto* r = std::get_if<Rarefaction>(&wave)) {
            const State& outer = r->family == 1 ? before : after;
            if (!(r->anchor == outer)) fail(i, "anchor differs from the outer constant state");
        } else if (const auto* v = std::get_if<VacuumFan>(&wave)) {
            if (!(before.u == v->xi_left && after.u == v->xi_right)) fail(i, "vacuum edges mismatch");
        }
    }
    return issues;
}

}  // namespace fluxlim
