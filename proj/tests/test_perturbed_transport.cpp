#include <doctest.h>

#include <cmath>
#include <vector>

#include "fluxlim/perturbed_transport.hpp"
#include "fluxlim/profile.hpp"
#include "fluxlim/weak_form.hpp"
#include "oracles.hpp"

using namespace fluxlim;

namespace {

// Hand-evaluated delta shock of (1,2)/(4,0) at eps1 = 0.1.
const double sigma_t1_01 = (-1.8 + 2.0 * std::sqrt(3.51)) / 3.0;
const double w_rate_t1_01 = (-0.2 + 2.0 * std::sqrt(3.51)) / std::sqrt(1.0 + sigma_t1_01 * sigma_t1_01);

}  // namespace

TEST_SUITE("perturbed_transport") {
    TEST_CASE("delta shock for (1,2)/(4,0) at eps1 = 0.1") {
        CHECK(std::abs(sigma_t1_01 - 0.649000) < 1e-6);
        CHECK(std::abs(w_rate_t1_01 - 2.97532) < 1e-4);

        const RiemannSolution sol = solve_perturbed_transport({1, 2}, {4, 0}, 0.1);
        REQUIRE(sol.waves.size() == 1);
        const auto& d = std::get<DeltaShock>(sol.waves[0]);
        CHECK(std::abs(d.sigma - sigma_t1_01) < 1e-14);
        CHECK(std::abs(d.geometric_weight_rate() - w_rate_t1_01) < 1e-13);
        CHECK(d.weight_rate_momentum == doctest::Approx(d.sigma * d.weight_rate_mass).epsilon(1e-15));
    }

    TEST_CASE("equal densities take the midpoint speed") {
        const RiemannSolution sol = solve_perturbed_transport({2, 3}, {2, 1}, 0.25);
        const auto& d = std::get<DeltaShock>(sol.waves[0]);
        CHECK(d.sigma == 2.0);
        CHECK(d.geometric_weight_rate() == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-14));
    }

    TEST_CASE("constant-density fan between contacts") {
        const RiemannSolution sol = solve_perturbed_transport({1, 0}, {4, 1}, 0.01);
        REQUIRE(sol.waves.size() == 3);
        CHECK(std::get<Contact>(sol.waves[0]).speed == 0.0);
        const auto& f = std::get<ConstantDensityFan>(sol.waves[1]);
        CHECK(f.xi_left == 0.0);
        CHECK(f.xi_right == 1.0);
        CHECK(f.rho == 0.02);
        CHECK(std::get<Contact>(sol.waves[2]).speed == 1.0);
        for (double xi : {0.1, 0.25, 0.5, 0.9}) {
            const ProfileSample s = sample_profile(sol, xi);
            CHECK(s.kind == SampleKind::ConstantDensity);
            CHECK(s.state.rho == 0.02);
            CHECK(s.state.u == xi);
        }
    }

    TEST_CASE("contact when velocities agree") {
        const RiemannSolution sol = solve_perturbed_transport({1, 0.3}, {2, 0.3}, 0.1);
        REQUIRE(sol.waves.size() == 1);
        CHECK(std::get<Contact>(sol.waves[0]).speed == 0.3);
        CHECK_THROWS_AS(solve_perturbed_transport({0.2, 0}, {2, 0}, 0.1), ValidationError);
        CHECK_THROWS_AS(solve_perturbed_transport({1, 0}, {2, 0}, 0.0), ValidationError);
    }

    TEST_CASE("delta speed at eps1 = 0 matches the zero-pressure speed") {
        CHECK(std::abs(delta_speed_eps1({1, 2}, {4, 0}, 0.0) - 2.0 / 3.0) < 1e-15);
        oracle::Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            const oracle::Data d{rng.uniform(0.01, 5), rng.uniform(-3, 3), rng.uniform(0.01, 5), rng.uniform(-3, 3)};
            if (!(d.u_l > d.u_r)) continue;
            CHECK(std::abs(delta_speed_eps1({d.rho_l, d.u_l}, {d.rho_r, d.u_r}, 0.0) - oracle::zp_sigma(d)) < 1e-12);
        }
    }

    TEST_CASE("speed solves the location quadratic and obeys the entropy condition") {
        oracle::Rng rng(5);
        for (int i = 0; i < 1000; ++i) {
            const double eps1 = rng.uniform(0.0, 0.2);
            const State l{2 * eps1 + rng.uniform(0.01, 5), rng.uniform(-3, 3)};
            const State r{2 * eps1 + rng.uniform(0.01, 5), rng.uniform(-3, 3)};
            if (!(l.u > r.u)) continue;
            const DeltaShockData d = perturbed_delta(l, r, eps1);
            CHECK(r.u < d.sigma);
            CHECK(d.sigma < l.u);
            CHECK(d.w_rate > 0.0);
            CHECK(std::abs(location_quadratic_residual(l, r, eps1, d.sigma)) < 1e-10);
            for (double v : grh_residual(d, l, r, eps1)) CHECK(std::abs(v) < 1e-12);
        }
    }

    TEST_CASE("wrong speed leaves a residual") {
        const double sigma = delta_speed_eps1({1, 2}, {4, 0}, 0.1);
        CHECK(std::abs(location_quadratic_residual({1, 2}, {4, 0}, 0.1, sigma + 0.05)) > 1e-3);
    }

    TEST_CASE("eps1 limit table") {
        const std::vector<double> schedule{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
        const auto rows = eps1_limit_table({1, 2}, {4, 0}, schedule);
        REQUIRE(rows.size() == 6);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].sigma_error < rows[i - 1].sigma_error);
            CHECK(rows[i].w_rate_error < rows[i - 1].w_rate_error);
        }
        CHECK(rows.back().sigma_error < 1e-6 * 20);

        const std::vector<double> zero{0.0};
        const auto exact = eps1_limit_table({1, 2}, {4, 0}, zero);
        CHECK(exact[0].sigma == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(exact[0].w_rate == doctest::Approx(12.0 / std::sqrt(13.0)).epsilon(1e-14));

        const auto symmetric = eps1_limit_table({2, 3}, {2, 1}, schedule);
        for (const auto& row : symmetric) CHECK(row.sigma == 2.0);

        const std::vector<double> rising{1e-3, 1e-2};
        CHECK_THROWS_AS(eps1_limit_table({1, 2}, {4, 0}, rising), ValidationError);
        const std::vector<double> too_big{0.6};
        CHECK_THROWS_AS(eps1_limit_table({1, 2}, {4, 0}, too_big), ValidationError);
        CHECK_THROWS_AS(eps1_limit_table({1, 0}, {4, 2}, schedule), ContractError);
    }

    TEST_CASE("weak-form residuals of perturbed solutions") {
        for (const TestFunction& psi : default_test_suite()) {
            for (const auto& [l, r] : {std::pair{State{1, 2}, State{4, 0}}, std::pair{State{1, 0}, State{4, 1}}}) {
                const auto res = weak_form_residual(solve_perturbed_transport(l, r, 0.1), psi);
                CHECK(std::abs(res[0]) < 1e-8);
                CHECK(std::abs(res[1]) < 1e-8);
            }
        }
    }
}
