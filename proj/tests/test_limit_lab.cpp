#include <doctest.h>

#include <cmath>

#include "fluxlim/isentropic.hpp"
#include "fluxlim/limit_lab.hpp"
#include "fluxlim/transport.hpp"
#include "fluxlim/weak_form.hpp"
#include "oracles.hpp"

using namespace fluxlim;

namespace {

const State t1_left{1, 2}, t1_right{4, 0};

// Closed-form limits for (1,2)/(4,0) at gamma = 2.
constexpr double p_scaled_limit = 32.0 / 9.0;
constexpr double sigma_limit = 2.0 / 3.0;
constexpr double mass_gap_limit = 4.0;
const double w1_limit = 4.0 / std::sqrt(1.0 + 4.0 / 9.0);
const double w2_limit = (8.0 / 3.0) / std::sqrt(1.0 + 4.0 / 9.0);

}  // namespace

TEST_SUITE("limit_lab") {
    TEST_CASE("schedules and paths") {
        const auto eps = decade_schedule(2, 4);
        REQUIRE(eps.size() == 3);
        CHECK(eps[0] == 1e-2);
        CHECK(eps[2] == 1e-4);
        const auto e1sq = make_schedule(eps, EpsPath::Eps1Squared);
        CHECK(e1sq[1].first == doctest::Approx(1e-6).epsilon(1e-15));
        CHECK(e1sq[1].second == 1e-3);
        const auto e2sq = make_schedule(eps, EpsPath::Eps2Squared);
        CHECK(e2sq[1].first == 1e-3);
        CHECK(e2sq[1].second == doctest::Approx(1e-6).epsilon(1e-15));
        for (EpsPath p : {EpsPath::Equal, EpsPath::Eps1Squared, EpsPath::Eps2Squared}) {
            CHECK(path_from_string(to_string(p)) == p);
        }
        CHECK_THROWS_AS(path_from_string("diag"), ValidationError);
    }

    TEST_CASE("two-shock limit targets") {
        const TwoShockTargets t = two_shock_targets(t1_left, t1_right, 2.0);
        CHECK(t.sigma == doctest::Approx(sigma_limit).epsilon(1e-15));
        CHECK(t.p_scaled == doctest::Approx(p_scaled_limit).epsilon(1e-15));
        CHECK(t.mass_gap == doctest::Approx(mass_gap_limit).epsilon(1e-15));
        CHECK(t.momentum_gap == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
        CHECK(std::abs(t.w1_rate - 3.328201) < 1e-6);
        CHECK(std::abs(t.w2_rate - 2.218801) < 1e-6);
        CHECK(std::abs(t.w1_rate - w1_limit) < 1e-14);
        CHECK(std::abs(t.w2_rate - w2_limit) < 1e-14);

        const DeltaShockData zp = zero_pressure_delta(t1_left, t1_right);
        CHECK(std::abs(t.w1_rate - zp.w_rate) < 1e-10);
        CHECK(std::abs(t.w2_rate - zp.sigma * zp.w_rate) < 1e-10);

        oracle::Rng rng(31);
        for (int i = 0; i < 300; ++i) {
            const oracle::Data d{rng.uniform(0.1, 5), rng.uniform(-3, 3), rng.uniform(0.1, 5), rng.uniform(-3, 3)};
            if (!(d.u_l > d.u_r)) continue;
            const TwoShockTargets r = two_shock_targets({d.rho_l, d.u_l}, {d.rho_r, d.u_r}, 2.0);
            CHECK(std::abs(r.w1_rate - oracle::zp_w_rate(d)) < 1e-10 * std::max(1.0, r.w1_rate));
        }
    }

    TEST_CASE("two-shock sweep converges on every path") {
        const auto eps = decade_schedule(2, 6);
        const TwoShockTargets targets = two_shock_targets(t1_left, t1_right, 2.0);
        for (EpsPath path : {EpsPath::Equal, EpsPath::Eps1Squared, EpsPath::Eps2Squared}) {
            CAPTURE(to_string(path));
            const auto schedule = make_schedule(eps, path);
            const auto records = sweep_two_shock(t1_left, t1_right, 2.0, schedule);
            REQUIRE(records.size() == 5);
            const SweepRecord& last = records.back();
            CHECK(std::abs(last.p_scaled - p_scaled_limit) < 0.01 * p_scaled_limit);
            CHECK(std::abs(last.sigma1 - sigma_limit) < 1e-2);
            CHECK(std::abs(last.sigma2 - sigma_limit) < 1e-2);
            CHECK(std::abs(last.u_star - sigma_limit) < 1e-2);
            CHECK(std::abs(last.mass_gap - mass_gap_limit) < 0.02 * mass_gap_limit);
            const TwoShockConvergence c = analyze_two_shock(records, targets);
            CHECK(c.rho_star_increasing);
            CHECK(c.errors_decreasing);
        }
    }

    TEST_CASE("symmetric sweep keeps u* at zero") {
        const auto eps = decade_schedule(1, 5);
        const auto records = sweep_two_shock({1, 1}, {1, -1}, 2.0, make_schedule(eps, EpsPath::Equal));
        for (const SweepRecord& r : records) {
            CHECK(r.u_star == 0.0);
            CHECK(r.sigma2 == doctest::Approx(-r.sigma1).epsilon(1e-12));
        }
    }

    TEST_CASE("single entry and contract errors") {
        const std::vector<EpsPair> one{{0.3, 0.3}};
        const auto records = sweep_two_shock(t1_left, t1_right, 2.0, one);
        CHECK(records.size() == 1);
        CHECK(analyze_two_shock(records, two_shock_targets(t1_left, t1_right, 2.0)).errors_decreasing);

        const std::vector<EpsPair> rising{{1e-3, 1e-3}, {1e-2, 1e-2}};
        CHECK_THROWS_AS(sweep_two_shock(t1_left, t1_right, 2.0, rising), ContractError);
        const std::vector<EpsPair> not_ss{{0.1, 1.0}};
        CHECK(classify_region({1, 0.1}, {4, 0}, {0.1, 1.0, 2.0}) == Region::SR);
        CHECK_THROWS_AS(sweep_two_shock({1, 0.1}, {4, 0}, 2.0, not_ss), ContractError);
        CHECK_THROWS_AS(sweep_two_shock({4, 0}, {1, 2}, 2.0, one), ContractError);
    }

    TEST_CASE("weak limit weights emerge") {
        const auto schedule = make_schedule(decade_schedule(2, 4), EpsPath::Equal);
        const auto suite = default_test_suite();
        const WeakLimitReport report = weak_limit_weights(t1_left, t1_right, 2.0, schedule, suite);
        CHECK(report.entries.size() == schedule.size() * suite.size());
        CHECK(report.decreasing);
        CHECK(report.worst_final_relative < 0.05);
        CHECK(std::abs(report.w1_rate - w1_limit) < 1e-12);
        for (std::size_t i = 1; i < schedule.size(); ++i) {
            CHECK(std::abs(report.w1_rate_emergent[i] - w1_limit) < std::abs(report.w1_rate_emergent[i - 1] - w1_limit));
            CHECK(std::abs(report.w2_rate_emergent[i] - w2_limit) < std::abs(report.w2_rate_emergent[i - 1] - w2_limit));
        }
    }

    TEST_CASE("test supported away from the waves pairs with the right state only") {
        const TestFunction far{"far", 0.0, 1.0, 5.0, 8.0, {1.0}, {1.0}};
        const auto schedule = make_schedule(decade_schedule(2, 3), EpsPath::Equal);
        const std::vector<TestFunction> tests{far};
        const WeakLimitReport report = weak_limit_weights(t1_left, t1_right, 2.0, schedule, tests);
        const RiemannSolution constant = solve_zero_pressure(t1_right, t1_right);
        const Pairing area = pair_with(constant, far);
        for (const WeakLimitEntry& e : report.entries) {
            CHECK(e.pairing_mass == doctest::Approx(area.mass).epsilon(1e-11));
            CHECK(e.error_mass < 1e-10);
            CHECK(e.error_momentum < 1e-10);
        }
    }

    TEST_CASE("two-rarefaction sweep toward vacuum") {
        const State l{1, 0}, r{1, 0.6};
        const auto eps = decade_schedule(3, 8);
        const std::vector<double> xi{0.3};
        const RarefactionSweepReport report = sweep_two_rarefaction(l, r, 2.0, make_schedule(eps, EpsPath::Equal), xi);
        REQUIRE(report.eps0);
        CHECK(std::abs(*report.eps0 - 0.0236152) < 1e-6);
        CHECK(report.edges_converging);
        const RarefactionSweepRow& last = report.rows.back();
        CHECK(last.rho_mid == 2e-8);
        CHECK(std::abs(last.u1_error - 2.0 * std::sqrt(1e-8 * (1 - 2e-8))) < 1e-12);
        CHECK(last.u1_error < 1e-3);
        CHECK(last.u2_error < 1e-3);
        REQUIRE(last.samples.size() == 1);
        CHECK(std::abs(last.samples[0].second.u - 0.3) < 1e-3);
        CHECK(last.samples[0].second.rho == 2e-8);

        const double e0 = *report.eps0;
        const std::vector<EpsPair> at_threshold{{e0, e0}};
        CHECK_THROWS_AS(sweep_two_rarefaction(l, r, 2.0, at_threshold, {}), ContractError);
        CHECK_THROWS_AS(sweep_two_rarefaction(r, l, 2.0, make_schedule(eps, EpsPath::Equal), {}), ContractError);
    }
}
