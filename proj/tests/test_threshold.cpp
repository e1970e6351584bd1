#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rental/fixed_rate.hpp"
#include "rental/threshold.hpp"

using namespace rental;
using testutil::uniform;

TEST_CASE("Uniform[0,1] consumer surplus: the worked thresholds and rewards") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(4, d, cs);
    CHECK(plan.rewards[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(plan.rewards[2] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(plan.rewards[3] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(plan.tau(2) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(plan.tau(3) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(plan.tau(4) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(plan.rewards[4] == doctest::Approx(2.125).epsilon(1e-6));
}

TEST_CASE("degenerate single-day plan") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(1, d, cs);
    CHECK(plan.rewards[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK_THROWS_AS(plan.tau(1), Error);
}

TEST_CASE("auction outcomes at horizon 4") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(4, d, cs);

    const auto [a_low, s_low] = run_threshold_auction(plan, 4, 0.3);
    CHECK(a_low == 1);
    REQUIRE(s_low.per_day.size() == 1);
    CHECK(s_low.per_day[0] == 0.0);

    const auto [a_high, s_high] = run_threshold_auction(plan, 4, 0.7);
    CHECK(a_high == 4);
    REQUIRE(s_high.per_day.size() == 4);
    CHECK(s_high.per_day[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(s_high.per_day[1] == 0.0);

    const auto [a_one, s_one] = run_threshold_auction(plan, 1, 0.99);
    CHECK(a_one == 1);
    CHECK(s_one.total() == 0.0);
}

TEST_CASE("class and horizon validation") {
    const auto d = uniform(0.0, 1.0);
    const auto wf = RewardFn::welfare({{0.0, 0.0}, {1.0, 1.0}});
    CHECK_THROWS_AS(precompute_threshold(4, d, wf), Error);
    const auto pos = RewardFn::linear(1.0, 1.0);
    CHECK_THROWS_AS(precompute_threshold(4, d, pos), Error);
}

TEST_CASE("one-or-all structure and per-horizon menus") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(10, d, cs);
    for (int h = 2; h <= 10; ++h) {
        for (int k = 0; k <= 500; ++k) {
            const double v = k / 500.0;
            const auto [alloc, sched] = run_threshold_auction(plan, h, v);
            CHECK((alloc == 1 || alloc == h));
            if (alloc == h) {
                CHECK(sched.filter() == doctest::Approx(plan.tau(h)).epsilon(1e-9));
                CHECK(v >= plan.tau(h));
            }
        }
        const auto menu = threshold_menu(plan, h);
        for (const auto& e : menu.entries()) CHECK((e.alloc == 1 || e.alloc == h));
    }
}

TEST_CASE("structural audit: truthful, min allocation 1, monotone daily average") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(10, d, cs);
    const auto rep = audit_threshold_structure(plan, 1000);
    CHECK(rep.truthful_ok);
    CHECK(rep.min_alloc_ok);
    CHECK(rep.min_alloc >= 1);
    CHECK(rep.avg_reward_ok);
    CHECK(plan.rewards[2] / 2.0 == doctest::Approx(plan.rewards[1]).epsilon(1e-9));
}

TEST_CASE("horizon-4 menu is reward non-monotone but truthful") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(4, d, cs);
    const auto menu = threshold_menu(plan, 4);
    const auto cost = over_time_cost_fn(plan.rewards, 4);
    CHECK(audit_truthful(menu, 1000).ok());
    const auto rep = audit_monotone(menu, cs, cost, 1000);
    CHECK(!rep.reward_monotone());
    // Reward just below the threshold (v alone) exceeds the reward just
    // above (4v - tau - c(4)).
    CHECK(designer_reward(menu, cs, cost, 0.49) >
          designer_reward(menu, cs, cost, 0.51));
}

TEST_CASE("virtual-welfare identity at every horizon") {
    // E[net reward at horizon h] = E[ironed_h(v) X(v) - c_h(X(v))].
    const auto d = uniform(0.0, 1.0);
    for (const auto& g : {RewardFn::negative_tradeoff(1.0, 1.0),
                          RewardFn::negative_tradeoff(2.0, 1.0)}) {
        const auto plan = precompute_threshold(8, d, g);
        for (int h = 2; h <= 8; ++h) {
            const auto& ir = *plan.ironed[static_cast<std::size_t>(h)];
            const double tau = plan.tau(h);
            const double q_tau = d->cdf(tau);
            const double c_all = plan.rewards[h - 1]; // c(h) = R[h-1] - R[0]
            const double virtual_welfare = ir.integral_q(0.0, q_tau) +
                                           static_cast<double>(h) * ir.integral_q(q_tau, 1.0) -
                                           (1.0 - q_tau) * c_all;
            const double net = plan.rewards[h] - plan.rewards[h - 1];
            CHECK(net == doctest::Approx(virtual_welfare).epsilon(1e-6));
        }
    }
}

TEST_CASE("horizon-specific virtual welfare bounds any threshold menu's gross reward") {
    // For monotone threshold menus with minimum allocation 1, the gross
    // reward is at most E[phi_{g,h}(v) X(v)].
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    Rng rng(42);
    const int h = 6;
    const auto czero = CostFn::zero(h);
    for (int iter = 0; iter < 100; ++iter) {
        // Random monotone threshold menu with strictly increasing
        // allocations, payments equal to each interval's left endpoint.
        const int jumps = 1 + static_cast<int>(rng.next_unit() * 2.0);
        std::vector<double> cuts;
        for (int i = 0; i < jumps; ++i) cuts.push_back(0.05 + 0.9 * rng.next_unit());
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) { return b - a < 1e-3; }),
                   cuts.end());
        std::vector<int> allocs{1};
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            const int room = h - allocs.back();
            if (room <= 0) {
                cuts.resize(i);
                break;
            }
            allocs.push_back(allocs.back() + 1 + static_cast<int>(rng.next_unit() * room) % room);
        }
        std::vector<MenuEntry> entries;
        double left = 0.0;
        for (std::size_t i = 0; i <= cuts.size(); ++i) {
            const double right = i == cuts.size() ? 1.0 : cuts[i];
            MenuEntry e;
            e.left = left;
            e.right = right;
            e.alloc = allocs[i];
            e.schedule = PaymentSchedule::canonical(e.alloc, left, left);
            entries.push_back(std::move(e));
            left = right;
        }
        const FiniteMenuSwac menu(h, std::move(entries));
        CHECK(audit_truthful(menu, 200).ok());
        const double gross = expected_reward(menu, cs, czero, *d);
        // E[phi_{g,h}(v) X(v)] exactly: phi is linear in v and the menu is
        // truthful, so each entry contributes alloc * phi(midpoint) * prob.
        double bound = 0.0;
        for (const auto& e : menu.entries()) {
            const double mid = 0.5 * (e.left + e.right);
            bound += (e.right - e.left) * e.alloc * horizon_virtual_value(cs, *d, h, mid);
        }
        CHECK(gross <= bound + 1e-6);
    }
}

TEST_CASE("closed-form uniform recurrence matches the grid computation") {
    const auto d = uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const int n = 12;
    const auto plan = precompute_threshold(n, d, cs);
    const auto rec = uniform_recurrence(n);
    CHECK(rec.taus[4] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rec.ells[4] == doctest::Approx(2.125 / 4.0).epsilon(1e-12));
    for (int i = 4; i <= n; ++i) {
        CHECK(plan.tau(i) == doctest::Approx(rec.taus[static_cast<std::size_t>(i)]).epsilon(1e-6));
        CHECK(plan.rewards[i] / i ==
              doctest::Approx(rec.ells[static_cast<std::size_t>(i)]).epsilon(1e-6));
    }
}

TEST_CASE("recurrence: daily averages rise toward 1") {
    const auto rec = uniform_recurrence(200000);
    for (int i = 2; i <= 200000; ++i) {
        CHECK(rec.ells[static_cast<std::size_t>(i)] >=
              rec.ells[static_cast<std::size_t>(i - 1)] - 1e-15);
        CHECK(rec.ells[static_cast<std::size_t>(i)] <= 1.0);
    }
    // First horizons crossing the recorded marks.
    int first_190 = 0, first_099 = 0;
    for (int i = 1; i <= 200000; ++i) {
        if (!first_190 && 2.0 * rec.ells[static_cast<std::size_t>(i)] > 1.9) first_190 = i;
        if (!first_099 && rec.ells[static_cast<std::size_t>(i)] >= 0.99) first_099 = i;
    }
    CHECK(first_190 == 418);
    CHECK(first_099 == 10098);
    CHECK(rec.ells[200000] >= 0.99);
}

TEST_CASE("gap ratio grows monotonically toward 2") {
    const auto rec = uniform_recurrence(50);
    // Fixed-rate baseline earns n/2, so the ratio is 2 l_n.
    double prev = 1.0;
    for (int i = 3; i <= 50; ++i) {
        const double ratio = 2.0 * rec.ells[static_cast<std::size_t>(i)];
        if (i >= 4) CHECK(ratio > prev);
        prev = ratio;
    }
    CHECK(2.0 * rec.ells[50] > 2.0 * rec.ells[4]);
}
