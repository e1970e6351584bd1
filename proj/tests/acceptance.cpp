// Acceptance suite: end-to-end checks of the shipped functionality, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rental/fixed_rate.hpp"
#include "rental/oracle.hpp"
#include "rental/sim.hpp"
#include "rental/threshold.hpp"

using namespace rental;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        g_notes.push_back(what);
        ++g_failures;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void run_criterion(int index, const std::string& name, double time_limit_s,
                   const std::function<void()>& body) {
    const int before = g_failures;
    g_notes.clear();
    Timer timer;
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }
    const double dt = timer.seconds();
    expect(dt < time_limit_s, "runtime " + std::to_string(dt) + "s exceeds " +
                                  std::to_string(time_limit_s) + "s");
    const bool ok = g_failures == before;
    std::printf("criterion %d: %s — %s (%.2fs)\n", index, ok ? "PASS" : "FAIL", name.c_str(),
                dt);
    for (const auto& note : g_notes) std::printf("    %s\n", note.c_str());
}

std::vector<DistPtr> iid(const DistPtr& d, int n) {
    return std::vector<DistPtr>(static_cast<std::size_t>(n), d);
}

RentalMechanism mech_from_fr(const FixedRatePlans& plans) {
    RentalMechanism mech;
    mech.n = plans.n;
    for (int h = plans.n; h >= 1; --h) mech.swacs.push_back(as_menu(plans.at(h)));
    mech.rewards = plans.rewards;
    return mech;
}

RentalMechanism mech_from_threshold(const ThresholdPlan& plan) {
    RentalMechanism mech;
    mech.n = plan.n;
    for (int h = plan.n; h >= 1; --h) mech.swacs.push_back(threshold_menu(plan, h));
    mech.rewards = plan.rewards;
    return mech;
}

// --- criteria ------------------------------------------------------------

void criterion_intro_example() {
    const auto menu = testutil::intro_example_menu();
    const auto revenue = RewardFn::linear(0.0, 1.0);
    const auto zero = CostFn::zero(6);

    const auto truthful = audit_truthful(menu, 1000);
    expect(truthful.ok(), "expected a truthful menu, got " +
                              std::to_string(truthful.violations.size()) + " violations");

    const auto mono = audit_monotone(menu, revenue, zero, 1000);
    expect(!mono.allocation_monotone(), "allocation monotonicity should fail");
    expect(!mono.reward_monotone(), "reward monotonicity should fail");

    // Witness pair (3, 4): allocations 6 > 5 and revenues 12 > 4, exactly.
    const auto br3 = best_response(menu, 3.0, &revenue, &zero);
    const auto br4 = best_response(menu, 4.0, &revenue, &zero);
    expect(br3.alloc == 6 && br4.alloc == 5, "witness allocations must be (6, 5)");
    expect(designer_reward(menu, revenue, zero, 3.0) == 12.0, "revenue at 3 must be exactly 12");
    expect(designer_reward(menu, revenue, zero, 4.0) == 4.0, "revenue at 4 must be exactly 4");
}

void criterion_threshold_values() {
    const auto d = testutil::uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plan = precompute_threshold(4, d, cs, 10000);
    auto close = [&](double got, double want, const std::string& what) {
        expect(std::abs(got - want) <= 1e-6,
               what + ": grid value " + std::to_string(got) + " vs " + std::to_string(want));
    };
    close(plan.rewards[1], 0.5, "R[1]");
    close(plan.rewards[2], 1.0, "R[2]");
    close(plan.rewards[3], 1.5, "R[3]");
    close(plan.tau(2), 1.0, "tau_2");
    close(plan.tau(3), 1.0, "tau_3");
    close(plan.tau(4), 0.5, "tau_4");
    close(plan.rewards[4], 2.125, "R[4]");

    // Analytic uniform path, exact to 1e-12.
    const auto rec = uniform_recurrence(4);
    expect(std::abs(rec.ells[1] - 0.5) <= 1e-12, "analytic l_1");
    expect(std::abs(rec.ells[2] - 0.5) <= 1e-12, "analytic l_2");
    expect(std::abs(rec.ells[3] - 0.5) <= 1e-12, "analytic l_3");
    expect(std::abs(rec.taus[2] - 1.0) <= 1e-12, "analytic tau_2");
    expect(std::abs(rec.taus[3] - 1.0) <= 1e-12, "analytic tau_3");
    expect(std::abs(rec.taus[4] - 0.5) <= 1e-12, "analytic tau_4");
    expect(std::abs(4.0 * rec.ells[4] - 2.125) <= 1e-12, "analytic R[4]");
}

void criterion_fixed_rate_baseline() {
    const int n = 50;
    const auto d = testutil::uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    const auto plans = precompute_fixed_rate(n, iid(d, n), cs);
    for (int h = 1; h <= n; ++h) {
        expect(std::abs(plans.rewards[h] - 0.5 * h) <= 1e-9,
               "R_fixed[" + std::to_string(h) + "] = " + std::to_string(plans.rewards[h]));
        for (double v : {0.05, 0.31, 0.62, 0.97}) {
            const auto [alloc, sched] = run_fixed_rate_auction(plans.at(h), v);
            expect(alloc == 1, "allocation must be exactly 1 unit");
            expect(sched.total() == 0.0, "the unit must be free");
        }
        const auto menu = as_menu(plans.at(h));
        expect(menu.entries().size() == 1 && menu.entries()[0].alloc == 1 &&
                   menu.entries()[0].total() == 0.0,
               "menu must be a single free one-unit entry");
    }
}

void criterion_gap_convergence() {
    const int n = 100000;
    const auto rec = uniform_recurrence(n);
    bool monotone = true, bounded = true, strict = true;
    for (int i = 2; i <= n; ++i) {
        const double cur = rec.ells[static_cast<std::size_t>(i)];
        const double prev = rec.ells[static_cast<std::size_t>(i - 1)];
        if (cur < prev - 1e-15) monotone = false;
        if (cur > 1.0) bounded = false;
        if (i >= 4 && !(cur > prev)) strict = false; // ratio = 2 l_i strictly grows from i = 4
    }
    expect(monotone, "l_i must be non-decreasing");
    expect(bounded, "l_i must stay at most 1");
    expect(strict, "the ratio column must be strictly increasing from n = 4");
    // First run recorded n = 418 as the first horizon with ratio > 1.9.
    const double ratio_at_recorded = 2.0 * rec.ells[418];
    expect(ratio_at_recorded > 1.9,
           "ratio at n = 418 is " + std::to_string(ratio_at_recorded));
    expect(!(2.0 * rec.ells[417] > 1.9), "n = 418 must be the first crossing");
}

void criterion_monte_carlo() {
    const auto d = testutil::uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);

    const auto tplan = precompute_threshold(4, d, cs);
    const auto tmech = mech_from_threshold(tplan);
    const auto tres = simulate(tmech, iid(d, 4), cs, 20240811, 1000000);
    expect(std::abs(tres.mean - tplan.rewards[4]) < 3.0 * tres.stderr_,
           "threshold n=4: mean " + std::to_string(tres.mean) + " vs " +
               std::to_string(tplan.rewards[4]) + " (3se = " +
               std::to_string(3.0 * tres.stderr_) + ")");

    const auto fplans = precompute_fixed_rate(10, iid(d, 10), cs);
    const auto fmech = mech_from_fr(fplans);
    const auto fres = simulate(fmech, iid(d, 10), cs, 4242, 1000000);
    expect(std::abs(fres.mean - fplans.rewards[10]) < 3.0 * fres.stderr_,
           "fixed-rate n=10: mean " + std::to_string(fres.mean) + " vs " +
               std::to_string(fplans.rewards[10]));
}

void criterion_oracle() {
    const auto d = testutil::uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    for (int n : {2, 3}) {
        const auto plan = precompute_threshold(n, d, cs);
        const auto menu = threshold_menu(plan, n);
        const auto cost = over_time_cost_fn(plan.rewards, n);

        const std::size_t k = 8;
        DiscreteSetting s;
        s.grid = d->discretize(k);
        s.horizon = n;
        s.payment_levels = s.grid.points;
        s.payment_levels.insert(s.payment_levels.begin(), 0.0);
        s.g = cs;
        s.c = cost;
        const auto res = brute_force_menu(s);

        double alg = 0.0;
        for (std::size_t t = 0; t < k; ++t)
            alg += s.grid.masses[t] * designer_reward(menu, cs, cost, s.grid.points[t]);

        const double bound = 2.0 * (1.0 / static_cast<double>(k)) * n;
        expect(res.best_value >= alg - bound,
               "n=" + std::to_string(n) + ": oracle " + std::to_string(res.best_value) +
                   " fell more than " + std::to_string(bound) + " below " + std::to_string(alg));
        expect(std::abs(res.best_value - alg) <= bound,
               "n=" + std::to_string(n) + ": |oracle - alg| exceeds the bound");
    }
}

void criterion_property_suites() {
    Rng rng(20250811);
    const std::size_t iron_grid = 2000;

    // Random bounded uniform settings with fixed-rate-capable rewards.
    int fr_cases = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const double lo = rng.next_unit();
        const double hi = lo + 0.5 + 1.5 * rng.next_unit();
        const auto d = std::make_shared<const Distribution>(Distribution::uniform(lo, hi));
        RewardFn g = RewardFn::linear(0.0, 1.0);
        switch (iter % 4) {
            case 0: g = RewardFn::linear(0.0, 0.5 + rng.next_unit()); break;
            case 1: g = RewardFn::linear(0.5 + rng.next_unit(), 0.5 + rng.next_unit()); break;
            case 2: {
                const double beta = 0.25 + 0.5 * rng.next_unit();
                g = RewardFn::negative_tradeoff(beta + rng.next_unit(), beta);
                break;
            }
            default: {
                std::vector<std::pair<double, double>> pts;
                double f = lo > 0.0 ? rng.next_unit() : 0.0;
                for (int i = 0; i <= 8; ++i) {
                    pts.emplace_back(lo + (hi - lo) * i / 8.0, f);
                    f += rng.next_unit();
                }
                g = RewardFn::welfare(std::move(pts));
                break;
            }
        }
        const int n = 1 + static_cast<int>(rng.next_unit() * 4.0);
        FixedRateOptions opts;
        opts.ironing_grid = iron_grid;
        const auto plans = precompute_fixed_rate(n, iid(d, n), g, opts);
        for (int h = 1; h <= n; ++h) {
            const auto menu = as_menu(plans.at(h));
            const auto cost = over_time_cost_fn(plans.rewards, h);
            if (!audit_truthful(menu, 160).ok()) {
                expect(false, "fixed-rate menu not truthful (case " + std::to_string(iter) + ")");
                break;
            }
            if (!audit_props(menu, g, cost, 160).ok()) {
                expect(false, "prop audit failed (case " + std::to_string(iter) + ")");
                break;
            }
            // Myerson conformance: totals follow the unique payment rule.
            double prev_pay = 0.0;
            int prev_alloc = 0;
            bool myerson = true;
            for (const auto& e : menu.entries()) {
                if (e.alloc == 0) continue;
                if (std::abs(e.total() - (prev_pay + (e.alloc - prev_alloc) * e.left)) > 1e-9)
                    myerson = false;
                prev_pay = e.total();
                prev_alloc = e.alloc;
            }
            if (!myerson) {
                expect(false, "Myerson conformance failed (case " + std::to_string(iter) + ")");
                break;
            }
        }
        ++fr_cases;
    }
    expect(fr_cases >= 100, "fixed-rate property cases");

    // Ironing: monotone output and Lemma-C.2-style expectation preservation
    // on random piecewise-linear thetas.
    int iron_cases = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const auto d = testutil::uniform(0.0, 1.0);
        std::vector<double> knots{0.0, 0.25, 0.5, 0.75, 1.0};
        std::vector<double> vals;
        for (std::size_t i = 0; i < knots.size(); ++i) vals.push_back(2.0 * rng.next_unit() - 1.0);
        auto theta = [&](double v) {
            const std::size_t j = std::min<std::size_t>(
                static_cast<std::size_t>(v * 4.0), knots.size() - 2);
            const double t = (v - knots[j]) / (knots[j + 1] - knots[j]);
            return vals[j] + t * (vals[j + 1] - vals[j]);
        };
        const std::size_t m = 20000;
        const auto f = iron(theta, d, m);
        const auto& psi = f.values();
        bool monotone = true;
        for (std::size_t j = 1; j < psi.size(); ++j)
            if (psi[j] < psi[j - 1] - 1e-12) monotone = false;
        if (!monotone) expect(false, "ironed output not monotone (case " + std::to_string(iter) + ")");

        // Allocation constant wherever the hull sits strictly below H:
        // jumps are placed only where psi matches theta.
        std::vector<double> jump_qs;
        for (std::size_t j = 1; j < m; ++j) {
            const double q = static_cast<double>(j) / m;
            if (std::abs(f.eval_q(q) - theta(d->quantile(q))) < 1e-9 && jump_qs.size() < 3 &&
                (jump_qs.empty() || q > jump_qs.back() + 0.2))
                jump_qs.push_back(q);
        }
        auto alloc = [&](double q) {
            double x = 1.0;
            for (double jq : jump_qs)
                if (q >= jq) x += 1.0;
            return x;
        };
        double e_theta = 0.0, e_psi = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double q = (static_cast<double>(j) + 0.5) / m;
            e_theta += theta(d->quantile(q)) * alloc(q) / m;
            e_psi += f.eval_q(q) * alloc(q) / m;
        }
        if (std::abs(e_theta - e_psi) > 1e-5)
            expect(false, "expectation not preserved (case " + std::to_string(iter) + ", diff " +
                              std::to_string(e_theta - e_psi) + ")");
        ++iron_cases;
    }
    expect(iron_cases >= 100, "ironing property cases");

    // Feasible-set monotonicity on random menus.
    int menu_cases = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const auto menu = testutil::random_menu(rng, 5, 0.0, 2.0);
        std::size_t prev = 0;
        bool ok = true;
        for (int kk = 0; kk <= 150; ++kk) {
            const auto br = best_response(menu, 2.0 * kk / 150.0);
            if (br.feasible.size() < prev) ok = false;
            prev = br.feasible.size();
        }
        if (!ok) expect(false, "feasible set shrank (case " + std::to_string(iter) + ")");
        ++menu_cases;
    }
    expect(menu_cases >= 100, "feasible-set property cases");

    // Threshold plans over random negative-tradeoff settings: one-or-all,
    // minimum allocation 1, monotone average daily reward, prop audits.
    int th_cases = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const double lo = 0.5 * rng.next_unit();
        const double hi = lo + 0.5 + rng.next_unit();
        const auto d = std::make_shared<const Distribution>(Distribution::uniform(lo, hi));
        const double beta = 0.25 + 0.75 * rng.next_unit();
        const auto g = RewardFn::negative_tradeoff(beta + rng.next_unit(), beta);
        const int n = 2 + static_cast<int>(rng.next_unit() * 5.0);
        const auto plan = precompute_threshold(n, d, g, iron_grid);
        const auto rep = audit_threshold_structure(plan, 160);
        if (!rep.truthful_ok)
            expect(false, "threshold menus not truthful (case " + std::to_string(iter) + ")");
        if (!rep.min_alloc_ok)
            expect(false, "minimum allocation below 1 (case " + std::to_string(iter) + ")");
        if (!rep.avg_reward_ok)
            expect(false, "average daily reward decreased (case " + std::to_string(iter) + ")");
        for (int h = 2; h <= n; ++h) {
            for (int kk = 0; kk <= 60; ++kk) {
                const double v = lo + (hi - lo) * kk / 60.0;
                const auto [alloc, sched] = run_threshold_auction(plan, h, v);
                if (!(alloc == 1 || alloc == h))
                    expect(false, "allocation outside {1, h} (case " + std::to_string(iter) + ")");
            }
            const auto cost = over_time_cost_fn(plan.rewards, h);
            if (!audit_props(threshold_menu(plan, h), g, cost, 160).ok())
                expect(false, "threshold prop audit failed (case " + std::to_string(iter) + ")");
        }
        ++th_cases;
    }
    expect(th_cases >= 100, "threshold property cases");
}

} // namespace

int main() {
    run_criterion(1, "two-entry auction: truthful yet non-monotone with witness (3, 4)", 1.0,
                  criterion_intro_example);
    run_criterion(2, "threshold thresholds and rewards on Uniform[0,1] consumer surplus", 5.0,
                  criterion_threshold_values);
    run_criterion(3, "fixed-rate baseline sells one free unit, R = n/2 (n = 50)", 5.0,
                  criterion_fixed_rate_baseline);
    run_criterion(4, "closed-form gap iteration: monotone ratio crossing 1.9 at n = 418", 1.0,
                  criterion_gap_convergence);
    run_criterion(5, "Monte-Carlo estimates match analytic rewards within 3 sigma", 60.0,
                  criterion_monte_carlo);
    run_criterion(6, "brute-force oracle within the discretization bound (k = 8)", 120.0,
                  criterion_oracle);
    run_criterion(7, "randomized property suites (audits, ironing, menus, thresholds)", 120.0,
                  criterion_property_suites);

    if (g_failures > 0) {
        std::printf("acceptance: FAILED\n");
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
