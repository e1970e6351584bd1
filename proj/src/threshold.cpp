#include "rental/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rental {

ThresholdPlan precompute_threshold(int n, DistPtr dist, const RewardFn& g,
                                   std::size_t ironing_grid) {
    require(n >= 1, ErrorKind::invalid_argument, "threshold: horizon must be at least 1");
    require(dist != nullptr, ErrorKind::invalid_argument, "threshold: null distribution");
    require(g.cls() == RewardClass::negative_tradeoff, ErrorKind::reward_class,
            "threshold mechanism requires a negative tradeoff reward");

    ThresholdPlan plan;
    plan.n = n;
    plan.dist = dist;
    plan.reward = g;
    plan.rewards.r.assign(static_cast<std::size_t>(n) + 1, 0.0);
    plan.taus.assign(static_cast<std::size_t>(n) + 1,
                     std::numeric_limits<double>::quiet_NaN());
    plan.ironed.assign(static_cast<std::size_t>(n) + 1, nullptr);

    const double alpha = g.alpha();
    const double beta_pos = -g.beta(); // paper convention g = alpha v - beta p
    auto& R = plan.rewards.r;
    R[1] = alpha * dist->mean();

    for (int i = 2; i <= n; ++i) {
        auto theta = [&g, dist, i](double v) { return horizon_virtual_value(g, *dist, i, v); };
        auto ir = std::make_shared<const IronedFn>(iron(theta, dist, ironing_grid));
        plan.ironed[static_cast<std::size_t>(i)] = ir;

        const double target = R[i - 1] / static_cast<double>(i - 1);
        const double tol = 1e-9 * (1.0 + std::abs(target));
        const double tau = ir->sup_inverse_eq(target, tol);
        plan.taus[static_cast<std::size_t>(i)] = tau;

        const double p_lo = dist->interval_prob(dist->lo(), tau);
        const double p_hi = 1.0 - p_lo;
        double acc = 0.0;
        if (p_lo > 0.0)
            acc += (alpha * dist->cond_mean(dist->lo(), tau) + R[i - 1]) * p_lo;
        if (p_hi > 0.0)
            acc += (alpha * static_cast<double>(i) * dist->cond_mean(tau, dist->hi()) -
                    beta_pos * tau) * p_hi;
        R[i] = acc;
    }
    plan.rewards.validate();
    return plan;
}

std::pair<int, PaymentSchedule> run_threshold_auction(const ThresholdPlan& plan, int h, double v) {
    require(h >= 1 && h <= plan.n, ErrorKind::invalid_argument,
            "threshold: horizon out of range");
    if (h == 1 || v < plan.tau(h))
        return {1, PaymentSchedule{{0.0}}};
    PaymentSchedule s;
    s.per_day.assign(static_cast<std::size_t>(h), 0.0);
    s.per_day[0] = plan.tau(h);
    return {h, s};
}

FiniteMenuSwac threshold_menu(const ThresholdPlan& plan, int h) {
    require(h >= 1 && h <= plan.n, ErrorKind::invalid_argument,
            "threshold: horizon out of range");
    const double lo = plan.dist->lo(), hi = plan.dist->hi();
    std::vector<MenuEntry> entries;
    const double tau = h >= 2 ? plan.tau(h) : hi;
    if (h == 1 || tau >= hi) {
        entries.push_back({lo, hi, 1, PaymentSchedule{{0.0}}});
    } else if (tau <= lo) {
        entries.push_back({lo, hi, h, PaymentSchedule::canonical(h, tau, tau)});
    } else {
        entries.push_back({lo, tau, 1, PaymentSchedule{{0.0}}});
        PaymentSchedule s;
        s.per_day.assign(static_cast<std::size_t>(h), 0.0);
        s.per_day[0] = tau;
        entries.push_back({tau, hi, h, s});
    }
    return FiniteMenuSwac(h, std::move(entries));
}

ThresholdStructureReport audit_threshold_structure(const ThresholdPlan& plan, int grid) {
    ThresholdStructureReport rep;
    rep.min_alloc = plan.n;
    rep.truthful_ok = true;
    rep.min_alloc_ok = true;
    for (int h = 1; h <= plan.n; ++h) {
        const FiniteMenuSwac menu = threshold_menu(plan, h);
        const TruthfulReport tr = audit_truthful(menu, grid);
        rep.truthful_violations += static_cast<int>(tr.violations.size());
        if (!tr.ok()) rep.truthful_ok = false;
        const double lo = plan.dist->lo(), hi = plan.dist->hi();
        for (int k = 0; k < grid; ++k) {
            const double v = lo + (hi - lo) * static_cast<double>(k) / (grid - 1);
            const BestResponse br = best_response(menu, v);
            rep.min_alloc = std::min(rep.min_alloc, br.alloc);
        }
    }
    if (rep.min_alloc < 1) rep.min_alloc_ok = false;
    rep.avg_reward_ok = true;
    for (int i = 2; i <= plan.n; ++i) {
        const double prev = plan.rewards[i - 1] / static_cast<double>(i - 1);
        const double cur = plan.rewards[i] / static_cast<double>(i);
        if (cur < prev - 1e-9) rep.avg_reward_ok = false;
    }
    return rep;
}

UniformRecurrence uniform_recurrence(int n) {
    require(n >= 4, ErrorKind::invalid_argument,
            "uniform recurrence: closed form needs n >= 4");
    UniformRecurrence out;
    out.taus.assign(static_cast<std::size_t>(n) + 1, std::numeric_limits<double>::quiet_NaN());
    out.ells.assign(static_cast<std::size_t>(n) + 1, std::numeric_limits<double>::quiet_NaN());
    out.ells[1] = out.ells[2] = out.ells[3] = 0.5;
    out.taus[2] = out.taus[3] = 1.0;
    double R_prev = 1.5; // R[3]
    for (int i = 4; i <= n; ++i) {
        const double tau = (R_prev - 1.0) / static_cast<double>(i - 3);
        const double l_prev = R_prev / static_cast<double>(i - 1);
        const double ell = (tau / (2.0 * i) + (static_cast<double>(i - 1) / i) * l_prev) * tau +
                           (0.5 * (tau + 1.0) - tau / static_cast<double>(i)) * (1.0 - tau);
        out.taus[static_cast<std::size_t>(i)] = tau;
        out.ells[static_cast<std::size_t>(i)] = ell;
        R_prev = ell * static_cast<double>(i);
    }
    return out;
}

} // namespace rental
