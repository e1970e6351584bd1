#include "rental/fixed_rate.hpp"

#include <algorithm>
#include <cmath>

namespace rental {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Boundary comparisons snap within this relative tolerance so that an ironed
// value sitting (up to float noise) exactly on an interval boundary lands in
// the lower-allocation interval.
double snap_tol(const IronedFn& f) {
    return 1e-9 * (1.0 + std::max(std::abs(f.min_value()), std::abs(f.max_value())));
}

// Quantile boundary of {psi <= y} with snapping; 0 when empty, 1 when full.
double region_right_q(const IronedFn& f, double y) {
    if (y == kInf) return 1.0;
    const double tol = snap_tol(f);
    if (f.min_value() > y + tol) return 0.0;
    if (f.max_value() <= y + tol) return 1.0;
    const double v = f.sup_inverse(y + tol);
    return f.dist().cdf(v);
}

} // namespace

FixedRatePlans precompute_fixed_rate(int n, const std::vector<DistPtr>& per_horizon,
                                     const RewardFn& g, const FixedRateOptions& opts) {
    require(n >= 1, ErrorKind::invalid_argument, "fixed-rate: horizon must be at least 1");
    require(static_cast<int>(per_horizon.size()) == n, ErrorKind::invalid_argument,
            "fixed-rate: need one distribution per horizon");

    FixedRatePlans out;
    out.n = n;
    out.rewards.r.assign(static_cast<std::size_t>(n) + 1, 0.0);
    auto& R = out.rewards.r;
    out.plans.reserve(static_cast<std::size_t>(n));

    std::shared_ptr<const IronedFn> cached;
    const Distribution* cached_for = nullptr;

    for (int h = 1; h <= n; ++h) {
        const DistPtr& d = per_horizon[static_cast<std::size_t>(h - 1)];
        require(d != nullptr, ErrorKind::invalid_argument, "fixed-rate: null distribution");

        HorizonPlan plan;
        plan.horizon = h;
        if (cached_for == d.get()) {
            plan.ironed = cached;
        } else {
            auto theta = [&g, d](double v) { return fr_virtual_value(g, *d, v); };
            plan.ironed = std::make_shared<const IronedFn>(iron(theta, d, opts.ironing_grid));
            cached = plan.ironed;
            cached_for = d.get();
        }
        const IronedFn& ir = *plan.ironed;

        // Interval recursion: the alloc-1 interval runs up to the smallest
        // marginal threshold (R[h-1]-R[h-y])/(y-1); the alloc-(i+1) interval
        // extends horizon h-1's alloc-i interval, cut below by the threshold
        // against allocating a single unit and by the previous right edge.
        double last_right = kInf;
        for (int y = 2; y <= h; ++y)
            last_right = std::min(last_right, (R[h - 1] - R[h - y]) / static_cast<double>(y - 1));
        plan.intervals.push_back({0.0, last_right, 1, 0.0, 0.0, 0.0, 0.0});
        if (h >= 2) {
            const auto& prev = out.plans[static_cast<std::size_t>(h - 2)].intervals;
            for (int i = 1; i <= h - 1; ++i) {
                const auto it = std::find_if(prev.begin(), prev.end(),
                                             [i](const VirtualInterval& J) { return J.alloc == i; });
                if (it == prev.end()) continue;
                const double lft = std::max({it->left,
                                             (R[h - 1] - R[h - (i + 1)]) / static_cast<double>(i),
                                             last_right});
                if (lft < it->right) {
                    plan.intervals.push_back({lft, it->right, i + 1, 0.0, 0.0, 0.0, 0.0});
                    last_right = it->right;
                }
            }
        }

        // Payments (Myerson: each added unit is charged at the valuation
        // where the allocation jumps to it) and the reward recursion.
        const double tol = snap_tol(ir);
        const double q0 = ir.min_value() < -tol ? ir.dist().cdf(ir.sup_inverse_strict(-tol)) : 0.0;
        plan.zero_region_right = ir.dist().quantile(q0);
        double Rh = q0 * R[h - 1]; // turned away: the asset is free tomorrow
        double prev_q = q0;
        int prev_alloc = 0;
        bool base_set = false;
        double pay = 0.0;
        for (auto& J : plan.intervals) {
            double qr = std::max(region_right_q(ir, J.right), prev_q);
            J.prob = qr - prev_q;
            J.v_left = ir.dist().quantile(prev_q);
            J.v_right = ir.dist().quantile(qr);
            if (J.prob > 1e-15) {
                if (opts.normalize_base_payment && !base_set) {
                    prev_alloc = J.alloc;
                    base_set = true;
                }
                pay += J.v_left * static_cast<double>(J.alloc - prev_alloc);
                J.pay = pay;
                Rh += ir.integral_q(prev_q, qr) * static_cast<double>(J.alloc) +
                      J.prob * R[h - J.alloc];
                prev_alloc = J.alloc;
            }
            prev_q = qr;
        }
        R[h] = Rh;
        out.plans.push_back(std::move(plan));
    }
    out.rewards.validate();
    return out;
}

std::pair<int, PaymentSchedule> run_fixed_rate_auction(const HorizonPlan& plan, double v) {
    const IronedFn& ir = *plan.ironed;
    const double q = ir.eval(v);
    const double tol = snap_tol(ir);
    if (q < -tol) return {0, PaymentSchedule{}};
    for (const auto& J : plan.intervals) {
        if (J.prob <= 1e-15) continue;
        if (q <= J.right + tol)
            return {J.alloc, PaymentSchedule::fixed_rate(J.alloc, J.pay)};
    }
    return {0, PaymentSchedule{}};
}

FiniteMenuSwac as_menu(const HorizonPlan& plan) {
    const Distribution& d = plan.ironed->dist();
    std::vector<MenuEntry> entries;
    double cursor = d.lo();
    if (plan.zero_region_right > d.lo()) {
        entries.push_back({d.lo(), plan.zero_region_right, 0, PaymentSchedule{}});
        cursor = plan.zero_region_right;
    }
    for (const auto& J : plan.intervals) {
        if (J.prob <= 1e-15) continue;
        entries.push_back({cursor, J.v_right, J.alloc,
                           PaymentSchedule::fixed_rate(J.alloc, J.pay)});
        cursor = J.v_right;
    }
    require(!entries.empty(), ErrorKind::internal, "fixed-rate menu: no regions");
    entries.back().right = d.hi();
    return FiniteMenuSwac(plan.horizon, std::move(entries));
}

} // namespace rental
