#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "rental/cost.hpp"
#include "rental/ironing.hpp"
#include "rental/swac.hpp"

namespace rental {

// One interval of the fixed-rate construction, in ironed-virtual-value
// space. `right` may be +infinity for the top interval. Intervals are closed
// and scanned in increasing allocation order, so a value sitting exactly on
// a boundary resolves to the smaller allocation.
struct VirtualInterval {
    double left = 0.0;
    double right = std::numeric_limits<double>::infinity();
    int alloc = 0;
    double pay = 0.0;     // Myerson total payment (set when prob > 0)
    double prob = 0.0;    // mass of the valuation region best-responding here
    double v_left = 0.0;  // valuation-space region [v_left, v_right)
    double v_right = 0.0;
};

// Per-horizon output of the precomputation: the ironed fixed-rate virtual
// value and its allocation intervals.
struct HorizonPlan {
    int horizon = 0;
    std::shared_ptr<const IronedFn> ironed;
    std::vector<VirtualInterval> intervals;
    double zero_region_right = 0.0; // valuation boundary of the walk-away region
};

struct FixedRatePlans {
    int n = 0;
    RewardTable rewards; // R[0..n]
    std::vector<HorizonPlan> plans; // plans[h-1] is horizon h

    const HorizonPlan& at(int h) const {
        require(h >= 1 && h <= n, ErrorKind::invalid_argument, "fixed-rate: horizon out of range");
        return plans[static_cast<std::size_t>(h - 1)];
    }
};

struct FixedRateOptions {
    std::size_t ironing_grid = 10000;
    // Offset all payments so the lowest traded allocation is free; only
    // changes a constant and is useful when the reward decreases in payment.
    bool normalize_base_payment = false;
};

// Dynamic program over horizons 1..n. per_horizon[h-1] is the prior of the
// agent arriving with h days left.
FixedRatePlans precompute_fixed_rate(int n, const std::vector<DistPtr>& per_horizon,
                                     const RewardFn& g, const FixedRateOptions& opts = {});

// Allocation and equal-split schedule for a bid v; (0, empty) when the
// ironed virtual value falls below every interval.
std::pair<int, PaymentSchedule> run_fixed_rate_auction(const HorizonPlan& plan, double v);

// Valuation-space menu equivalent to the plan.
FiniteMenuSwac as_menu(const HorizonPlan& plan);

} // namespace rental
