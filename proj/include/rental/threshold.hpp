#pragma once

#include <memory>
#include <vector>

#include "rental/cost.hpp"
#include "rental/ironing.hpp"
#include "rental/swac.hpp"

namespace rental {

// One-or-all threshold mechanism for i.i.d. agents under negative tradeoff:
// at horizon h an agent below tau[h] rents a single day for free, anyone
// else rents all h days and pays tau[h] up front.
struct ThresholdPlan {
    int n = 0;
    DistPtr dist;
    RewardFn reward = RewardFn::linear(1.0, 0.0);
    RewardTable rewards;           // R[0..n]
    std::vector<double> taus;      // taus[h] valid for h = 2..n
    std::vector<std::shared_ptr<const IronedFn>> ironed; // ironed[h] for h = 2..n

    double tau(int h) const {
        require(h >= 2 && h <= n, ErrorKind::invalid_argument, "threshold: tau index out of range");
        return taus[static_cast<std::size_t>(h)];
    }
};

ThresholdPlan precompute_threshold(int n, DistPtr dist, const RewardFn& g,
                                   std::size_t ironing_grid = 10000);

// Allocation and schedule at horizon h for bid v.
std::pair<int, PaymentSchedule> run_threshold_auction(const ThresholdPlan& plan, int h, double v);

// Valuation-space menu for horizon h.
FiniteMenuSwac threshold_menu(const ThresholdPlan& plan, int h);

struct ThresholdStructureReport {
    bool truthful_ok = false;
    bool min_alloc_ok = false;
    bool avg_reward_ok = false;
    int truthful_violations = 0;
    int min_alloc = 0;
    bool ok() const { return truthful_ok && min_alloc_ok && avg_reward_ok; }
};

// Structural checks: menus are truthful, every agent is allocated at least
// one unit, and the average daily reward R[i]/i is non-decreasing.
ThresholdStructureReport audit_threshold_structure(const ThresholdPlan& plan, int grid = 1000);

// Closed-form iteration of the thresholds and average daily rewards for
// Uniform[0,1] consumer surplus, seeded l_1 = l_2 = l_3 = 1/2 and
// tau_2 = tau_3 = 1; valid from i = 4 where the ironed virtual value is
// strictly increasing. Cross-validates the grid path and drives gap tables.
struct UniformRecurrence {
    std::vector<double> taus; // taus[i], i = 2..n
    std::vector<double> ells; // ells[i] = R[i]/i, i = 1..n
};

UniformRecurrence uniform_recurrence(int n);

} // namespace rental
