#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rental/cost.hpp"
#include "rental/distribution.hpp"
#include "rental/reward.hpp"

namespace rental {

// Per-day payments for one bid. The filter is the highest cumulative average
// payment over any prefix: the lowest valuation that can accept the schedule
// without going into temporary deficit.
struct PaymentSchedule {
    std::vector<double> per_day;

    double total() const;
    double filter() const;

    // Two-parameter form: the first day carries the filter, the remainder is
    // spread evenly. Requires total/alloc <= filter <= total (filter == total
    // when alloc == 1).
    static PaymentSchedule canonical(int alloc, double total, double filter);
    static PaymentSchedule fixed_rate(int alloc, double total);

    void validate() const;
};

struct MenuEntry {
    double left = 0.0;  // inclusive
    double right = 0.0; // exclusive; the last entry is closed at the support top
    int alloc = 0;
    PaymentSchedule schedule;

    double total() const { return schedule.total(); }
    double filter() const { return schedule.filter(); }
};

// A truthful finite-menu stagewise auction: adjacent valuation intervals
// covering the support, each mapped to an allocation and payment schedule.
class FiniteMenuSwac {
public:
    FiniteMenuSwac(int horizon, std::vector<MenuEntry> entries);

    int horizon() const { return horizon_; }
    const std::vector<MenuEntry>& entries() const { return entries_; }
    double support_lo() const { return entries_.front().left; }
    double support_hi() const { return entries_.back().right; }

    int entry_containing(double v) const;

    std::string to_json_string() const;
    static FiniteMenuSwac from_json_string(const std::string& text);

private:
    int horizon_;
    std::vector<MenuEntry> entries_;
};

// Best response of a stagewise-IR agent: among entries whose filter the agent
// can afford, maximize alloc * v - total; walking away (no allocation, no
// payment) is always available. Ties prefer the seller's reward when the
// reward/cost context is given, then the lower entry index.
struct BestResponse {
    int chosen_entry = -1; // -1 means the agent walks away
    int alloc = 0;
    double total = 0.0;
    double utility = 0.0;
    std::vector<int> feasible;
};

BestResponse best_response(const FiniteMenuSwac& m, double v, const RewardFn* g = nullptr,
                           const CostFn* c = nullptr);

// Net reward sum_i g(v, p_i) - c(alloc) at the agent's best response.
double designer_reward(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c, double v);

// Exact piecewise integration of the designer's expected net reward: the
// support is split at entry filters, walk-away indifference points and
// pairwise entry indifference points, between which the best response is
// constant.
double expected_reward(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c,
                       const Distribution& d);

struct TruthfulViolation {
    double v;
    int chosen;    // -1 = walk away
    int containing;
};

struct TruthfulReport {
    int grid = 0;
    std::vector<TruthfulViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_json_string() const;
};

// For each grid valuation, the best response must match the outcome of
// bidding truthfully: the entry containing v when its filter is affordable,
// walking away otherwise. Entries with identical (alloc, total) count as the
// same outcome.
TruthfulReport audit_truthful(const FiniteMenuSwac& m, int grid);

struct PairViolation {
    double w, v;
    double lhs, rhs; // the two compared quantities
};

struct MonotoneReport {
    int grid = 0;
    std::vector<PairViolation> allocation; // alloc(w) > alloc(v) with w < v
    std::vector<PairViolation> reward;     // reward(w) > reward(v) + tol
    bool allocation_monotone() const { return allocation.empty(); }
    bool reward_monotone() const { return reward.empty(); }
    std::string to_json_string() const;
};

MonotoneReport audit_monotone(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c,
                              int grid);

struct PropsReport {
    int grid = 0;
    // 4.1: equal allocations with w < v must have total(w) >= total(v).
    std::vector<PairViolation> decreasing_payments;
    // 4.2: for entries b, b' with x(b) > x(b'), the benefit of switching from
    // b to b' is strictly larger for the lower valuation.
    std::vector<PairViolation> benefit_swap;
    // 4.3: every allocation-monotonicity violation is explained by a filter:
    // alloc(w) > alloc(v) for w < v requires filter(entry(v)) > w, total(v)
    // >= filter(entry(v)), and w strictly gaining from v's entry.
    std::vector<PairViolation> filter_explains;
    bool ok() const {
        return decreasing_payments.empty() && benefit_swap.empty() && filter_explains.empty();
    }
    std::string to_json_string() const;
};

PropsReport audit_props(const FiniteMenuSwac& m, const RewardFn& g, const CostFn& c, int grid);

} // namespace rental
