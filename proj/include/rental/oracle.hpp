#pragma once

#include <vector>

#include "rental/cost.hpp"
#include "rental/distribution.hpp"
#include "rental/ironing.hpp"
#include "rental/reward.hpp"

namespace rental {

// Desk-size instance for the exhaustive oracle.
struct DiscreteSetting {
    DiscreteGrid grid;
    int horizon = 1;
    std::vector<double> payment_levels; // allowed totals and filters, sorted
    RewardFn g = RewardFn::linear(1.0, 0.0);
    CostFn c;

    void validate() const;
};

struct OracleOffer {
    int alloc = 0;
    double total = 0.0;
    double filter = 0.0;
};

struct OracleResult {
    double best_value = 0.0;
    // The best-response outcome per grid type under the best menu found.
    std::vector<OracleOffer> outcome;
    std::uint64_t nodes = 0;
};

// Exhaustive search over menus, per type, with agents free to deviate:
// truthfulness is emergent, not assumed. Each type is offered an allocation
// in 0..n, a total from payment_levels, and a filter from payment_levels or
// total/alloc (filters between the same neighboring types are
// interchangeable and deduplicated). The candidate menu's value is computed
// by exact best responses with seller-favoring ties.
OracleResult brute_force_menu(const DiscreteSetting& s);

// Independent pointwise maximizer of psi(v) * x - c(x), smallest argmax.
std::vector<int> dp_virtual_welfare(const IronedFn& psi, const CostFn& c, int max_alloc,
                                    const std::vector<double>& grid_v);

} // namespace rental
