#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "rental/distribution.hpp"
#include "rental/swac.hpp"

namespace testutil {

inline rental::DistPtr uniform(double lo, double hi) {
    return std::make_shared<const rental::Distribution>(rental::Distribution::uniform(lo, hi));
}

// Triangular prior on [0,1] with mode c: cdf v^2/c below c, 1-(1-v)^2/(1-c)
// above. Tabulated densely enough that the piecewise-linear approximation
// error stays well below the grid resolution.
inline std::vector<std::array<double, 2>> triangular_cdf_points(double c, int knots = 512) {
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i <= knots; ++i) {
        const double v = static_cast<double>(i) / knots;
        const double F = v <= c ? v * v / c : 1.0 - (1.0 - v) * (1.0 - v) / (1.0 - c);
        pts.push_back({v, F});
    }
    pts.front() = {0.0, 0.0};
    pts.back() = {1.0, 1.0};
    return pts;
}

// The non-monotone two-entry auction over Uniform[0,8]: six days at a flat 2
// per day for low bids, five days with 4 up front for bids of 4 and above.
inline rental::FiniteMenuSwac intro_example_menu() {
    std::vector<rental::MenuEntry> entries;
    entries.push_back({0.0, 4.0, 6, rental::PaymentSchedule{{2, 2, 2, 2, 2, 2}}});
    entries.push_back({4.0, 8.0, 5, rental::PaymentSchedule{{4, 0, 0, 0, 0}}});
    return rental::FiniteMenuSwac(6, std::move(entries));
}

// Random well-formed menus for property fuzzing: increasing interval
// boundaries, arbitrary allocations, and canonical (filter-first) schedules.
inline rental::FiniteMenuSwac random_menu(rental::Rng& rng, int horizon, double lo, double hi) {
    const int k = 1 + static_cast<int>(rng.next_unit() * 4.0);
    std::vector<double> cuts{lo, hi};
    for (int i = 1; i < k; ++i) cuts.push_back(lo + (hi - lo) * rng.next_unit());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [&](double a, double b) { return std::abs(a - b) < 1e-3 * (hi - lo); }),
               cuts.end());
    std::vector<rental::MenuEntry> entries;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        rental::MenuEntry e;
        e.left = cuts[i];
        e.right = cuts[i + 1];
        e.alloc = static_cast<int>(rng.next_unit() * (horizon + 1));
        if (e.alloc == 0) {
            e.schedule = {};
        } else {
            const double total = rng.next_unit() * static_cast<double>(e.alloc) * hi;
            const double rate = total / e.alloc;
            const double filter = rate + rng.next_unit() * (total - rate);
            e.schedule = rental::PaymentSchedule::canonical(e.alloc, total, filter);
        }
        entries.push_back(std::move(e));
    }
    return rental::FiniteMenuSwac(horizon, std::move(entries));
}

} // namespace testutil
