#include "rental/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rental {

namespace {

constexpr double kEps = 1e-12;

struct Option {
    int alloc;
    double total;
    double filter;
};

double offer_reward(const Option& o, const RewardFn& g, const CostFn& c, double v) {
    if (o.alloc == 0) return 0.0;
    return static_cast<double>(o.alloc) * g.eval(v, o.total / o.alloc) - c(o.alloc);
}

double offer_utility(const Option& o, double v) {
    return static_cast<double>(o.alloc) * v - o.total;
}

// Exact value of the menu made of the given offers: every type best-responds
// over the whole set, ties favoring the seller.
double evaluate_set(const std::vector<Option>& offers, const DiscreteSetting& s,
                    std::vector<Option>* outcome) {
    double value = 0.0;
    for (std::size_t t = 0; t < s.grid.points.size(); ++t) {
        const double v = s.grid.points[t];
        Option best{0, 0.0, 0.0};
        double bu = 0.0, brew = 0.0;
        for (const auto& o : offers) {
            if (o.filter > v + kEps) continue;
            const double u = offer_utility(o, v);
            if (u < -kEps) continue;
            const double rew = offer_reward(o, s.g, s.c, v);
            if (u > bu + kEps || (u >= bu - kEps && rew > brew + kEps)) {
                best = o;
                bu = std::max(bu, u);
                brew = rew;
            }
        }
        value += s.grid.masses[t] * brew;
        if (outcome) (*outcome)[t] = best;
    }
    return value;
}

} // namespace

void DiscreteSetting::validate() const {
    grid.validate();
    c.validate();
    require(horizon >= 1, ErrorKind::invalid_argument, "oracle: horizon must be positive");
    require(c.max_units() >= horizon, ErrorKind::invalid_argument,
            "oracle: cost table shorter than the horizon");
    for (std::size_t i = 0; i < payment_levels.size(); ++i) {
        require(payment_levels[i] >= 0.0, ErrorKind::invalid_argument,
                "oracle: payment levels must be nonnegative");
        if (i > 0)
            require(payment_levels[i] > payment_levels[i - 1], ErrorKind::invalid_argument,
                    "oracle: payment levels must be strictly increasing");
    }
    const std::size_t k = grid.points.size(), l = payment_levels.size(), n =
        static_cast<std::size_t>(horizon);
    if (k > 12 || l > 12 || n > 4) {
        const double per_type = 1.0 + static_cast<double>(n * l) * static_cast<double>(l + 1);
        const double est = std::pow(per_type, static_cast<double>(k));
        raise(ErrorKind::size_bound,
              "oracle: setting too large (|grid| <= 12, |levels| <= 12, horizon <= 4); "
              "roughly " + std::to_string(est) + " candidate menus");
    }
}

OracleResult brute_force_menu(const DiscreteSetting& s) {
    s.validate();
    const auto& pts = s.grid.points;
    const std::size_t k = pts.size();

    // Option pool per type. Filters are deduplicated per (alloc, total) by
    // which types they admit: only the position of the filter among the type
    // points matters.
    std::vector<std::vector<Option>> opts(k);
    for (std::size_t t = 0; t < k; ++t) {
        const double v = pts[t];
        opts[t].push_back({0, 0.0, 0.0});
        for (int x = 1; x <= s.horizon; ++x) {
            for (double total : s.payment_levels) {
                if (static_cast<double>(x) * v - total < -kEps) continue; // IR for the owner type
                const double rate = total / x;
                std::vector<double> fs{rate};
                for (double L : s.payment_levels)
                    if (L > rate + kEps && L <= total + kEps) fs.push_back(L);
                std::sort(fs.begin(), fs.end());
                long last_class = -1;
                for (double f : fs) {
                    if (f > v + kEps) break; // the owner type must pass its own filter
                    const long cls = std::lower_bound(pts.begin(), pts.end(), f - kEps) -
                                     pts.begin();
                    if (cls == last_class) continue;
                    last_class = cls;
                    opts[t].push_back({x, total, f});
                }
            }
        }
        // Better incumbents earlier: sort by the seller's reward from the
        // owning type, descending.
        std::sort(opts[t].begin(), opts[t].end(), [&](const Option& a, const Option& b) {
            return offer_reward(a, s.g, s.c, v) > offer_reward(b, s.g, s.c, v);
        });
    }

    // Optimistic per-type bounds for branch-and-bound.
    std::vector<double> suffix_ub(k + 1, 0.0);
    for (std::size_t t = k; t-- > 0;) {
        double ub = 0.0;
        for (const auto& o : opts[t]) ub = std::max(ub, offer_reward(o, s.g, s.c, pts[t]));
        suffix_ub[t] = suffix_ub[t + 1] + s.grid.masses[t] * ub;
    }

    OracleResult result;
    result.outcome.assign(k, OracleOffer{});
    std::vector<Option> outcome_buf(k);

    // Seed the incumbent with simple structures: everything free for one
    // unit, and each one-or-all threshold at a payment level.
    double incumbent = -std::numeric_limits<double>::infinity();
    auto consider = [&](const std::vector<Option>& offers) {
        const double val = evaluate_set(offers, s, &outcome_buf);
        if (val > incumbent + kEps) {
            incumbent = val;
            for (std::size_t t = 0; t < k; ++t)
                result.outcome[t] = {outcome_buf[t].alloc, outcome_buf[t].total,
                                     outcome_buf[t].filter};
        }
    };
    consider({{1, 0.0, 0.0}});
    for (int x = 1; x <= s.horizon; ++x)
        for (double tau : s.payment_levels)
            if (tau <= pts.back() + kEps) consider({{1, 0.0, 0.0}, {x, tau, tau}});

    // DFS over types in increasing valuation order with incentive pruning:
    // a partial assignment dies as soon as some earlier type strictly envies
    // a new affordable offer or vice versa. Leaves are evaluated exactly, so
    // tie handling never depends on the intended assignment.
    std::vector<Option> cur(k);
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t t, double partial) -> void {
        if (t == k) {
            consider(cur);
            return;
        }
        for (const auto& o : opts[t]) {
            ++nodes;
            bool ok = true;
            for (std::size_t j = 0; j < t && ok; ++j) {
                const auto& oj = cur[j];
                if (oj.filter <= pts[t] + kEps &&
                    offer_utility(oj, pts[t]) > offer_utility(o, pts[t]) + kEps)
                    ok = false; // type t strictly prefers an earlier offer
                if (o.filter <= pts[j] + kEps &&
                    offer_utility(o, pts[j]) > offer_utility(oj, pts[j]) + kEps)
                    ok = false; // an earlier type strictly prefers this offer
            }
            if (!ok) continue;
            const double gain = s.grid.masses[t] * offer_reward(o, s.g, s.c, pts[t]);
            if (partial + gain + suffix_ub[t + 1] <= incumbent + 1e-12) continue;
            cur[t] = o;
            self(self, t + 1, partial + gain);
        }
    };
    dfs(dfs, 0, 0.0);

    result.best_value = incumbent;
    result.nodes = nodes;
    return result;
}

std::vector<int> dp_virtual_welfare(const IronedFn& psi, const CostFn& c, int max_alloc,
                                    const std::vector<double>& grid_v) {
    require(max_alloc <= c.max_units(), ErrorKind::invalid_argument,
            "dp_virtual_welfare: cost table shorter than max allocation");
    std::vector<int> alloc(grid_v.size(), 0);
    for (std::size_t i = 0; i < grid_v.size(); ++i) {
        const double p = psi.eval(grid_v[i]);
        int best_x = 0;
        double best = -c(0);
        for (int x = 1; x <= max_alloc; ++x) {
            const double val = p * static_cast<double>(x) - c(x);
            if (val > best + 1e-12) {
                best = val;
                best_x = x;
            }
        }
        alloc[i] = best_x;
    }
    return alloc;
}

} // namespace rental
