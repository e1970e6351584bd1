#pragma once

#include <vector>

#include "rental/error.hpp"

namespace rental {

// Production cost c(0..n), normalized so c(0) = 0 and non-decreasing.
struct CostFn {
    std::vector<double> values; // values[x] = c(x), x = 0..n

    static CostFn zero(int n) { return CostFn{std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)}; }

    int max_units() const { return static_cast<int>(values.size()) - 1; }

    double operator()(int x) const {
        require(x >= 0 && x < static_cast<int>(values.size()), ErrorKind::invalid_argument,
                "cost: allocation out of range");
        return values[static_cast<std::size_t>(x)];
    }

    void validate() const {
        require(!values.empty(), ErrorKind::invalid_argument, "cost: empty table");
        require(values[0] == 0.0, ErrorKind::invalid_argument, "cost: c(0) must be 0");
        for (std::size_t i = 1; i < values.size(); ++i)
            require(values[i] >= values[i - 1] - 1e-12, ErrorKind::invalid_argument,
                    "cost: must be non-decreasing");
    }
};

// Expected optimal reward per horizon, R[0..n]; drives the over-time cost.
struct RewardTable {
    std::vector<double> r;

    int horizon() const { return static_cast<int>(r.size()) - 1; }

    double operator[](int h) const {
        require(h >= 0 && h < static_cast<int>(r.size()), ErrorKind::invalid_argument,
                "reward table: horizon out of range");
        return r[static_cast<std::size_t>(h)];
    }

    void validate() const {
        require(!r.empty() && r[0] == 0.0, ErrorKind::invalid_argument,
                "reward table: R[0] must be 0");
        for (std::size_t i = 1; i < r.size(); ++i)
            require(r[i] >= r[i - 1] - 1e-9, ErrorKind::invalid_argument,
                    "reward table: must be non-decreasing");
    }
};

// Over-time cost at horizon h: renting x days forgoes R[h-1] - R[h-max(x,1)]
// of future reward.
inline double over_time_cost(const RewardTable& t, int h, int x) {
    require(h >= 1 && h <= t.horizon(), ErrorKind::invalid_argument,
            "over-time cost: horizon out of range");
    require(x >= 0 && x <= h, ErrorKind::invalid_argument,
            "over-time cost: allocation out of range");
    return t[h - 1] - t[h - std::max(x, 1)];
}

inline CostFn over_time_cost_fn(const RewardTable& t, int h) {
    CostFn c;
    c.values.resize(static_cast<std::size_t>(h) + 1);
    for (int x = 0; x <= h; ++x) c.values[static_cast<std::size_t>(x)] = over_time_cost(t, h, x);
    return c;
}

} // namespace rental
