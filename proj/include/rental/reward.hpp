#pragma once

#include <utility>
#include <vector>

#include "rental/distribution.hpp"
#include "rental/error.hpp"

namespace rental {

enum class RewardClass {
    welfare_like,      // g(v, p) = f(v), f non-decreasing
    revenue_like,      // g(v, p) = beta * p, beta > 0
    positive_tradeoff, // g(v, p) = alpha * v + beta * p, alpha, beta > 0
    negative_tradeoff, // g(v, p) = alpha * v - beta * p, alpha >= beta > 0
};

const char* reward_class_name(RewardClass c);

// The designer's per-day reward g(v, p). Linear rewards store the signed
// payment coefficient, so negative tradeoff has beta < 0 internally; the
// paper-facing (alpha, beta) pair with a minus sign is normalized at
// construction. Welfare-like rewards may instead carry a tabulated
// non-decreasing f.
class RewardFn {
public:
    // g = alpha * v + beta * p with signed beta.
    static RewardFn linear(double alpha, double beta);
    // g = alpha * v - beta * p with both coefficients positive and alpha >= beta.
    static RewardFn negative_tradeoff(double alpha, double beta);
    // Tabulated non-decreasing f, evaluated by linear interpolation.
    static RewardFn welfare(std::vector<std::pair<double, double>> f_points);

    RewardClass cls() const { return cls_; }
    bool is_linear() const { return !tabulated_; }
    double alpha() const { return alpha_; }
    // Signed payment coefficient (0 for welfare-like).
    double beta() const { return beta_; }

    double eval(double v, double p) const;

private:
    RewardFn() = default;

    RewardClass cls_ = RewardClass::welfare_like;
    bool tabulated_ = false;
    double alpha_ = 0.0;
    double beta_ = 0.0;
    std::vector<std::pair<double, double>> f_;
};

// Myerson's virtual value for revenue: v - (1 - F(v)) / f(v).
double revenue_virtual_value(const Distribution& d, double v);

// Fixed-rate-optimal virtual value g(v, phi(v)).
double fr_virtual_value(const RewardFn& g, const Distribution& d, double v);

// Horizon-specific virtual value g(v, phi(v) / (n - 1)) for negative
// tradeoff at horizon n >= 2.
double horizon_virtual_value(const RewardFn& g, const Distribution& d, int horizon, double v);

} // namespace rental
