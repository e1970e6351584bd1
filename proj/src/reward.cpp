#include "rental/reward.hpp"

#include <algorithm>
#include <cmath>

namespace rental {

const char* reward_class_name(RewardClass c) {
    switch (c) {
        case RewardClass::welfare_like: return "welfare_like";
        case RewardClass::revenue_like: return "revenue_like";
        case RewardClass::positive_tradeoff: return "positive_tradeoff";
        case RewardClass::negative_tradeoff: return "negative_tradeoff";
    }
    return "?";
}

RewardFn RewardFn::linear(double alpha, double beta) {
    require(std::isfinite(alpha) && std::isfinite(beta), ErrorKind::config,
            "linear reward: coefficients must be finite");
    require(alpha >= 0.0, ErrorKind::config, "linear reward: alpha must be nonnegative");
    RewardFn g;
    g.alpha_ = alpha;
    g.beta_ = beta;
    if (beta == 0.0) {
        g.cls_ = RewardClass::welfare_like;
    } else if (alpha == 0.0) {
        require(beta > 0.0, ErrorKind::config,
                "linear reward: alpha = 0 requires beta > 0 (revenue-like)");
        g.cls_ = RewardClass::revenue_like;
    } else if (beta > 0.0) {
        g.cls_ = RewardClass::positive_tradeoff;
    } else {
        require(alpha >= -beta, ErrorKind::config,
                "linear reward: negative tradeoff requires alpha >= |beta|");
        g.cls_ = RewardClass::negative_tradeoff;
    }
    return g;
}

RewardFn RewardFn::negative_tradeoff(double alpha, double beta) {
    require(alpha > 0.0 && beta > 0.0, ErrorKind::config,
            "negative tradeoff: alpha and beta must be positive");
    return linear(alpha, -beta);
}

RewardFn RewardFn::welfare(std::vector<std::pair<double, double>> f_points) {
    require(f_points.size() >= 2, ErrorKind::config, "welfare reward: need at least two points");
    for (std::size_t i = 0; i < f_points.size(); ++i) {
        require(std::isfinite(f_points[i].first) && std::isfinite(f_points[i].second),
                ErrorKind::config, "welfare reward: non-finite table entry");
        if (i > 0) {
            require(f_points[i].first > f_points[i - 1].first, ErrorKind::config,
                    "welfare reward: valuations must be strictly increasing");
            require(f_points[i].second >= f_points[i - 1].second, ErrorKind::config,
                    "welfare reward: f must be non-decreasing");
        }
    }
    if (f_points.front().first <= 0.0)
        require(std::abs(f_points.front().second) <= 1e-9 || f_points.front().first < 0.0,
                ErrorKind::config, "welfare reward: f(0) must be 0");
    RewardFn g;
    g.cls_ = RewardClass::welfare_like;
    g.tabulated_ = true;
    g.f_ = std::move(f_points);
    return g;
}

double RewardFn::eval(double v, double p) const {
    if (!tabulated_) return alpha_ * v + beta_ * p;
    if (v <= f_.front().first) return f_.front().second;
    if (v >= f_.back().first) return f_.back().second;
    auto it = std::upper_bound(f_.begin(), f_.end(), v,
                               [](double x, const std::pair<double, double>& e) { return x < e.first; });
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double t = (v - a.first) / (b.first - a.first);
    return a.second + t * (b.second - a.second);
}

double revenue_virtual_value(const Distribution& d, double v) {
    require(v >= d.lo() - 1e-12 && v <= d.hi() + 1e-12, ErrorKind::invalid_argument,
            "virtual value: valuation outside support");
    const double f = d.pdf(v);
    require(f > 0.0 && std::isfinite(f), ErrorKind::singular_virtual_value,
            "virtual value: zero density after endpoint clamping");
    return v - (1.0 - d.cdf(v)) / f;
}

double fr_virtual_value(const RewardFn& g, const Distribution& d, double v) {
    return g.eval(v, revenue_virtual_value(d, v));
}

double horizon_virtual_value(const RewardFn& g, const Distribution& d, int horizon, double v) {
    require(horizon >= 2, ErrorKind::horizon_too_small,
            "horizon-specific virtual value: horizon must be at least 2");
    require(g.cls() == RewardClass::negative_tradeoff, ErrorKind::reward_class,
            "horizon-specific virtual value: reward must be negative tradeoff");
    return g.eval(v, revenue_virtual_value(d, v) / static_cast<double>(horizon - 1));
}

} // namespace rental
