#include "rental/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace rental {

namespace {

bool finite(double x) { return std::isfinite(x); }

} // namespace

void DiscreteGrid::validate() const {
    require(points.size() == masses.size() && !points.empty(), ErrorKind::invalid_argument,
            "discrete grid: points/masses size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        require(finite(points[i]), ErrorKind::invalid_argument, "discrete grid: non-finite point");
        require(masses[i] >= 0.0, ErrorKind::invalid_argument, "discrete grid: negative mass");
        if (i > 0)
            require(points[i] > points[i - 1], ErrorKind::invalid_argument,
                    "discrete grid: points must be strictly increasing");
        sum += masses[i];
    }
    require(std::abs(sum - 1.0) <= 1e-12, ErrorKind::invalid_argument,
            "discrete grid: masses must sum to 1");
}

Distribution Distribution::uniform(double lo, double hi) {
    require(finite(lo) && finite(hi), ErrorKind::config,
            "uniform distribution: bounds must be finite (unbounded supports are not supported)");
    require(lo >= 0.0, ErrorKind::config, "uniform distribution: lo must be nonnegative");
    require(hi > lo, ErrorKind::config, "uniform distribution: hi must exceed lo");
    Distribution d;
    d.kind_ = Kind::uniform;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

Distribution Distribution::from_cdf_points(const std::vector<std::array<double, 2>>& pts,
                                           std::size_t quantile_grid) {
    require(pts.size() >= 2, ErrorKind::config, "grid distribution: need at least two cdf points");
    require(quantile_grid >= 16, ErrorKind::config, "grid distribution: quantile grid too small");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        require(finite(pts[i][0]) && finite(pts[i][1]), ErrorKind::config,
                "grid distribution: non-finite cdf point");
        if (i > 0) {
            require(pts[i][0] > pts[i - 1][0], ErrorKind::config,
                    "grid distribution: valuations must be strictly increasing");
            require(pts[i][1] > pts[i - 1][1], ErrorKind::config,
                    "grid distribution: cdf must be strictly increasing");
        }
    }
    require(pts.front()[0] >= 0.0, ErrorKind::config,
            "grid distribution: support must be nonnegative");
    require(std::abs(pts.front()[1]) <= 1e-9, ErrorKind::config,
            "grid distribution: cdf must start at 0");
    require(std::abs(pts.back()[1] - 1.0) <= 1e-9, ErrorKind::config,
            "grid distribution: cdf must end at 1");

    const std::size_t m = quantile_grid;
    Distribution d;
    d.kind_ = Kind::grid;
    d.lo_ = pts.front()[0];
    d.hi_ = pts.back()[0];
    d.qv_.resize(m + 1);
    // Invert the piecewise-linear cdf at q = j/m.
    std::size_t seg = 0;
    const double f0 = pts.front()[1], f1 = pts.back()[1];
    for (std::size_t j = 0; j <= m; ++j) {
        const double q = f0 + (f1 - f0) * (static_cast<double>(j) / m);
        while (seg + 2 < pts.size() && pts[seg + 1][1] < q) ++seg;
        const double qa = pts[seg][1], qb = pts[seg + 1][1];
        const double va = pts[seg][0], vb = pts[seg + 1][0];
        const double t = (q - qa) / (qb - qa);
        d.qv_[j] = va + t * (vb - va);
    }
    d.qv_.front() = d.lo_;
    d.qv_.back() = d.hi_;
    for (std::size_t j = 1; j <= m; ++j)
        require(d.qv_[j] > d.qv_[j - 1], ErrorKind::config,
                "grid distribution: degenerate quantile cell (cdf too flat for the grid)");
    return d;
}

double Distribution::cdf(double v) const {
    if (v <= lo_) return 0.0;
    if (v >= hi_) return 1.0;
    if (kind_ == Kind::uniform) return (v - lo_) / (hi_ - lo_);
    const auto it = std::upper_bound(qv_.begin(), qv_.end(), v);
    const std::size_t j = static_cast<std::size_t>(it - qv_.begin()) - 1;
    const double m = static_cast<double>(qv_.size() - 1);
    const double t = (v - qv_[j]) / (qv_[j + 1] - qv_[j]);
    return (static_cast<double>(j) + t) / m;
}

double Distribution::quantile(double q) const {
    require(q >= -1e-12 && q <= 1.0 + 1e-12, ErrorKind::invalid_argument,
            "quantile: probability out of [0,1]");
    q = std::clamp(q, 0.0, 1.0);
    if (kind_ == Kind::uniform) return lo_ + q * (hi_ - lo_);
    const double m = static_cast<double>(qv_.size() - 1);
    const double t = q * m;
    std::size_t j = static_cast<std::size_t>(t);
    if (j >= qv_.size() - 1) return hi_;
    return qv_[j] + (t - static_cast<double>(j)) * (qv_[j + 1] - qv_[j]);
}

double Distribution::pdf(double v) const {
    require(v >= lo_ - 1e-12 && v <= hi_ + 1e-12, ErrorKind::invalid_argument,
            "pdf: valuation outside support");
    if (kind_ == Kind::uniform) return 1.0 / (hi_ - lo_);
    const std::size_t m = qv_.size() - 1;
    v = std::clamp(v, lo_, hi_);
    auto it = std::upper_bound(qv_.begin(), qv_.end(), v);
    std::size_t j = it == qv_.begin() ? 0 : static_cast<std::size_t>(it - qv_.begin()) - 1;
    if (j >= m) j = m - 1;
    // Exactly at a support endpoint the density is read from the adjacent
    // interior cell, keeping virtual values finite on a measure-zero set.
    if (m >= 3 && v == lo_) j = 1;
    if (m >= 3 && v == hi_) j = m - 2;
    const double dq = 1.0 / static_cast<double>(m);
    return dq / (qv_[j + 1] - qv_[j]);
}

double Distribution::interval_prob(double a, double b) const {
    if (b < a) std::swap(a, b);
    return std::clamp(cdf(b) - cdf(a), 0.0, 1.0);
}

double Distribution::cond_mean(double a, double b) const {
    require(a <= b, ErrorKind::invalid_argument, "cond_mean: need a <= b");
    a = std::max(a, lo_);
    b = std::min(b, hi_);
    const double qa = cdf(a), qb = cdf(b);
    require(qb > qa, ErrorKind::empty_interval,
            "cond_mean: interval carries zero probability");
    if (kind_ == Kind::uniform) return 0.5 * (a + b);

    // Integrate quantile(q) dq over [qa, qb] with exact partial cells.
    const std::size_t m = qv_.size() - 1;
    const double md = static_cast<double>(m);
    const double ta = qa * md, tb = qb * md;
    const std::size_t ja = static_cast<std::size_t>(std::min(ta, md - 1e-9));
    const std::size_t jb = static_cast<std::size_t>(std::min(tb, md - 1e-9));
    auto value_at = [&](double t) {
        std::size_t j = static_cast<std::size_t>(std::min(t, md - 1e-9));
        return qv_[j] + (t - static_cast<double>(j)) * (qv_[j + 1] - qv_[j]);
    };
    double acc = 0.0;
    if (ja == jb) {
        acc = 0.5 * (value_at(ta) + value_at(tb)) * (tb - ta);
    } else {
        acc += 0.5 * (value_at(ta) + qv_[ja + 1]) * (static_cast<double>(ja + 1) - ta);
        for (std::size_t j = ja + 1; j < jb; ++j) acc += 0.5 * (qv_[j] + qv_[j + 1]);
        acc += 0.5 * (qv_[jb] + value_at(tb)) * (tb - static_cast<double>(jb));
    }
    acc /= md;
    return acc / (qb - qa);
}

DiscreteGrid Distribution::discretize(std::size_t k) const {
    require(k >= 2, ErrorKind::invalid_argument, "discretize: need k >= 2");
    DiscreteGrid g;
    g.points.resize(k);
    g.masses.assign(k, 1.0 / static_cast<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        g.points[i] = quantile((2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(k)));
    g.validate();
    return g;
}

bool Distribution::operator==(const Distribution& other) const {
    return kind_ == other.kind_ && lo_ == other.lo_ && hi_ == other.hi_ && qv_ == other.qv_;
}

} // namespace rental
