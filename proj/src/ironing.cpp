#include "rental/ironing.hpp"

#include <algorithm>
#include <cmath>

namespace rental {

IronedFn::IronedFn(DistPtr dist, std::vector<double> psi, std::vector<double> cell_slopes)
    : dist_(std::move(dist)), psi_(std::move(psi)), slopes_(std::move(cell_slopes)) {
    require(dist_ != nullptr, ErrorKind::invalid_argument, "ironed fn: null distribution");
    require(psi_.size() >= 2 && slopes_.size() + 1 == psi_.size(), ErrorKind::invalid_argument,
            "ironed fn: grid too small");
    for (std::size_t j = 1; j < psi_.size(); ++j)
        require(psi_[j] >= psi_[j - 1] - 1e-12, ErrorKind::internal,
                "ironed fn: values must be non-decreasing");
    const double dq = 1.0 / static_cast<double>(slopes_.size());
    cum_.resize(psi_.size());
    cum_[0] = 0.0;
    for (std::size_t j = 0; j < slopes_.size(); ++j) cum_[j + 1] = cum_[j] + slopes_[j] * dq;
}

double IronedFn::eval_q(double q) const {
    require(q >= -1e-12 && q <= 1.0 + 1e-12, ErrorKind::invalid_argument,
            "ironed fn: quantile out of [0,1]");
    q = std::clamp(q, 0.0, 1.0);
    const double m = static_cast<double>(psi_.size() - 1);
    const double t = q * m;
    std::size_t j = static_cast<std::size_t>(t);
    if (j >= psi_.size() - 1) return psi_.back();
    return psi_[j] + (t - static_cast<double>(j)) * (psi_[j + 1] - psi_[j]);
}

double IronedFn::eval(double v) const {
    require(v >= dist_->lo() - 1e-12 && v <= dist_->hi() + 1e-12, ErrorKind::invalid_argument,
            "ironed fn: valuation outside support");
    return eval_q(dist_->cdf(v));
}

double IronedFn::sup_q(double y, bool strict) const {
    const std::size_t m = psi_.size() - 1;
    // Relative snap keeps float noise on exactly-flat functions from
    // flipping the set-membership test.
    const double eps = 1e-9 * (1.0 + std::abs(y));
    auto below = [&](double x) { return strict ? x < y - eps : x <= y + eps; };
    if (!below(psi_.front())) return -1.0; // empty set
    if (below(psi_.back())) return 1.0;
    // Largest j with psi_[j] below the level; psi_[j+1] is not below it.
    std::size_t lo = 0, hi = m;
    while (lo + 1 < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (below(psi_[mid])) lo = mid; else hi = mid;
    }
    const double denom = psi_[lo + 1] - psi_[lo];
    double t = denom > 0.0 ? (y - psi_[lo]) / denom : 1.0;
    t = std::clamp(t, 0.0, 1.0);
    return (static_cast<double>(lo) + t) / static_cast<double>(m);
}

double IronedFn::sup_inverse(double y) const {
    const double q = sup_q(y, false);
    if (q < 0.0) return 0.0; // empty-set convention
    return dist_->quantile(q);
}

double IronedFn::sup_inverse_strict(double y) const {
    const double q = sup_q(y, true);
    if (q < 0.0) return dist_->lo();
    return dist_->quantile(q);
}

double IronedFn::sup_inverse_eq(double y, double tol) const {
    if (y > psi_.back() + tol) return dist_->hi();
    if (y < psi_.front() - tol) return dist_->lo();
    const double q = sup_q(y + tol, false);
    return dist_->quantile(std::clamp(q, 0.0, 1.0));
}

double IronedFn::integral_q(double qa, double qb) const {
    qa = std::clamp(qa, 0.0, 1.0);
    qb = std::clamp(qb, 0.0, 1.0);
    if (qb <= qa) return 0.0;
    // Integral of the piecewise-constant hull slope: cumulative sums at cell
    // boundaries plus exact partial cells.
    const std::size_t m = slopes_.size();
    const double md = static_cast<double>(m);
    auto at = [&](double q) {
        const double t = q * md;
        std::size_t j = static_cast<std::size_t>(std::min(t, md - 1e-9));
        return cum_[j] + slopes_[j] * (t - static_cast<double>(j)) / md;
    };
    return at(qb) - at(qa);
}

IronedFn iron(const std::function<double(double)>& theta, DistPtr dist, std::size_t m) {
    require(dist != nullptr, ErrorKind::invalid_argument, "iron: null distribution");
    require(m >= 16, ErrorKind::invalid_argument, "iron: grid size must be at least 16");

    const double dq = 1.0 / static_cast<double>(m);
    std::vector<double> h(m + 1), H(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        const double v = dist->quantile(static_cast<double>(j) * dq);
        h[j] = theta(v);
        require(std::isfinite(h[j]), ErrorKind::invalid_argument,
                "iron: theta is not finite on the support");
    }
    H[0] = 0.0;
    for (std::size_t j = 0; j < m; ++j) H[j + 1] = H[j] + 0.5 * (h[j] + h[j + 1]) * dq;

    // Lower convex hull of (q_j, H_j) by monotone chain; q is equally spaced,
    // so the cross product uses cell indices directly.
    std::vector<std::size_t> hull;
    hull.reserve(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull.back();
            const double cross = static_cast<double>(b - a) * (H[j] - H[a]) -
                                 static_cast<double>(j - a) * (H[b] - H[a]);
            if (cross <= 0.0) hull.pop_back(); else break;
        }
        hull.push_back(j);
    }

    // Slope of the hull segment covering each cell [q_j, q_{j+1}), and the
    // length (in cells) of that segment. Multi-cell segments are ironed
    // flats; runs of single-cell segments track a smooth convex H.
    std::vector<double> rslope(m);
    std::vector<std::size_t> seg_len(m);
    double spread = 0.0;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const std::size_t a = hull[s], b = hull[s + 1];
        const double slope = (H[b] - H[a]) / (static_cast<double>(b - a) * dq);
        for (std::size_t j = a; j < b; ++j) {
            rslope[j] = slope;
            seg_len[j] = b - a;
        }
    }
    spread = rslope[m - 1] - rslope[0];

    // psi at grid points. Where the hull is smooth (single-cell segments on
    // both sides with an O(dq) slope gap), the centered average is an
    // unbiased sample of the derivative; genuine kinks and flat boundaries
    // take the right segment's slope, extending right-continuously.
    const double jump_tol = spread * (50.0 * dq) + 1e-12;
    std::vector<double> psi(m + 1);
    for (std::size_t j = 1; j < m; ++j) {
        const double sL = rslope[j - 1], sR = rslope[j];
        const bool smooth = seg_len[j - 1] == 1 && seg_len[j] == 1 && (sR - sL) <= jump_tol;
        psi[j] = smooth ? 0.5 * (sL + sR) : sR;
    }
    if (m >= 2 && seg_len[0] == 1 && seg_len[1] == 1 && rslope[1] - rslope[0] <= jump_tol)
        psi[0] = rslope[0] - 0.5 * (rslope[1] - rslope[0]);
    else
        psi[0] = rslope[0];
    if (m >= 2 && seg_len[m - 1] == 1 && seg_len[m - 2] == 1 &&
        rslope[m - 1] - rslope[m - 2] <= jump_tol)
        psi[m] = rslope[m - 1] + 0.5 * (rslope[m - 1] - rslope[m - 2]);
    else
        psi[m] = rslope[m - 1];
    for (std::size_t j = 1; j <= m; ++j) psi[j] = std::max(psi[j], psi[j - 1]);

    return IronedFn(std::move(dist), std::move(psi), std::move(rslope));
}

} // namespace rental
