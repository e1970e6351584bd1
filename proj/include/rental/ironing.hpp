#pragma once

#include <functional>
#include <vector>

#include "rental/distribution.hpp"

namespace rental {

// Monotone ironed virtual-value function psi on the quantile grid, produced
// by iron(). Evaluation at a valuation v interpolates psi at F(v).
class IronedFn {
public:
    // psi: grid-point samples (size m+1) used for evaluation; cell_slopes:
    // exact hull slope per quantile cell (size m) used for integrals.
    IronedFn(DistPtr dist, std::vector<double> psi, std::vector<double> cell_slopes);

    const Distribution& dist() const { return *dist_; }
    DistPtr dist_ptr() const { return dist_; }
    std::size_t grid_size() const { return psi_.size() - 1; }
    const std::vector<double>& values() const { return psi_; }

    double min_value() const { return psi_.front(); }
    double max_value() const { return psi_.back(); }

    // psi(F(v)); v must lie in the support.
    double eval(double v) const;
    // psi at quantile q in [0, 1].
    double eval_q(double q) const;

    // sup{v in support : psi(F(v)) <= y}; 0 when the set is empty.
    double sup_inverse(double y) const;
    // sup{v : psi(F(v)) < y}; lo when the set is empty.
    double sup_inverse_strict(double y) const;
    // sup{v : psi(F(v)) = y} up to tol. Above the range this is hi (the
    // equality set is empty and so is the region beyond it); below the range
    // it is lo.
    double sup_inverse_eq(double y, double tol) const;

    // Integral of the hull derivative over [qa, qb], exact per segment.
    double integral_q(double qa, double qb) const;

private:
    double sup_q(double y, bool strict) const;

    DistPtr dist_;
    std::vector<double> psi_;    // non-decreasing, size m + 1
    std::vector<double> slopes_; // hull slope per cell, size m
    std::vector<double> cum_;    // cumulative cell integrals, size m + 1
};

// Ironing: h(q) = theta(quantile(q)), H = cumulative integral of h, Psi =
// lower convex hull of H, psi = slope of Psi assigned right-continuously at
// hull vertices. Grid size m >= 16.
IronedFn iron(const std::function<double(double)>& theta, DistPtr dist, std::size_t m = 10000);

} // namespace rental
