#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "rental/error.hpp"

namespace rental {

// Deterministic generator used for inverse-transform sampling. The double
// stream is produced from the raw engine output, so results are identical
// across platforms and standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

    // Independent stream for (seed, index) pairs; simulation episodes each
    // get their own stream so aggregation order cannot matter.
    static Rng for_stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed) ^ mix(index * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

// Equal-mass discretization of a prior, used by the brute-force oracle.
struct DiscreteGrid {
    std::vector<double> points; // strictly increasing
    std::vector<double> masses; // nonnegative, sum to 1

    void validate() const;
};

// A valuation prior supported on a single bounded interval [lo, hi].
//
// Two kinds: closed-form uniform, and "grid" distributions represented on a
// fixed quantile grid with piecewise-linear cdf (the native representation
// for ironing, which works in quantile space). Immutable after construction.
class Distribution {
public:
    enum class Kind { uniform, grid };

    static Distribution uniform(double lo, double hi);

    // Piecewise-linear cdf through the given (v, F(v)) knots, re-gridded to
    // `quantile_grid` equal-probability cells.
    static Distribution from_cdf_points(const std::vector<std::array<double, 2>>& pts,
                                        std::size_t quantile_grid = 10000);

    Kind kind() const { return kind_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    double cdf(double v) const;
    double quantile(double q) const;
    // Density; at the support endpoints the value is taken from the nearest
    // interior grid cell so that virtual values stay finite.
    double pdf(double v) const;

    // E[v | a <= v <= b]; the interval must carry positive probability.
    double cond_mean(double a, double b) const;
    // cdf(b) - cdf(a), clamped to [0, 1].
    double interval_prob(double a, double b) const;
    double mean() const { return cond_mean(lo_, hi_); }

    double sample(Rng& rng) const { return quantile(rng.next_unit()); }

    // k equal-probability quantile midpoints, each with mass 1/k.
    DiscreteGrid discretize(std::size_t k) const;

    bool operator==(const Distribution& other) const;

private:
    Distribution() = default;

    Kind kind_ = Kind::uniform;
    double lo_ = 0.0;
    double hi_ = 1.0;
    // Grid form: values[j] = quantile(j / m), j = 0..m, strictly increasing.
    std::vector<double> qv_;
};

using DistPtr = std::shared_ptr<const Distribution>;

} // namespace rental
