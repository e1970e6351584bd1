#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rental/reward.hpp"

using namespace rental;

TEST_CASE("eval across reward classes") {
    const auto pos = RewardFn::linear(3.0, 2.0);
    CHECK(pos.cls() == RewardClass::positive_tradeoff);
    CHECK(pos.eval(1.0, 2.0) == doctest::Approx(7.0));

    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    CHECK(cs.cls() == RewardClass::negative_tradeoff);
    CHECK(cs.eval(0.75, 0.5) == doctest::Approx(0.25));

    const auto wf = RewardFn::welfare({{0.0, 0.0}, {10.0, 10.0}});
    CHECK(wf.cls() == RewardClass::welfare_like);
    CHECK(wf.eval(4.0, 999.0) == doctest::Approx(4.0));

    const auto rev = RewardFn::linear(0.0, 1.0);
    CHECK(rev.cls() == RewardClass::revenue_like);
    CHECK(rev.eval(5.0, 2.5) == doctest::Approx(2.5));
}

TEST_CASE("class constraints") {
    CHECK_THROWS_AS(RewardFn::linear(1.0, -2.0), Error);   // alpha < |beta|
    CHECK_THROWS_AS(RewardFn::linear(0.0, -1.0), Error);
    CHECK_THROWS_AS(RewardFn::negative_tradeoff(1.0, 0.0), Error);
    CHECK_THROWS_AS(RewardFn::welfare({{0.0, 0.0}, {1.0, -0.5}}), Error); // decreasing
    CHECK_THROWS_AS(RewardFn::welfare({{0.0, 0.3}, {1.0, 0.5}}), Error);  // f(0) != 0
}

TEST_CASE("linear rewards are exactly linear in the payment") {
    const auto g = RewardFn::linear(2.0, 0.7);
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const double v = 10.0 * rng.next_unit();
        const double p1 = 5.0 * rng.next_unit(), p2 = 5.0 * rng.next_unit();
        CHECK(g.eval(v, p1) + g.eval(v, p2) ==
              doctest::Approx(g.eval(v, p1 + p2) + g.eval(v, 0.0)).epsilon(1e-12));
    }
}

TEST_CASE("revenue virtual value on uniform priors") {
    const auto u01 = Distribution::uniform(0.0, 1.0);
    CHECK(revenue_virtual_value(u01, 0.75) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(revenue_virtual_value(u01, 0.5) == doctest::Approx(0.0).epsilon(1e-9));
    const auto u08 = Distribution::uniform(0.0, 8.0);
    CHECK(revenue_virtual_value(u08, 8.0) == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("grid representation of a uniform prior reproduces 2v - b analytically") {
    // Uniform[a,b] has phi(v) = 2v - b; the gridded pdf is the exact slope of
    // the piecewise-linear cdf, so the identity holds to float precision.
    const double a = 0.5, b = 2.5;
    std::vector<std::array<double, 2>> pts;
    for (int i = 0; i <= 64; ++i) {
        const double v = a + (b - a) * i / 64.0;
        pts.push_back({v, (v - a) / (b - a)});
    }
    const auto grid = Distribution::from_cdf_points(pts, 10000);
    for (int i = 1; i < 100; ++i) {
        const double v = a + (b - a) * i / 100.0;
        CHECK(revenue_virtual_value(grid, v) == doctest::Approx(2.0 * v - b).epsilon(1e-9));
    }
}

TEST_CASE("fixed-rate-optimal virtual value") {
    const auto u01 = Distribution::uniform(0.0, 1.0);
    const auto g32 = RewardFn::linear(3.0, 2.0);
    // 5v - 2(1-F)/f at v = 1 on Uniform[0,1].
    CHECK(fr_virtual_value(g32, u01, 1.0) == doctest::Approx(5.0).epsilon(1e-9));
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    CHECK(fr_virtual_value(cs, u01, 0.3) == doctest::Approx(0.7).epsilon(1e-9));
    const auto wf = RewardFn::welfare({{0.0, 0.0}, {10.0, 10.0}});
    const auto u03 = Distribution::uniform(0.0, 3.0);
    CHECK(fr_virtual_value(wf, u03, 2.0) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("horizon-specific virtual value for consumer surplus") {
    const auto u01 = Distribution::uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    CHECK(horizon_virtual_value(cs, u01, 4, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(horizon_virtual_value(cs, u01, 2, 0.25) == doctest::Approx(0.75).epsilon(1e-9));
    for (double v : {0.1, 0.4, 0.9})
        CHECK(horizon_virtual_value(cs, u01, 3, v) == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(horizon_virtual_value(cs, u01, 1, 0.5), Error);
    const auto wf = RewardFn::welfare({{0.0, 0.0}, {1.0, 1.0}});
    CHECK_THROWS_AS(horizon_virtual_value(wf, u01, 4, 0.5), Error);
}

TEST_CASE("horizon-specific virtual value is nonnegative for n >= 4") {
    const auto u01 = Distribution::uniform(0.0, 1.0);
    const auto cs = RewardFn::negative_tradeoff(1.0, 1.0);
    for (int n : {4, 5, 8, 16})
        for (int i = 0; i <= 200; ++i)
            CHECK(horizon_virtual_value(cs, u01, n, i / 200.0) >= -1e-12);
}
