#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chipfire/cdf.hpp"
#include "chipfire/laws.hpp"
#include "chipfire/lift.hpp"

using namespace chipfire;

TEST_CASE("table validation") {
    CHECK_THROWS_AS(CdfSpec::from_table({{Rat(0), Rat(0)}}), InvalidCdf);
    CHECK_THROWS_AS(CdfSpec::from_table({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 2)}}), InvalidCdf);
    CHECK_THROWS_AS(CdfSpec::from_table({{Rat(1, 10), Rat(0)}, {Rat(1), Rat(1)}}), InvalidCdf);
    CHECK_THROWS_AS(
        CdfSpec::from_table({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(3, 4)}, {Rat(1, 2), Rat(1)},
                             {Rat(1), Rat(1)}}),
        InvalidCdf);
    CHECK_THROWS_AS(
        CdfSpec::from_table({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(3, 4)}, {Rat(3, 4), Rat(1, 2)},
                             {Rat(1), Rat(1)}}),
        InvalidCdf);
    CHECK_NOTHROW(CdfSpec::from_table({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));
}

TEST_CASE("identity table gives the identity lift and rigid rotations") {
    CdfSpec id = CdfSpec::from_table({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
    ExactLift f0 = lift_from_cdf_exact(id, Rat(0));
    REQUIRE(f0.well_formed());
    for (std::int64_t i = 0; i <= 20; ++i) {
        Rat x(i, 20);
        CHECK(f0(x) == x);
    }
    ExactLift f4 = lift_from_cdf_exact(id, Rat(1, 4));
    for (std::int64_t i = 0; i <= 20; ++i) {
        Rat x(i, 20);
        CHECK(f4(x) == x + Rat(1, 4));
    }
}

TEST_CASE("slope2 lift: plateaus at the quarter marks, slope 2 between") {
    ExactLift f = lift_from_cdf_exact(CdfSpec::slope2(), Rat(0));
    REQUIRE(f.well_formed());
    CHECK(f(Rat(0)) == Rat(0));
    CHECK(f(Rat(1, 8)) == Rat(0));
    CHECK(f(Rat(1, 4)) == Rat(0));
    CHECK(f(Rat(1, 2)) == Rat(1, 2));   // 2x - 1/2
    CHECK(f(Rat(5, 8)) == Rat(3, 4));
    CHECK(f(Rat(3, 4)) == Rat(1));
    CHECK(f(Rat(7, 8)) == Rat(1));
    CHECK(f(Rat(1)) == Rat(1));
}

TEST_CASE("float lifts of sqrt and sine are monotone degree-one") {
    for (auto F : {CdfSpec::sqrt(), CdfSpec::sine()}) {
        FloatLift f = lift_from_cdf(F, 0.3, 1 << 10);
        REQUIRE(f.well_formed());
        CHECK(f(0.0) == doctest::Approx(0.3).epsilon(1e-12));
        for (int i = 0; i < 200; ++i) {
            double x = i / 200.0;
            CHECK(f(x + 1.0) == doctest::Approx(f(x) + 1.0).epsilon(1e-12));
            CHECK(f(x) <= f(x + 1.0 / 199.0) + 1e-12);
        }
    }
}

TEST_CASE("sine cdf is a genuine cdf") {
    CdfSpec F = CdfSpec::sine();
    CHECK(F.eval(0) == 0);
    CHECK(F.eval(1) == 1);
    for (int i = 0; i < 100; ++i) {
        double x = i / 100.0;
        CHECK(F.eval(x) <= F.eval(x + 0.01) + 1e-12);
    }
}

TEST_CASE("empirical slope2 histogram converges to the three-branch F") {
    CdfSpec F = CdfSpec::slope2();
    auto sup_gap = [&](std::int64_t n) {
        ChipConfig c = slope2_config(n);
        // step CDF F_n(x) = #{v : sigma(v) < nx} / n; the sup against a
        // monotone continuous F is attained at the jumps x = h/n
        std::vector<std::int64_t> sorted(c.heights().begin(), c.heights().end());
        std::sort(sorted.begin(), sorted.end());
        double worst = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t h = sorted[i];
            double x = static_cast<double>(h) / static_cast<double>(n);
            auto lt = std::lower_bound(sorted.begin(), sorted.end(), h) - sorted.begin();
            auto le = std::upper_bound(sorted.begin(), sorted.end(), h) - sorted.begin();
            worst = std::max(worst, std::fabs(static_cast<double>(lt) / n - F.eval(x)));
            worst = std::max(worst, std::fabs(static_cast<double>(le) / n - F.eval(x)));
        }
        return worst;
    };
    double g100 = sup_gap(100), g1000 = sup_gap(1000), g10000 = sup_gap(10000);
    CHECK(g1000 <= g100);
    CHECK(g10000 <= g1000);
    // every height appears twice, so the step CDF jumps by 2/n: that jump
    // is the exact sup distance to the continuous limit
    CHECK(g10000 <= 2.0 / 10000 + 1e-9);
    CHECK(g10000 >= 2.0 / 10000 - 1e-9);
}

TEST_CASE("config lifts converge to the shifted continuum lift") {
    // sup |f_{n,y} - Phi . R_y| decreasing over n at fixed y
    const double y = 0.37;
    auto sup_gap = [&](std::int64_t n) {
        std::int64_t k = static_cast<std::int64_t>(std::floor(y * n));
        double yn = static_cast<double>(k) / static_cast<double>(n);
        FloatLift fn = to_float(lift_from_config(slope2_config(n).add(k)));
        ExactLift Phi = lift_from_cdf_exact(CdfSpec::slope2(), Rat(0));
        double worst = 0;
        for (int i = 0; i <= 4096; ++i) {
            double x = i / 4096.0;
            double lhs = fn(x);
            double rhs = Phi(Rat::from_double(x + yn)).to_double();
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
        return worst;
    };
    // multiples of 4 are special: the slope2 lift is exactly the continuum
    // lift, so the gap vanishes
    CHECK(sup_gap(100) < 1e-12);
    // otherwise the gap is ~1/n and strictly shrinks
    double g101 = sup_gap(101), g1001 = sup_gap(1001), g10001 = sup_gap(10001);
    CHECK(g1001 < g101);
    CHECK(g10001 < g1001);
    CHECK(g10001 < 2e-4);
}
