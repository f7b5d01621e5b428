#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chipfire/laws.hpp"
#include "chipfire/lift.hpp"
#include "chipfire/sampling.hpp"
#include "chipfire/simulate.hpp"
#include "chipfire/update.hpp"

using namespace chipfire;

namespace {
ExactLift rigid_rotation(const Rat& theta) {
    ExactLift f;
    f.xs = {Rat(0)};
    f.ys = {theta};
    return f;
}
}  // namespace

TEST_CASE("lift of the all-zero config") {
    for (std::int64_t n : {2, 5, 16}) {
        ExactLift f = lift_from_config(ChipConfig(std::vector<std::int64_t>(n, 0)));
        REQUIRE(f.well_formed());
        CHECK(f(Rat(0)) == Rat(0));
        CHECK(f(Rat(n - 1, n)) == Rat(0));  // flat up to 1 - 1/n
        CHECK(f(Rat(2 * n - 1, 2 * n)) == Rat(1, 2));
        CHECK(f(Rat(1)) == Rat(1));  // slope n on the last segment
    }
}

TEST_CASE("lift of the full fixed point has f(0) = 1") {
    std::int64_t n = 7;
    ExactLift f = lift_from_config(ChipConfig(std::vector<std::int64_t>(n, n)));
    CHECK(f.f0() == Rat(1));
    // degree-one rotation behavior: beta_t = t
    CHECK(iterate(f, Rat(0), 5) == Rat(5));
}

TEST_CASE("lift rejects non-preconfined configs") {
    CHECK_THROWS_AS(lift_from_config(ChipConfig({4, 0})), NotPreconfined);
}

TEST_CASE("degree one and monotone on random configs") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = trial_rng(31, i);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 40);
        ExactLift f = lift_from_config(random_preconfined(rng, n));
        REQUIRE(f.well_formed());
        for (int j = 0; j < 20; ++j) {
            Rat x(static_cast<std::int64_t>(rng() % 1000), 500);  // in [0,2)
            REQUIRE(f(x + Rat(1)) == f(x) + Rat(1));
            Rat x2 = x + Rat(static_cast<std::int64_t>(rng() % 100), 1000);
            REQUIRE(f(x) <= f(x2));
        }
    }
}

TEST_CASE("beta iterates equal alpha/n") {
    // slope2 n=10 + 5: f^2(0) = alpha_2 / 10
    ChipConfig c = slope2_config(10).add(5);
    ExactLift f = lift_from_config(c);
    auto rs = firing_sequence(c, 2);
    CHECK(iterate(f, Rat(0), 2) == Rat(rs[0] + rs[1], 10));

    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = trial_rng(37, i);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 63);
        ChipConfig cc = random_preconfined(rng, n);
        ExactLift ff = lift_from_config(cc);
        auto rr = firing_sequence(cc, 2 * static_cast<std::uint64_t>(n));
        Rat beta(0);
        std::int64_t alpha = 0;
        for (std::size_t t = 0; t < rr.size(); ++t) {
            beta = ff(beta);
            alpha += rr[t];
            REQUIRE(beta == Rat(alpha, n));
        }
    }
}

TEST_CASE("update_lift fixes rotations and lifts with f(0) = 0") {
    ExactLift r13 = rigid_rotation(Rat(1, 3));
    CHECK(lifts_equal(update_lift(r13), r13));

    ExactLift f = lift_from_config(ChipConfig(std::vector<std::int64_t>(4, 0)));
    REQUIRE(f.f0() == Rat(0));
    CHECK(lifts_equal(update_lift(f), f));
}

TEST_CASE("functoriality: U then lift equals lift then U") {
    ChipConfig c = slope2_config(10).add(5);
    CHECK(lifts_equal(lift_from_config(parallel_update(c).first),
                      update_lift(lift_from_config(c))));

    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = trial_rng(41, i);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 63);
        ChipConfig cc = random_preconfined(rng, n);
        REQUIRE(lifts_equal(lift_from_config(parallel_update(cc).first),
                            update_lift(lift_from_config(cc))));
    }
}

TEST_CASE("iterate basics") {
    ExactLift r13 = rigid_rotation(Rat(1, 3));
    CHECK(iterate(r13, Rat(0), 0) == Rat(0));
    CHECK(iterate(r13, Rat(0), 3) == Rat(1));
    CHECK(iterate(r13, Rat(1, 6), 2) == Rat(5, 6));
}

TEST_CASE("compose matches pointwise evaluation") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto rng = trial_rng(43, i);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 24);
        ExactLift f = lift_from_config(random_preconfined(rng, n));
        ExactLift g = lift_from_config(random_preconfined(rng, n));
        ExactLift h = compose(f, g);
        REQUIRE(h.well_formed());
        for (int j = 0; j < 25; ++j) {
            Rat x(static_cast<std::int64_t>(rng() % 500), 250);
            REQUIRE(h(x) == f(g(x)));
        }
    }
}

TEST_CASE("iterate_lift matches repeated evaluation") {
    auto rng = trial_rng(47, 0);
    ExactLift f = lift_from_config(random_preconfined(rng, 12));
    ExactLift h = iterate_lift(f, 3);
    for (int j = 0; j < 40; ++j) {
        Rat x(static_cast<std::int64_t>(rng() % 600), 300);
        REQUIRE(h(x) == f(f(f(x))));
    }
}

TEST_CASE("subadditivity bracket for orbit sums") {
    // a_{s+t} in [a_s + a_t - 1, a_s + a_t + 1]
    for (std::uint64_t i = 0; i < 6; ++i) {
        auto rng = trial_rng(53, i);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 32);
        ExactLift f = lift_from_config(random_preconfined(rng, n));
        std::vector<Rat> a(2049, Rat(0));
        for (int t = 1; t <= 2048; ++t) a[t] = f(a[t - 1]);
        for (int j = 0; j < 60; ++j) {
            int s = 1 + static_cast<int>(rng() % 1024);
            int t = 1 + static_cast<int>(rng() % 1024);
            REQUIRE(a[s] + a[t] - Rat(1) <= a[s + t]);
            REQUIRE(a[s + t] <= a[s] + a[t] + Rat(1));
        }
    }
}

TEST_CASE("float update_lift tracks the exact one") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto rng = trial_rng(89, i);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 24);
        ExactLift f = lift_from_config(random_preconfined(rng, n));
        FloatLift a = update_lift(to_float(f));
        FloatLift b = to_float(update_lift(f));
        for (int j = 0; j <= 64; ++j) {
            double x = j / 64.0;
            REQUIRE(a(x) == doctest::Approx(b(x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("float lift mirrors the exact lift") {
    auto rng = trial_rng(59, 0);
    ExactLift f = lift_from_config(random_preconfined(rng, 20));
    FloatLift g = to_float(f);
    for (int j = 0; j < 50; ++j) {
        double x = static_cast<double>(rng() % 2000) / 1000.0;
        CHECK(g(x) == doctest::Approx(f(Rat::from_double(x)).to_double()).epsilon(1e-12));
    }
}
