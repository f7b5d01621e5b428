#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "chipfire/laws.hpp"
#include "chipfire/sampling.hpp"
#include "chipfire/simulate.hpp"

using namespace chipfire;

namespace {
ChipConfig cfg(std::vector<std::int64_t> h) { return ChipConfig(std::move(h)); }
}

TEST_CASE("slope2 family formula") {
    CHECK(slope2_config(10) == cfg({2, 2, 3, 3, 4, 4, 5, 5, 6, 6}));
    CHECK(slope2_config(4) == cfg({1, 1, 2, 2}));
    // stable: heights within [floor(n/4), floor(n/4) + floor((n-1)/2)]
    for (std::int64_t n : {2, 3, 7, 50, 101}) {
        ChipConfig c = slope2_config(n);
        for (std::int64_t v = 0; v < n; ++v) {
            CHECK(c[v] >= n / 4);
            CHECK(c[v] <= n / 4 + (n - 1) / 2);
            CHECK(c[v] <= n - 1);
        }
    }
}

TEST_CASE("pq construction examples") {
    CHECK(pq_construction(10, 1, 3) == cfg({1, 9, 10, 10, 10, 10, 10, 10, 10, 10}));
    SimulationSummary s = simulate_to_cycle(pq_construction(10, 1, 3));
    CHECK(s.activity == Rat(1, 3));
    CHECK(s.period == 3);

    s = simulate_to_cycle(pq_construction(10, 1, 2));
    CHECK(s.activity == Rat(1, 2));
    CHECK(s.period == 2);
}

TEST_CASE("pq construction rejects bad parameters") {
    CHECK_THROWS_AS(pq_construction(10, 2, 4), InvalidParams);   // not coprime
    CHECK_THROWS_AS(pq_construction(10, 3, 4), InvalidParams);   // p/q > 1/2
    CHECK_THROWS_AS(pq_construction(10, 0, 3), InvalidParams);
    CHECK_THROWS_AS(pq_construction(10, 1, 11), InvalidParams);  // q > n
}

TEST_CASE("every period 1..n is realizable on K_12") {
    std::set<std::uint64_t> periods;
    periods.insert(simulate_to_cycle(cfg(std::vector<std::int64_t>(12, 0))).period);
    for (std::int64_t q = 2; q <= 12; ++q)
        periods.insert(simulate_to_cycle(pq_construction(12, 1, q)).period);
    for (std::uint64_t q = 1; q <= 12; ++q) CHECK(periods.count(q) == 1);
}

TEST_CASE("config_with_activity covers p/q > 1/2 via reflection") {
    SimulationSummary s = simulate_to_cycle(config_with_activity(12, 5, 7));
    CHECK(s.activity == Rat(5, 7));
    CHECK(s.period == 7);
}

TEST_CASE("conjugation examples") {
    ChipConfig c = cfg({3, 1, 2});
    // sigma(1)+j-n = 3+1-3 = 1 for v <= j, sigma(v)+1 beyond; total stays 6
    CHECK(conjugate(c, 1) == cfg({1, 2, 3}));
    CHECK(conjugate(c, 1).total_chips() == c.total_chips());
    CHECK(conjugate(c, 3) == c);  // c^n = id
    CHECK_THROWS_AS(conjugate(cfg({0, 5, 5}), 1), NegativeHeight);
    CHECK_THROWS_AS(conjugate(c, 0), InvalidParams);
    CHECK_THROWS_AS(conjugate(c, 4), InvalidParams);
}

TEST_CASE("reflection examples") {
    CHECK(reflect(cfg(std::vector<std::int64_t>(10, 9))) ==
          cfg(std::vector<std::int64_t>(10, 10)));
    ChipConfig c = slope2_config(8).add(3);
    CHECK(reflect(reflect(c)) == c);
    CHECK_THROWS_AS(reflect(cfg({0, 4})), HeightTooLarge);
}

TEST_CASE("period-2 window on K_50") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto rng = trial_rng(42, i);
        std::uniform_int_distribution<std::int64_t> d(50 * 50 - 50 + 1, 50 * 50 - 1);
        ChipConfig c = [&] {
            std::int64_t total = d(rng);
            return random_composition(rng, 50, total);
        }();
        SimulationSummary s = simulate_to_cycle(c);
        REQUIRE(s.period == 2);
        REQUIRE(s.activity == Rat(1, 2));
    }
}

TEST_CASE("law registry runs and passes") {
    LawParams p;
    p.n_max = 24;
    p.trials = 60;
    p.seed = 7;
    for (const auto& id : law_ids()) {
        LawReport rep = check_law(id, p);
        INFO(id, ": ", rep.counterexample);
        CHECK(rep.pass);
        CHECK(rep.trials_run == 60);
    }
}

TEST_CASE("u2 law engages on heavy configs") {
    LawParams p;
    p.n_max = 24;
    p.trials = 100;
    p.seed = 11;
    LawReport rep = check_law("u2_lemma", p);
    CHECK(rep.pass);
    CHECK(rep.engaged > 10);
}

TEST_CASE("unknown law throws") {
    CHECK_THROWS_AS(check_law("no_such_law", LawParams{}), UnknownLaw);
}

TEST_CASE("law reports are deterministic in the seed") {
    LawParams p;
    p.n_max = 16;
    p.trials = 40;
    p.seed = 99;
    LawReport a = check_law("period_bound", p);
    LawReport b = check_law("period_bound", p);
    CHECK(a.pass == b.pass);
    CHECK(a.engaged == b.engaged);
    CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("family parsing") {
    CHECK(FamilySpec::by_name("slope2").name() == "slope2");
    CHECK(FamilySpec::by_name("constant:3").base_config(5) ==
          cfg(std::vector<std::int64_t>(5, 3)));
    CHECK_THROWS_AS(FamilySpec::by_name("parabola"), InvalidParams);
}
