#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "chipfire/io.hpp"

using namespace chipfire;

TEST_CASE("diagram csv round trip preserves the census") {
    PhaseDiagram d = phase_diagram(FamilySpec::by_name("slope2"), 40);
    std::ostringstream os;
    io::write_diagram_csv(os, d);

    std::istringstream is(os.str());
    PhaseDiagram back = io::read_diagram_csv(is);
    REQUIRE(back.rows.size() == d.rows.size());
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        CHECK(back.rows[i].k == d.rows[i].k);
        CHECK(back.rows[i].activity == d.rows[i].activity);
        CHECK(back.rows[i].period == d.rows[i].period);
        CHECK(back.rows[i].transient == d.rows[i].transient);
    }
    Census a = census(d), b = census(back);
    CHECK(a.counts == b.counts);
    CHECK(a.max_denominator == b.max_denominator);
}

TEST_CASE("csv uses LF endings and the exact header") {
    PhaseDiagram d = phase_diagram(FamilySpec::by_name("slope2"), 4);
    std::ostringstream os;
    io::write_diagram_csv(os, d);
    std::string text = os.str();
    CHECK(text.rfind("k,activity_num,activity_den,period,transient\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("heights file parsing") {
    std::istringstream ok("3\n0\n \n7\n");
    ChipConfig c = io::read_heights_file(ok);
    REQUIRE(c.n() == 3);
    CHECK(c[0] == 3);
    CHECK(c[2] == 7);

    std::istringstream bad("3\nx\n");
    CHECK_THROWS_AS(io::read_heights_file(bad), InvalidParams);
    std::istringstream neg("-1\n");
    CHECK_THROWS_AS(io::read_heights_file(neg), NegativeHeight);
    std::istringstream empty("\n\n");
    CHECK_THROWS_AS(io::read_heights_file(empty), InvalidParams);
}

TEST_CASE("decimal parsing is exact") {
    CHECK(io::parse_decimal_or_fraction("0.25") == Rat(1, 4));
    CHECK(io::parse_decimal_or_fraction("0.3") == Rat(3, 10));
    CHECK(io::parse_decimal_or_fraction("1") == Rat(1));
    CHECK(io::parse_decimal_or_fraction("2/3") == Rat(2, 3));
    CHECK(io::parse_decimal_or_fraction(" 0.125 ") == Rat(1, 8));
    CHECK_THROWS_AS(io::parse_decimal_or_fraction("abc"), std::exception);
}

TEST_CASE("cdf table parsing") {
    std::istringstream ok("x,F\n0,0\n0.25,0\n0.75,1\n1,1\n");
    CdfSpec F = io::read_cdf_table(ok);
    CHECK(F.kind == CdfSpec::Kind::Table);
    REQUIRE(F.table.size() == 4);
    CHECK(F.table[1].first == Rat(1, 4));

    std::istringstream bad("0,0\n0.5,0.2\n");  // missing (1,1)
    CHECK_THROWS_AS(io::read_cdf_table(bad), InvalidCdf);
}

TEST_CASE("staircase csv leaves uncertified snaps empty") {
    std::vector<StaircasePoint> pts(2);
    pts[0].y = 0;
    pts[0].rot.lower = -0.1;
    pts[0].rot.upper = 0.1;
    pts[0].rot.snapped = Rat(0);
    pts[1].y = 0.5;
    pts[1].rot.lower = 0.4;
    pts[1].rot.upper = 0.6;
    std::ostringstream os;
    io::write_staircase_csv(os, pts);
    std::string text = os.str();
    CHECK(text.find("y,rot_lower,rot_upper,snapped_num,snapped_den\n") == 0);
    CHECK(text.find("0,1\n") != std::string::npos);   // snapped 0/1
    CHECK(text.find(",,") != std::string::npos);      // empty snap columns
}

TEST_CASE("summary json shape") {
    ChipConfig c = slope2_config(10).add(7);
    SimulationSummary s = simulate_to_cycle(c);
    std::string j = io::summary_json(c, 7, s, false);
    CHECK(j.find("\"activity\": \"2/3\"") != std::string::npos);
    CHECK(j.find("\"period\": 3") != std::string::npos);
    CHECK(j.find("alpha_trace") == std::string::npos);
}
