#include <doctest.h>

#include <sstream>

#include "fanocone/hodge.hpp"

using namespace fanocone;

TEST_SUITE_BEGIN("hodge");

TEST_CASE("shipped table reproduces the b_4 ledger") {
    const auto result = evaluate_b4_x11(ChiTable::builtin_default());
    CHECK(result.chi_omega1 == -1);
    CHECK(result.chi_omega2 == 2);
    CHECK(result.h13 == 0);
    CHECK(result.h22 == 2);
    CHECK(result.b4 == 2);
    CHECK(!result.trace.empty());
    // the consumed Hodge-rows assumption is recorded
    CHECK(result.trace.front().find("assume") != std::string::npos);
}

TEST_CASE("ledger is linear in its inputs") {
    // replacing chi(Omega_G) = -1 by -2 shifts h13 by one and b4 by two
    auto table = ChiTable::builtin_default();
    table.set("omega1", 0, -2, "perturbed");
    const auto result = evaluate_b4_x11(table);
    CHECK(result.chi_omega1 == -2);
    CHECK(result.h13 == 1);
    CHECK(result.h22 == 2);
    CHECK(result.b4 == 4);

    // doubling every chi doubles the two Euler characteristics
    auto doubled = ChiTable::builtin_default();
    doubled.set("omega1", 0, -2, "doubled");
    doubled.set("omega2", 0, 4, "doubled");
    const auto twice = evaluate_b4_x11(doubled);
    CHECK(twice.chi_omega1 == -2);
    CHECK(twice.chi_omega2 == 4);
}

TEST_CASE("inconsistent tables are rejected") {
    ChiTable zeros;
    for (int m = -3; m <= 0; ++m) zeros.set("omega1", m, 0, "zero");
    for (int m = -2; m <= 0; ++m) zeros.set("omega2", m, 0, "zero");
    zeros.set("ox", -1, 0, "zero");
    zeros.set("ox", -2, 0, "zero");
    CHECK_THROWS_AS(evaluate_b4_x11(zeros), inconsistency_error);
}

TEST_CASE("missing entries abort with the offending key") {
    ChiTable partial;
    partial.set("omega1", 0, -1, "x");
    try {
        evaluate_b4_x11(partial);
        FAIL("expected missing_input_error");
    } catch (const missing_input_error& e) {
        CHECK(std::string(e.what()).find("omega1(-2)") != std::string::npos);
    }
}

TEST_CASE("table parsing") {
    std::istringstream in(
        "# comment line\n"
        "omega1  0 -1 remark value\n"
        "omega1 -1  0 Snow\n"
        "ox -1 0 Kodaira vanishing\n"
        "\n");
    const auto t = ChiTable::load(in);
    CHECK(t.size() == 3);
    CHECK(t.get("omega1", 0).chi == -1);
    CHECK(t.get("omega1", 0).provenance == "remark value");
    CHECK(t.get("ox", -1).provenance == "Kodaira vanishing");

    std::istringstream bad("omega7 0 1 nope\n");
    CHECK_THROWS_AS(ChiTable::load(bad), usage_error);
    std::istringstream bad2("omega1 zero 1\n");
    CHECK_THROWS_AS(ChiTable::load(bad2), usage_error);
}

TEST_SUITE_END();
