#include "doctest.h"

#include "delpezzo/alpha.hpp"
#include "delpezzo/fixtures.hpp"
#include "delpezzo/poly_parse.hpp"

#include <set>

using namespace delpezzo;

TEST_CASE("fixture records parse with mandatory provenance tags") {
    std::string text = "name = \"demo\"\n"
                       "kind = \"profile\"\n"
                       "degree = 3\n"
                       "flags = \"eckardt\"\n"
                       "expect alpha = \"2/3\" @ table\n"
                       "expect row = \"degree 3, Eckardt\" @ table\n";
    FixtureRecord rec = parse_fixture(text, "");
    CHECK(rec.name == "demo");
    CHECK(rec.kind == "profile");
    CHECK(rec.payload.at("degree") == "3");
    REQUIRE(rec.expectations.size() == 2);
    CHECK(rec.expectations[0].key == "alpha");
    CHECK(rec.expectations[0].value == "2/3");
    CHECK(rec.expectations[0].provenance == "table");
}

TEST_CASE("the loader refuses untagged or mistagged expectations") {
    std::string base = "name = \"x\"\nkind = \"profile\"\ndegree = 9\n";
    CHECK_THROWS_AS(parse_fixture(base + "expect alpha = \"1/3\"\n", ""), parse_error);
    CHECK_THROWS_AS(parse_fixture(base + "expect alpha = \"1/3\" @ guess\n", ""), parse_error);
    CHECK_THROWS_AS(parse_fixture(base + "expect alpha = \"1/3\" @ oracle:\n", ""), parse_error);
    CHECK_NOTHROW(parse_fixture(base + "expect alpha = \"1/3\" @ oracle:by-hand\n", ""));
    // records without any expectation are refused outright
    CHECK_THROWS_AS(parse_fixture(base, ""), parse_error);
    CHECK_THROWS_AS(parse_fixture("kind = \"profile\"\nexpect a = \"1\" @ direct\n", ""),
                    parse_error);
    CHECK_THROWS_AS(parse_fixture("name = \"x\"\nexpect a = \"1\" @ direct\n", ""), parse_error);
}

TEST_CASE("running a synthetic profile fixture") {
    std::string text = "name = \"demo\"\n"
                       "kind = \"profile\"\n"
                       "degree = 3\n"
                       "flags = \"eckardt\"\n"
                       "expect alpha = \"2/3\" @ table\n"
                       "expect nonsense = \"42\" @ direct\n";
    FixtureReport report = run_fixture(parse_fixture(text, ""));
    CHECK(report.error.empty());
    REQUIRE(report.checks.size() == 2);
    CHECK(report.checks[0].pass);
    CHECK_FALSE(report.checks[1].pass);
    CHECK(report.checks[1].actual == "(no such result)");
    CHECK_FALSE(report.pass);
}

TEST_CASE("fixtures with broken payloads report the error instead of throwing") {
    std::string text = "name = \"demo\"\n"
                       "kind = \"profile\"\n"
                       "degree = 3\n"
                       "flags = \"no_such_flag\"\n"
                       "expect alpha = \"2/3\" @ table\n";
    FixtureReport report = run_fixture(parse_fixture(text, "")); // no throw
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.error.empty());

    std::string unknown = "name = \"demo\"\nkind = \"martian\"\n"
                          "expect a = \"1\" @ direct\n";
    FixtureReport r2 = run_fixture(parse_fixture(unknown, ""));
    CHECK_FALSE(r2.pass);
    CHECK(r2.error.find("martian") != std::string::npos);
}

TEST_CASE("the shipped corpus verifies end to end") {
    std::vector<FixtureReport> reports = verify_all(FIXTURE_DIR);
    CHECK(reports.size() >= 40);
    for (const auto& report : reports) {
        CAPTURE(report.name);
        CAPTURE(report.error);
        for (const auto& check : report.checks) {
            CAPTURE(check.key);
            CAPTURE(check.expected);
            CAPTURE(check.actual);
            CHECK(check.pass);
        }
        CHECK(report.error.empty());
        CHECK(report.pass);
    }
}

TEST_CASE("the corpus covers every alpha table row") {
    std::set<std::string> seen;
    for (const auto& report : verify_all(FIXTURE_DIR)) {
        auto it = report.results.find("row");
        if (it != report.results.end()) seen.insert(it->second);
    }
    for (const auto& row : all_alpha_rows()) {
        CAPTURE(row);
        CHECK(seen.count(row) == 1);
    }
}
