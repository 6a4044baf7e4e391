#include <doctest.h>

#include <roughset/autopilot.hpp>
#include <roughset/decision_table.hpp>
#include <roughset/rough_set.hpp>

#include "../support/oracle.hpp"

#include <random>
#include <sstream>

using namespace roughset;

namespace {

DataErrorKind parse_error_kind(std::string_view csv, std::optional<std::string> decision = std::nullopt) {
    try {
        (void)parse_table(csv, decision);
    } catch (const DataError& e) {
        return e.kind();
    }
    FAIL("expected a DataError");
    return DataErrorKind::malformed_file;
}

}  // namespace

TEST_CASE("canonicalize_level maps the alias vocabulary") {
    CHECK(canonicalize_level("Medium") == Level::moderate);
    CHECK(canonicalize_level("Moderate") == Level::moderate);
    CHECK(canonicalize_level("Extremely Low") == Level::extremely_low);
    CHECK(canonicalize_level("Extremely low") == Level::extremely_low);
    CHECK(canonicalize_level("Very low") == Level::extremely_low);
    CHECK(canonicalize_level("HIGH") == Level::high);
    CHECK(canonicalize_level("  low \t") == Level::low);
    CHECK_THROWS_AS(canonicalize_level("Banana"), DataError);
    CHECK_THROWS_AS(canonicalize_level(""), DataError);
}

TEST_CASE("canonicalize_level is idempotent through the canonical spelling") {
    for (const char* raw : {"high", "Medium", "moderate", "LOW", "very low", "Extremely Low"}) {
        const Level once = canonicalize_level(raw);
        CHECK(canonicalize_level(to_string(once)) == once);
    }
}

TEST_CASE("canonicalize_decision is case-insensitive and closed") {
    CHECK(canonicalize_decision("Consistent") == Decision::consistent);
    CHECK(canonicalize_decision("INCONSISTENT") == Decision::inconsistent);
    CHECK_THROWS_AS(canonicalize_decision("maybe"), DataError);
}

TEST_CASE("parse_table reads the training table and drops the index column") {
    const DecisionTable t = autopilot::training_fixture();
    CHECK(t.size() == 30);
    CHECK(t.condition_attrs() == std::vector<std::string>{"A", "B", "C", "D", "E"});
    CHECK(t.decision_attr() == "C.F.");
    // row 11 uses "Very low"
    CHECK(t.level(10, 0) == Level::extremely_low);
    CHECK(t.decision(0) == Decision::consistent);
}

TEST_CASE("parse_table error kinds are distinct") {
    CHECK(parse_error_kind("") == DataErrorKind::missing_header);
    CHECK(parse_error_kind("a,b,d\n") == DataErrorKind::empty_body);
    CHECK(parse_error_kind("a,b,d\nhigh,low\n") == DataErrorKind::ragged_row);
    CHECK(parse_error_kind("a,b,d\nhigh,Banana,consistent\n") == DataErrorKind::unknown_level_token);
    CHECK(parse_error_kind("a,b,d\nhigh,low,consistent\n", "zzz") == DataErrorKind::decision_attr_not_found);
    CHECK(parse_error_kind("a,a,d\nhigh,low,consistent\n") == DataErrorKind::duplicate_attribute);
}

TEST_CASE("parse_table honours an explicit decision column and CSV quoting") {
    const auto t = parse_table("\"out\",\"x, y\",z\nconsistent,high,\"Very low\"\n", std::string("out"));
    CHECK(t.decision_attr() == "out");
    CHECK(t.condition_attrs() == std::vector<std::string>{"x, y", "z"});
    CHECK(t.level(0, 1) == Level::extremely_low);
    CHECK(serialize_table(t) == "\"x, y\",z,out\nhigh,extremely_low,consistent\n");
}

TEST_CASE("serialize then parse is the identity on canonical tables") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const DecisionTable t = oracle::random_table(rng, 10, 4, 4);
        if (t.condition_count() == 0) continue;
        const std::string csv = serialize_table(t);
        const DecisionTable back = parse_table(csv);
        CHECK(back == t);
        CHECK(serialize_table(back) == csv);
    }
}

TEST_CASE("validate on the training table") {
    const auto report = validate(autopilot::training_fixture());
    CHECK(report.conflicting_pairs.empty());
    REQUIRE(report.duplicate_pairs.size() == 1);
    CHECK(report.duplicate_pairs[0] == std::pair<RowIndex, RowIndex>{19, 27});
}

TEST_CASE("validate finds a constructed conflict and nothing on one row") {
    const auto two = parse_table("a,d\nhigh,consistent\nhigh,inconsistent\n");
    const auto r2 = validate(two);
    CHECK(r2.conflicting_pairs == std::vector<std::pair<RowIndex, RowIndex>>{{0, 1}});
    CHECK(r2.duplicate_pairs.empty());

    const auto r1 = validate(parse_table("a,d\nhigh,consistent\n"));
    CHECK(r1.conflicting_pairs.empty());
    CHECK(r1.duplicate_pairs.empty());
}

TEST_CASE("validate agrees with dependency degree on random tables") {
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        const DecisionTable t = oracle::random_table(rng);
        const bool conflict_free = validate(t).consistent();
        CHECK(conflict_free == (dependency_degree(t, all_conditions(t)) == Rational(1)));
    }
}

TEST_CASE("column lookup uses names then aliases") {
    const DecisionTable t = autopilot::training_fixture();
    CHECK(t.column("A") == 0);
    CHECK(t.column("Payload IV") == 3);
    CHECK(t.column("Consistency Factor") == t.decision_column());
    CHECK_THROWS_AS((void)t.column("Q"), DataError);
    CHECK_THROWS_AS((void)t.condition_columns({"C.F."}), DataError);
}
