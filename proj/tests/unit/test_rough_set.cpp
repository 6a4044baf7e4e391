#include <doctest.h>

#include <roughset/autopilot.hpp>
#include <roughset/rough_set.hpp>

#include "../support/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace roughset;

namespace {

const RowSet kConsistentRows = [] {
    RowSet rows;
    for (RowIndex r : {1, 3, 4, 5, 8, 9, 10, 12, 13, 15, 21, 22, 24, 26, 29}) rows.push_back(r - 1);
    return rows;
}();

const DecisionTable& table6() {
    static const DecisionTable t = autopilot::training_fixture();
    return t;
}

}  // namespace

TEST_CASE("partition on no attributes is a single block") {
    const Partition p = partition(table6(), AttributeSet{});
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0] == universe(table6()));
}

TEST_CASE("partition on A groups by level") {
    const Partition p = partition(table6(), AttributeSet{0});
    std::map<Level, std::size_t> sizes;
    for (const auto& b : p.blocks) sizes[table6().level(b.front(), 0)] = b.size();
    CHECK(sizes == std::map<Level, std::size_t>{{Level::high, 21},
                                                {Level::moderate, 3},
                                                {Level::low, 3},
                                                {Level::extremely_low, 3}});
    // blocks ordered by least member
    for (std::size_t i = 1; i < p.blocks.size(); ++i) CHECK(p.blocks[i - 1].front() < p.blocks[i].front());
}

TEST_CASE("partition on all conditions has 29 blocks, rows 20 and 28 together") {
    const Partition p = partition(table6(), all_conditions(table6()));
    CHECK(p.blocks.size() == 29);
    const auto shared = std::find_if(p.blocks.begin(), p.blocks.end(), [](const RowSet& b) { return b.size() > 1; });
    REQUIRE(shared != p.blocks.end());
    CHECK(*shared == RowSet{19, 27});
}

TEST_CASE("partition rejects unknown columns") {
    CHECK_THROWS_AS(partition(table6(), AttributeSet{9}), DataError);
    CHECK_NOTHROW(partition(table6(), AttributeSet{table6().decision_column()}));
}

TEST_CASE("approximations of trivial targets") {
    const AttributeSet attrs{0, 2};
    CHECK(lower_approximation(table6(), attrs, {}).empty());
    CHECK(upper_approximation(table6(), attrs, {}).empty());
    CHECK(lower_approximation(table6(), attrs, universe(table6())) == universe(table6()));
    CHECK(approximate(table6(), attrs, universe(table6())).accuracy == Rational(1));
    CHECK_THROWS_AS(lower_approximation(table6(), attrs, {30}), DataError);
}

TEST_CASE("consistent class of the training table is crisp") {
    const auto attrs = all_conditions(table6());
    CHECK(table6().rows_with(Decision::consistent) == kConsistentRows);
    CHECK(lower_approximation(table6(), attrs, kConsistentRows) == kConsistentRows);
    CHECK(upper_approximation(table6(), attrs, kConsistentRows) == kConsistentRows);
    const auto rep = approximate(table6(), attrs, kConsistentRows);
    CHECK(rep.boundary.empty());
    CHECK(rep.is_crisp);
    CHECK(rep.accuracy == Rational(1));
}

TEST_CASE("conflicting pair makes the target rough") {
    const auto t = parse_table("a,d\nhigh,consistent\nhigh,inconsistent\n");
    const auto rep = approximate(t, all_conditions(t), RowSet{0});
    CHECK(rep.lower.empty());
    CHECK(rep.upper == RowSet{0, 1});
    CHECK(rep.boundary == RowSet{0, 1});
    CHECK(rep.accuracy == Rational(0));
    CHECK_FALSE(rep.is_crisp);
}

TEST_CASE("positive region and dependency degree") {
    CHECK(positive_region(table6(), all_conditions(table6())) == universe(table6()));
    CHECK(dependency_degree(table6(), all_conditions(table6())) == Rational(1));
    CHECK(positive_region(table6(), AttributeSet{}).empty());
    CHECK(dependency_degree(table6(), AttributeSet{}) == Rational(0));

    const auto one = parse_table("a,d\nlow,inconsistent\n");
    CHECK(positive_region(one, AttributeSet{}) == RowSet{0});

    // U/{A}: the high block (21 rows) mixes decisions, the other three blocks
    // of 3 rows are all inconsistent.
    CHECK(dependency_degree(table6(), AttributeSet{0}) == Rational(9, 30));
    CHECK_THROWS_AS(dependency_degree(table6(), AttributeSet{table6().decision_column()}), DataError);
}

TEST_CASE("reducts of constructed tables") {
    SUBCASE("decision copies one attribute") {
        const auto t = parse_table(
            "a,b,c,d\n"
            "high,low,high,consistent\n"
            "low,low,high,inconsistent\n"
            "high,high,low,consistent\n"
            "low,high,high,inconsistent\n"
            "high,low,low,consistent\n");
        const auto rep = find_reducts(t);
        CHECK(rep.reducts == std::vector<AttributeSet>{{0}});
        CHECK(rep.core == AttributeSet{0});
        CHECK(rep.baseline_gamma == Rational(1));
    }
    SUBCASE("single attribute") {
        const auto t = parse_table("a,d\nhigh,consistent\nlow,inconsistent\n");
        const auto rep = find_reducts(t);
        CHECK(rep.reducts == std::vector<AttributeSet>{{0}});
        CHECK(rep.core == AttributeSet{0});
    }
    SUBCASE("two interchangeable attributes leave an empty core") {
        const auto t = parse_table("a,b,d\nhigh,high,consistent\nlow,low,inconsistent\n");
        const auto rep = find_reducts(t);
        CHECK(rep.reducts == std::vector<AttributeSet>{{0}, {1}});
        CHECK(rep.core.empty());
    }
}

TEST_CASE("reducts of the training table match subset enumeration") {
    const auto rep = find_reducts(table6());
    CHECK(rep.reducts == oracle::reducts(table6()));
    // Every attribute is needed: dropping any one loses a row from the positive region.
    CHECK(rep.reducts == std::vector<AttributeSet>{{0, 1, 2, 3, 4}});
    CHECK(rep.core == AttributeSet{0, 1, 2, 3, 4});
}

TEST_CASE("find_reducts refuses more than 20 attributes") {
    std::vector<std::string> names;
    for (int i = 0; i < 21; ++i) names.push_back("x" + std::to_string(i));
    const DecisionTable wide(names, "d", {std::vector<Level>(21, Level::high)}, {Decision::consistent});
    try {
        (void)find_reducts(wide);
        FAIL("expected bound error");
    } catch (const DataError& e) {
        CHECK(e.kind() == DataErrorKind::attribute_bound_exceeded);
    }
}

TEST_CASE("significance") {
    SUBCASE("training table, frozen from exhaustive dependency computation") {
        CHECK(significance(table6(), 0) == Rational(7, 30));
        CHECK(significance(table6(), 1) == Rational(2, 15));
        CHECK(significance(table6(), 2) == Rational(1, 6));
        CHECK(significance(table6(), 3) == Rational(1, 15));
        CHECK(significance(table6(), 4) == Rational(7, 30));
    }
    SUBCASE("dispensable attribute scores zero") {
        const auto t = parse_table("a,b,d\nhigh,low,consistent\nlow,low,inconsistent\n");
        CHECK(significance(t, 1) == Rational(0));
    }
    SUBCASE("sole informative attribute scores 1 - gamma(empty)") {
        const auto t = parse_table("a,b,d\nhigh,low,consistent\nlow,low,inconsistent\nhigh,low,consistent\n");
        CHECK(significance(t, 0) == Rational(1) - dependency_degree(t, AttributeSet{}));
    }
    CHECK_THROWS_AS(significance(table6(), 5), DataError);
}

TEST_CASE("approximation laws hold on random tables") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 400; ++i) {
        const DecisionTable t = oracle::random_table(rng);
        const RowSet x = oracle::random_rows(rng, t.size());
        const AttributeSet big = oracle::random_columns(rng, t.condition_count());
        AttributeSet small;
        for (std::size_t a : big)
            if (rng() % 2) small.push_back(a);

        const RowSet lo = lower_approximation(t, big, x);
        const RowSet up = upper_approximation(t, big, x);
        CHECK(rowset::is_subset(lo, x));
        CHECK(rowset::is_subset(x, up));
        // complement duality
        CHECK(up == rowset::subtract(universe(t), lower_approximation(t, big, rowset::subtract(universe(t), x))));
        // monotonicity in the attribute set
        CHECK(rowset::is_subset(lower_approximation(t, small, x), lo));
        CHECK(rowset::is_subset(up, upper_approximation(t, small, x)));
        CHECK(dependency_degree(t, small) <= dependency_degree(t, big));
    }
}

TEST_CASE("reduct minimality and core on random tables up to six attributes") {
    std::mt19937 rng(99);
    for (int i = 0; i < 150; ++i) {
        const DecisionTable t = oracle::random_table(rng, 10, 6, 3);
        const auto rep = find_reducts(t);
        CHECK(rep.reducts == oracle::reducts(t));
        AttributeSet core = rep.reducts.front();
        for (const auto& r : rep.reducts) {
            AttributeSet next;
            std::set_intersection(core.begin(), core.end(), r.begin(), r.end(), std::back_inserter(next));
            core = next;
        }
        CHECK(rep.core == core);
        for (std::size_t k = 1; k < rep.reducts.size(); ++k)
            CHECK(rep.reducts[k - 1].size() <= rep.reducts[k].size());
    }
}

TEST_CASE("approximations match the definition oracle on random tables") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        const DecisionTable t = oracle::random_table(rng);
        const AttributeSet attrs = oracle::random_columns(rng, t.condition_count());
        const RowSet x = oracle::random_rows(rng, t.size());
        CHECK(lower_approximation(t, attrs, x) == oracle::lower(t, attrs, x));
        CHECK(upper_approximation(t, attrs, x) == oracle::upper(t, attrs, x));
        CHECK(approximate(t, attrs, x).boundary == oracle::boundary(t, attrs, x));
        CHECK(positive_region(t, attrs) == oracle::positive(t, attrs));
        const auto [num, den] = oracle::gamma(t, attrs);
        CHECK(dependency_degree(t, attrs) ==
              Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)));
    }
}
