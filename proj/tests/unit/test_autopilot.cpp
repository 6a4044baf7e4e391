#include <doctest.h>

#include <roughset/autopilot.hpp>

#include <array>
#include <fstream>
#include <sstream>

using namespace roughset;
using namespace roughset::autopilot;

namespace {

using L = Level;

// Output column of each payload table, top to bottom, copied by hand.
const std::vector<Level> kThreeInput{L::high, L::moderate, L::moderate, L::low,
                                     L::moderate, L::moderate, L::low, L::extremely_low};
const std::vector<Level> kFourInput{L::high, L::moderate, L::moderate, L::low,
                                    L::moderate, L::low, L::low, L::extremely_low,
                                    L::moderate, L::low, L::low, L::extremely_low,
                                    L::low, L::extremely_low, L::extremely_low, L::extremely_low};

// Row i of a k-input table: Yes/No counting down from all-Yes.
std::vector<bool> tuple(std::size_t i, std::size_t k) {
    std::vector<bool> out(k);
    for (std::size_t b = 0; b < k; ++b) out[b] = ((i >> (k - 1 - b)) & 1u) == 0;
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("payload tables match the transcription") {
    std::size_t checked = 0;
    for (Payload p : kAllPayloads) {
        const std::size_t k = payload_arity(p);
        const auto& expected = k == 3 ? kThreeInput : kFourInput;
        const auto& table = payload_table(p);
        REQUIRE(table.entries.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(table.entries[i].first == tuple(i, k));
            CHECK(table.entries[i].second == expected[i]);
            std::array<bool, 4> buf{};
            for (std::size_t b = 0; b < k; ++b) buf[b] = tuple(i, k)[b];
            CHECK(payload_level(p, std::span<const bool>(buf.data(), k)) == expected[i]);
            ++checked;
        }
    }
    CHECK(checked == 56);
}

TEST_CASE("payload tables share structure") {
    for (Payload p : {Payload::II, Payload::III})
        for (std::size_t i = 0; i < 8; ++i)
            CHECK(payload_table(p).entries[i] == payload_table(Payload::I).entries[i]);
    CHECK(payload_table(Payload::IV).entries == payload_table(Payload::V).entries);
}

TEST_CASE("payload spot checks") {
    const std::array<bool, 3> roll_pitch_yaw{false, true, false};
    CHECK(payload_level(Payload::I, roll_pitch_yaw) == Level::moderate);
    const std::array<bool, 4> gyro_only{true, false, false, false};
    CHECK(payload_level(Payload::IV, gyro_only) == Level::extremely_low);
    CHECK_THROWS_AS(payload_level(Payload::IV, roll_pitch_yaw), DataError);
}

TEST_CASE("parse_payload_table rejects partial tables") {
    CHECK_THROWS_AS(parse_payload_table(Payload::I, "a,b,c,out\nYes,Yes,Yes,High\n"), DataError);
    CHECK_THROWS_AS(parse_payload_table(Payload::I, "a,b,c,out\nYes,Yes,Maybe,High\n"), DataError);
}

TEST_CASE("embedded fixtures equal the shipped files") {
    const auto files = fixture_files();
    CHECK(files.size() == 7);
    for (const auto& [rel, contents] : files) {
        CAPTURE(rel);
        CHECK(slurp(std::string(ROUGHSET_TEST_SOURCE_DIR) + "/" + rel) == contents);
    }
}

TEST_CASE("training fixture") {
    const DecisionTable t = training_fixture();
    CHECK(t.size() == 30);
    CHECK(t.condition_count() == 5);
    CHECK(t.rows_with(Decision::consistent).size() == 15);
    CHECK(t.rows_with(Decision::inconsistent).size() == 15);
    const std::vector<Level> row14{L::high, L::low, L::high, L::extremely_low, L::extremely_low};
    CHECK(std::vector<Level>(t.conditions(13).begin(), t.conditions(13).end()) == row14);
    CHECK(t.decision(13) == Decision::inconsistent);
    CHECK(t.level(10, 0) == Level::extremely_low);  // printed as "Very low"
    CHECK(t.find_column("Payload III") == t.find_column("C"));
    CHECK(t.find_column("Consistency Factor") == t.decision_column());
}

TEST_CASE("fault parsing") {
    const auto f = parse_fault_list("yes,no,YES,1,0,true,false,no,no,no,no,no,no,no,no,no,Yes");
    CHECK(f.values[0]);
    CHECK_FALSE(f.values[1]);
    CHECK(f.values[3]);
    CHECK(f.values[5]);
    CHECK(f.values[16]);
    CHECK(f.inputs(Payload::I).size() == 3);
    CHECK(f.inputs(Payload::V).size() == 4);
    CHECK(f.inputs(Payload::V)[3]);
    CHECK_THROWS_AS(parse_fault_list("yes,no"), DataError);
    CHECK_THROWS_AS(parse_fault_list("yes,no,perhaps,no,no,no,no,no,no,no,no,no,no,no,no,no,no"), DataError);

    std::string file = "# all clear except the gyro\n";
    for (auto name : FaultVector::kNames)
        file += std::string(name) + " = " + (name == "gyroscope_failure" ? "yes" : "no") + "\n";
    const auto g = parse_fault_file(file);
    for (std::size_t i = 0; i < FaultVector::kSize; ++i) CHECK(g.values[i] == (FaultVector::kNames[i] == "gyroscope_failure"));

    CHECK_THROWS_AS(parse_fault_file("roll_inconsistency=yes\n"), DataError);
    CHECK_THROWS_AS(parse_fault_file(file + "roll_inconsistency=no\n"), DataError);
    CHECK_THROWS_AS(parse_fault_file(file + "bogus=no\n"), DataError);
}

TEST_CASE("full pipeline") {
    for (const RuleSet& rules : {paper_rules(), induced_rules()}) {
        CAPTURE(rules.source == RuleSource::file);

        const auto all_yes = full_pipeline(FaultVector::all(true), rules);
        CHECK(all_yes.levels == LevelQuintuple{L::high, L::high, L::high, L::high, L::high});
        CHECK(all_yes.verdict.decision == Outcome::consistent);
        CHECK_FALSE(all_yes.verdict.override_alert);

        const auto all_no = full_pipeline(FaultVector::all(false), rules);
        CHECK(all_no.levels == LevelQuintuple{L::extremely_low, L::extremely_low, L::extremely_low,
                                              L::extremely_low, L::extremely_low});
        CHECK(all_no.verdict.decision == Outcome::inconsistent);
        CHECK(all_no.verdict.override_alert);

        FaultVector f = FaultVector::all(true);
        f.values[0] = false;  // roll consistent, pitch and yaw not
        const auto mixed = full_pipeline(f, rules);
        CHECK(mixed.levels[0] == Level::moderate);
        CHECK(mixed.verdict.decision == Outcome::inconsistent);
        CHECK(mixed.verdict.override_alert);
    }
    const auto paper = full_pipeline(
        [] {
            FaultVector f = FaultVector::all(true);
            f.values[0] = false;
            return f;
        }(),
        paper_rules());
    CHECK(paper.verdict.matched_rules == std::vector<std::size_t>{6});
}

TEST_CASE("level objects answer to both vocabularies") {
    const auto obj = level_object({L::high, L::moderate, L::low, L::extremely_low, L::high});
    CHECK(obj.at("A") == L::high);
    CHECK(obj.at("Payload II") == L::moderate);
    CHECK(obj.at("D") == L::extremely_low);
    CHECK(obj.size() == 10);
}
