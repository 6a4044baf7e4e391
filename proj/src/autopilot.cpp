#include <roughset/autopilot.hpp>

#include "autopilot_data.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace roughset::autopilot {

std::string_view payload_numeral(Payload id) noexcept {
    static constexpr std::array<std::string_view, 5> names{"I", "II", "III", "IV", "V"};
    return names[static_cast<std::size_t>(id)];
}

std::string_view payload_name(Payload id) noexcept {
    static constexpr std::array<std::string_view, 5> names{"Payload I", "Payload II", "Payload III",
                                                           "Payload IV", "Payload V"};
    return names[static_cast<std::size_t>(id)];
}

std::string_view training_column(Payload id) noexcept {
    static constexpr std::array<std::string_view, 5> names{"A", "B", "C", "D", "E"};
    return names[static_cast<std::size_t>(id)];
}

std::size_t payload_arity(Payload id) noexcept {
    return id == Payload::IV || id == Payload::V ? 4 : 3;
}

namespace {

std::string lower_trimmed(std::string_view raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out(raw.substr(b, e - b));
    for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

bool parse_flag(std::string_view raw, std::string_view context) {
    const std::string t = lower_trimmed(raw);
    if (t == "yes" || t == "true" || t == "1") return true;
    if (t == "no" || t == "false" || t == "0") return false;
    throw DataError(DataErrorKind::invalid_argument,
                    "'" + std::string(raw) + "' is not yes/no (" + std::string(context) + ")");
}

std::string_view embedded_csv(Payload id) {
    switch (id) {
    case Payload::I: return data::kPayloadTable1;
    case Payload::II: return data::kPayloadTable2;
    case Payload::III: return data::kPayloadTable3;
    case Payload::IV: return data::kPayloadTable4;
    case Payload::V: return data::kPayloadTable5;
    }
    return {};
}

// Offsets of each payload's inputs within the 17-entry fault vector.
constexpr std::array<std::size_t, 6> kPayloadOffsets{0, 3, 6, 9, 13, 17};

}  // namespace

PayloadTable parse_payload_table(Payload id, std::string_view csv) {
    std::istringstream in{std::string(csv)};
    const auto records = read_csv(in);
    const std::size_t arity = payload_arity(id);
    const std::string label = "payload " + std::string(payload_numeral(id));
    if (records.empty()) throw DataError(DataErrorKind::missing_header, label + " table has no header");
    if (records.front().size() != arity + 1)
        throw DataError(DataErrorKind::ragged_row, label + " header needs " + std::to_string(arity + 1) +
                                                       " columns");

    PayloadTable table;
    table.id = id;
    table.headings.assign(records.front().begin(), records.front().end() - 1);
    table.output_heading = records.front().back();

    std::set<std::vector<bool>> seen;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() != arity + 1)
            throw DataError(DataErrorKind::ragged_row, label + " row " + std::to_string(r));
        std::vector<bool> inputs;
        for (std::size_t i = 0; i < arity; ++i)
            inputs.push_back(parse_flag(rec[i], label + " row " + std::to_string(r)));
        if (!seen.insert(inputs).second)
            throw DataError(DataErrorKind::malformed_file,
                            label + " row " + std::to_string(r) + " repeats an input tuple");
        table.entries.emplace_back(std::move(inputs), canonicalize_level(rec.back()));
    }
    if (table.entries.size() != (std::size_t{1} << arity))
        throw DataError(DataErrorKind::malformed_file,
                        label + " table has " + std::to_string(table.entries.size()) +
                            " rows, expected " + std::to_string(std::size_t{1} << arity));
    return table;
}

const PayloadTable& payload_table(Payload id) {
    static const std::array<PayloadTable, 5> tables{
        parse_payload_table(Payload::I, embedded_csv(Payload::I)),
        parse_payload_table(Payload::II, embedded_csv(Payload::II)),
        parse_payload_table(Payload::III, embedded_csv(Payload::III)),
        parse_payload_table(Payload::IV, embedded_csv(Payload::IV)),
        parse_payload_table(Payload::V, embedded_csv(Payload::V)),
    };
    return tables[static_cast<std::size_t>(id)];
}

Level payload_level(Payload id, std::span<const bool> inputs) {
    if (inputs.size() != payload_arity(id))
        throw DataError(DataErrorKind::invalid_argument,
                        "payload " + std::string(payload_numeral(id)) + " takes " +
                            std::to_string(payload_arity(id)) + " inputs, got " +
                            std::to_string(inputs.size()));
    for (const auto& [tuple, level] : payload_table(id).entries)
        if (std::equal(tuple.begin(), tuple.end(), inputs.begin(), inputs.end())) return level;
    // Unreachable: parse_payload_table guarantees totality.
    throw DataError(DataErrorKind::malformed_file, "payload table is not total");
}

const std::array<std::string_view, FaultVector::kSize> FaultVector::kNames{
    "roll_inconsistency",     "pitch_inconsistency",   "yaw_inconsistency",
    "altitude_inconsistency", "longitude_inconsistency", "latitude_inconsistency",
    "dme_fault",              "vor_fault",             "irs_fault",
    "gyroscope_failure",      "accelerometer_failure", "altimeter_failure",
    "compass_failure",        "route_change",          "flaps_failure",
    "fuel_inconsistency",     "inflight_icing",
};

std::span<const bool> FaultVector::inputs(Payload id) const {
    const auto p = static_cast<std::size_t>(id);
    return std::span<const bool>(values).subspan(kPayloadOffsets[p],
                                                 kPayloadOffsets[p + 1] - kPayloadOffsets[p]);
}

FaultVector FaultVector::all(bool value) {
    FaultVector f;
    f.values.fill(value);
    return f;
}

FaultVector parse_fault_list(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != FaultVector::kSize)
        throw DataError(DataErrorKind::invalid_argument,
                        "expected 17 comma-separated yes/no values, got " + std::to_string(parts.size()));
    FaultVector f;
    for (std::size_t i = 0; i < parts.size(); ++i)
        f.values[i] = parse_flag(parts[i], FaultVector::kNames[i]);
    return f;
}

FaultVector parse_fault_file(std::string_view text) {
    FaultVector f;
    std::array<bool, FaultVector::kSize> assigned{};
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (lower_trimmed(line).empty()) continue;
        const auto eq = line.find('=');
        const std::string where = "fault file line " + std::to_string(line_no);
        if (eq == std::string::npos)
            throw DataError(DataErrorKind::malformed_file, where + ": expected name=value");
        const std::string key = lower_trimmed(line.substr(0, eq));
        const auto it = std::find(FaultVector::kNames.begin(), FaultVector::kNames.end(), key);
        if (it == FaultVector::kNames.end())
            throw DataError(DataErrorKind::malformed_file, where + ": unknown fault '" + key + "'");
        const auto idx = static_cast<std::size_t>(it - FaultVector::kNames.begin());
        if (assigned[idx])
            throw DataError(DataErrorKind::malformed_file, where + ": '" + key + "' given twice");
        assigned[idx] = true;
        f.values[idx] = parse_flag(line.substr(eq + 1), where);
    }
    for (std::size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i])
            throw DataError(DataErrorKind::malformed_file,
                            "fault file is missing '" + std::string(FaultVector::kNames[i]) + "'");
    return f;
}

Object level_object(const LevelQuintuple& levels) {
    Object obj;
    for (Payload p : kAllPayloads) {
        const Level l = levels[static_cast<std::size_t>(p)];
        obj.emplace(std::string(training_column(p)), l);
        obj.emplace(std::string(payload_name(p)), l);
    }
    return obj;
}

PipelineResult classify_levels(const LevelQuintuple& levels, const RuleSet& rules) {
    return {levels, classify(rules, level_object(levels))};
}

PipelineResult full_pipeline(const FaultVector& faults, const RuleSet& rules) {
    LevelQuintuple levels{};
    for (Payload p : kAllPayloads)
        levels[static_cast<std::size_t>(p)] = payload_level(p, faults.inputs(p));
    return classify_levels(levels, rules);
}

std::map<std::string, std::string> case_study_aliases() {
    std::map<std::string, std::string> aliases;
    for (Payload p : kAllPayloads)
        aliases.emplace(std::string(payload_name(p)), std::string(training_column(p)));
    aliases.emplace("Consistency Factor", "C.F.");
    return aliases;
}

DecisionTable with_case_study_aliases(const DecisionTable& table) {
    const std::vector<std::string> columns{"A", "B", "C", "D", "E"};
    if (table.condition_attrs() != columns || table.decision_attr() != "C.F.") return table;
    return table.with_aliases(case_study_aliases());
}

DecisionTable training_fixture() {
    static const DecisionTable table =
        with_case_study_aliases(parse_table(data::kTrainingTable));
    return table;
}

RuleSet paper_rules() {
    static const RuleSet rules = annotate(training_fixture(), parse_rule_file(data::kPaperRules));
    return rules;
}

RuleSet induced_rules() {
    static const RuleSet rules = induce_rules(training_fixture());
    return rules;
}

std::vector<std::pair<std::string, std::string_view>> fixture_files() {
    return {
        {"fixtures/table_1.csv", data::kPayloadTable1},
        {"fixtures/table_2.csv", data::kPayloadTable2},
        {"fixtures/table_3.csv", data::kPayloadTable3},
        {"fixtures/table_4.csv", data::kPayloadTable4},
        {"fixtures/table_5.csv", data::kPayloadTable5},
        {"fixtures/table_6.csv", data::kTrainingTable},
        {"rules/paper_sec4g.json", data::kPaperRules},
    };
}

}  // namespace roughset::autopilot
