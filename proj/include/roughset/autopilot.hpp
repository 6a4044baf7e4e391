#pragma once

#include <roughset/decision_table.hpp>
#include <roughset/rules.hpp>

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roughset::autopilot {

/// The five functional groups of autopilot fault factors.
enum class Payload : std::uint8_t { I, II, III, IV, V };

inline constexpr std::array<Payload, 5> kAllPayloads{Payload::I, Payload::II, Payload::III,
                                                     Payload::IV, Payload::V};

std::string_view payload_numeral(Payload id) noexcept;          // "I" .. "V"
std::string_view payload_name(Payload id) noexcept;             // "Payload I"
std::string_view training_column(Payload id) noexcept;          // "A" .. "E"
std::size_t payload_arity(Payload id) noexcept;                 // 3,3,3,4,4

/// Boolean-input lookup table for one payload, rows in source order.
struct PayloadTable {
    Payload id = Payload::I;
    std::vector<std::string> headings;  // input column headings as printed
    std::string output_heading;
    std::vector<std::pair<std::vector<bool>, Level>> entries;
};

/// Parses a payload table from CSV (Yes/No inputs, one level column) and
/// checks that it is total over all 2^k input tuples.
PayloadTable parse_payload_table(Payload id, std::string_view csv);

/// Embedded table for `id`.
const PayloadTable& payload_table(Payload id);

/// Exact lookup; throws DataError(invalid_argument) on an arity mismatch.
Level payload_level(Payload id, std::span<const bool> inputs);

/// Seventeen named fault indicators, grouped by payload in order.
struct FaultVector {
    static constexpr std::size_t kSize = 17;
    static const std::array<std::string_view, kSize> kNames;

    std::array<bool, kSize> values{};

    /// Inputs belonging to one payload, in table column order.
    [[nodiscard]] std::span<const bool> inputs(Payload id) const;
    static FaultVector all(bool value);
};

/// "yes,no,..." with exactly 17 entries (yes/no/true/false/1/0, any case).
FaultVector parse_fault_list(std::string_view text);
/// Lines of name=yes|no; every name exactly once; '#' starts a comment.
FaultVector parse_fault_file(std::string_view text);

using LevelQuintuple = std::array<Level, 5>;

struct PipelineResult {
    LevelQuintuple levels{};
    Verdict verdict;
};

/// Object keyed by both the training-table columns ("A".."E") and the
/// payload names ("Payload I".."Payload V"), so either rule vocabulary fires.
Object level_object(const LevelQuintuple& levels);

PipelineResult classify_levels(const LevelQuintuple& levels, const RuleSet& rules);

/// Five payload lookups, then rule classification of the resulting levels.
PipelineResult full_pipeline(const FaultVector& faults, const RuleSet& rules);

/// Rule-file names for the training-table columns: "Payload I" -> "A", ...,
/// "Consistency Factor" -> "C.F.".
std::map<std::string, std::string> case_study_aliases();

/// Attaches case_study_aliases() when the table has exactly the condition
/// columns A..E and decision C.F.; otherwise returns the table unchanged.
DecisionTable with_case_study_aliases(const DecisionTable& table);

/// The 30-row training table, canonicalized, with case-study aliases.
DecisionTable training_fixture();

/// The published 13-rule decision algorithm, annotated against training_fixture().
RuleSet paper_rules();

/// Rules induced from training_fixture().
RuleSet induced_rules();

/// Verbatim fixture files as shipped: relative path -> contents.
std::vector<std::pair<std::string, std::string_view>> fixture_files();

}  // namespace roughset::autopilot
