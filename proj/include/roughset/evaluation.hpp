#pragma once

#include <roughset/decision_table.hpp>
#include <roughset/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace roughset::eval {

inline constexpr std::string_view kRuleApproach = "rough_set_rules";
inline constexpr std::string_view kTreeApproach = "id3_tree";

struct EvalReport {
    std::string approach;
    std::size_t training_size = 0;
    std::size_t testing_size = 0;
    std::size_t matched = 0;
    Rational detection_rate;
    std::optional<std::size_t> unknown_verdicts;  // rule classifier only
};

/// matched / total, exact. Throws DataError(invalid_argument) when total == 0
/// or matched > total.
Rational detection_rate(std::size_t matched, std::size_t total);

/// Rate as a whole percentage after rounding half-up to two decimals ("96%").
std::string percent(const Rational& rate);

/// Trains induced rules and an ID3 tree on `train` and scores both on `test`.
/// Unknown rule verdicts count as misses. Returns {rules, tree}.
std::pair<EvalReport, EvalReport> compare(const DecisionTable& train, const DecisionTable& test);

/// Synthetic test rows over the training schema. Each condition level is
/// kAllLevels[x % 4] for successive outputs x of std::mt19937_64(seed), row
/// by row, column by column. The label is the rule classifier's verdict when
/// it has one, otherwise the ID3 tree's decision. Throws for n == 0.
DecisionTable synth_test_set(const DecisionTable& train, std::uint64_t seed, std::size_t n);

/// synth_test_set over the bundled 30-row training table.
DecisionTable synth_test_set(std::uint64_t seed, std::size_t n);

}  // namespace roughset::eval
