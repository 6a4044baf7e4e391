#pragma once

// JSON shapes shared by the CLI and the golden files. Row indices are
// 1-based, attributes appear by header name, rationals as
// {"num", "den", "decimal"}.

#include <roughset/autopilot.hpp>
#include <roughset/decision_table.hpp>
#include <roughset/evaluation.hpp>
#include <roughset/id3.hpp>
#include <roughset/rough_set.hpp>
#include <roughset/rules.hpp>

#include <nlohmann/json.hpp>

namespace roughset::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& value);
Json optional_rational(const std::optional<Rational>& value);
Json rows(const RowSet& rows);
Json attributes(const DecisionTable& table, const AttributeSet& attrs);
Json row_pairs(const std::vector<std::pair<RowIndex, RowIndex>>& pairs);

Json validation(const ValidationReport& report);
Json partition(const DecisionTable& table, const Partition& partition);
Json approximation(const ApproximationReport& report);
Json reducts(const DecisionTable& table, const ReductReport& report);
Json rule(const Rule& rule);
Json rule_set(const RuleSet& rules);
Json audit(const RuleSet& rules, const RuleAudit& audit);
Json verdict(const Verdict& verdict);
Json frequency(const std::vector<std::pair<std::string, std::size_t>>& counts);
Json tree(const id3::TreeNode& node);
Json evaluation(const eval::EvalReport& report);
Json levels(const autopilot::LevelQuintuple& levels);
Json pipeline(const autopilot::PipelineResult& result);

/// Inverse of tree(); throws DataError(malformed_file) on a bad document.
id3::TreeNode parse_tree(const nlohmann::json& doc);

}  // namespace roughset::report
