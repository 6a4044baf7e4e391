#pragma once

#include <roughset/decision_table.hpp>
#include <roughset/rational.hpp>
#include <roughset/rough_set.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roughset {

struct Condition {
    std::string attr;
    Level value;

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Conjunctive decision rule. Statistics are relative to the table the rule
/// was induced from or annotated against; a rule read from a file carries
/// zeros until annotated.
struct Rule {
    std::vector<Condition> antecedent;
    Decision consequent = Decision::consistent;
    std::size_t support = 0;          // rows matching the antecedent
    std::size_t hits = 0;             // matching rows that carry the consequent
    std::optional<Rational> confidence;  // hits / support, absent when support == 0
    std::optional<Rational> coverage;    // hits / |consequent class|, absent for an empty class

    [[nodiscard]] bool same_body(const Rule& other) const {
        return antecedent == other.antecedent && consequent == other.consequent;
    }
};

enum class RuleSource { induced, file };

struct RuleSet {
    std::vector<Rule> rules;
    RuleSource source = RuleSource::induced;
};

struct RuleAuditEntry {
    std::size_t rule_index = 0;
    std::size_t support = 0;
    std::size_t hits = 0;
    std::optional<Rational> confidence;
    RowSet counterexamples;
};

struct RuleAudit {
    std::vector<RuleAuditEntry> entries;
};

enum class Outcome { consistent, inconsistent, unknown };

std::string_view to_string(Outcome outcome) noexcept;
Outcome to_outcome(Decision d) noexcept;

struct Verdict {
    Outcome decision = Outcome::unknown;
    std::vector<std::size_t> matched_rules;  // indices into the rule set, ascending
    bool override_alert = false;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// An object to classify: attribute name -> level.
using Object = std::map<std::string, Level, std::less<>>;

/// Minimal certain rules, one value reduct per training row. Each row's full
/// condition vector is shortened by dropping conditions from the last column
/// backwards whenever the shorter rule still has confidence 1 on the table.
/// Throws DataError(inconsistent_table) if the table has conflicting rows.
RuleSet induce_rules(const DecisionTable& table);

/// Support, hits and counterexamples of every rule against `table`. Rule
/// attributes resolve through the table's header names and aliases.
RuleAudit audit_rules(const DecisionTable& table, const RuleSet& rules);

/// Copy of `rules` with support/hits/confidence/coverage recomputed on `table`.
RuleSet annotate(const DecisionTable& table, RuleSet rules);

/// Fires every rule whose antecedent holds on `object`. The decision goes to
/// the consequent with the largest total support among firing rules; a lone
/// consequent wins regardless of weight. Ties and no match give unknown.
Verdict classify(const RuleSet& rules, const Object& object);

/// Number of rules mentioning each attribute. `attributes` fixes the leading
/// keys (reported even at zero); attributes only seen in rules follow in
/// first-mention order.
std::vector<std::pair<std::string, std::size_t>> attribute_frequency(
    const RuleSet& rules, const std::vector<std::string>& attributes = {});

/// Object built from one table row, keyed by header names and aliases.
Object row_object(const DecisionTable& table, RowIndex row);

/// Rule file: JSON array of {"if": [{"attr": .., "value": ..}, ..], "then": ..}.
/// Level and decision tokens are canonicalized on load.
RuleSet parse_rule_file(std::string_view json_text);
std::string write_rule_file(const RuleSet& rules);

}  // namespace roughset
