#include <roughset/rules.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <tuple>

namespace roughset {

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
    case Outcome::consistent: return "consistent";
    case Outcome::inconsistent: return "inconsistent";
    case Outcome::unknown: return "unknown";
    }
    return "unknown";
}

Outcome to_outcome(Decision d) noexcept {
    return d == Decision::consistent ? Outcome::consistent : Outcome::inconsistent;
}

namespace {

struct ResolvedCondition {
    std::size_t column;
    Level value;
};

std::vector<ResolvedCondition> resolve(const DecisionTable& table, const Rule& rule) {
    std::vector<ResolvedCondition> out;
    out.reserve(rule.antecedent.size());
    for (const auto& c : rule.antecedent) {
        const std::size_t col = table.column(c.attr);
        if (col == table.decision_column())
            throw DataError(DataErrorKind::unknown_attribute,
                            "'" + c.attr + "' is the decision attribute, not a condition");
        out.push_back({col, c.value});
    }
    return out;
}

bool matches(const DecisionTable& table, RowIndex row, const std::vector<ResolvedCondition>& conds) {
    return std::all_of(conds.begin(), conds.end(),
                       [&](const ResolvedCondition& c) { return table.level(row, c.column) == c.value; });
}

// True when every row agreeing with `row` on `columns` has the same decision.
bool certain(const DecisionTable& table, RowIndex row, const std::vector<std::size_t>& columns) {
    for (RowIndex other = 0; other < table.size(); ++other) {
        if (table.decision(other) == table.decision(row)) continue;
        const bool agrees = std::all_of(columns.begin(), columns.end(), [&](std::size_t c) {
            return table.level(other, c) == table.level(row, c);
        });
        if (agrees) return false;
    }
    return true;
}

void fill_stats(const DecisionTable& table, Rule& rule, RowSet* counterexamples) {
    const auto conds = resolve(table, rule);
    rule.support = 0;
    rule.hits = 0;
    for (RowIndex r = 0; r < table.size(); ++r) {
        if (!matches(table, r, conds)) continue;
        ++rule.support;
        if (table.decision(r) == rule.consequent)
            ++rule.hits;
        else if (counterexamples)
            counterexamples->push_back(r);
    }
    rule.confidence.reset();
    if (rule.support > 0)
        rule.confidence = Rational(static_cast<std::int64_t>(rule.hits),
                                   static_cast<std::int64_t>(rule.support));
    const auto class_size = table.rows_with(rule.consequent).size();
    rule.coverage.reset();
    if (class_size > 0)
        rule.coverage = Rational(static_cast<std::int64_t>(rule.hits),
                                 static_cast<std::int64_t>(class_size));
}

}  // namespace

RuleSet induce_rules(const DecisionTable& table) {
    if (const auto report = validate(table); !report.consistent()) {
        const auto [i, j] = report.conflicting_pairs.front();
        throw DataError(DataErrorKind::inconsistent_table,
                        std::to_string(report.conflicting_pairs.size()) +
                            " conflicting row pair(s), first: rows " + std::to_string(i + 1) +
                            " and " + std::to_string(j + 1));
    }

    struct Candidate {
        std::vector<std::size_t> columns;
        std::vector<Level> values;
        Decision decision;
    };
    std::vector<Candidate> candidates;

    for (RowIndex row = 0; row < table.size(); ++row) {
        std::vector<std::size_t> columns = all_conditions(table);
        for (std::size_t k = table.condition_count(); k-- > 0;) {
            std::vector<std::size_t> trial;
            for (std::size_t c : columns)
                if (c != k) trial.push_back(c);
            if (certain(table, row, trial)) columns = std::move(trial);
        }
        Candidate cand{columns, {}, table.decision(row)};
        for (std::size_t c : columns) cand.values.push_back(table.level(row, c));
        const bool duplicate = std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& o) {
            return o.columns == cand.columns && o.values == cand.values && o.decision == cand.decision;
        });
        if (!duplicate) candidates.push_back(std::move(cand));
    }

    RuleSet out;
    out.source = RuleSource::induced;
    std::vector<Candidate> ordered_candidates;
    for (auto& cand : candidates) {
        Rule rule;
        for (std::size_t i = 0; i < cand.columns.size(); ++i)
            rule.antecedent.push_back({table.condition_attrs()[cand.columns[i]], cand.values[i]});
        rule.consequent = cand.decision;
        fill_stats(table, rule, nullptr);
        out.rules.push_back(std::move(rule));
        ordered_candidates.push_back(std::move(cand));
    }

    // support desc, antecedent size asc, then (column, level) pairs and decision
    std::vector<std::size_t> order(out.rules.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ra = out.rules[a];
        const auto& rb = out.rules[b];
        if (ra.support != rb.support) return ra.support > rb.support;
        if (ra.antecedent.size() != rb.antecedent.size())
            return ra.antecedent.size() < rb.antecedent.size();
        const auto& ca = ordered_candidates[a];
        const auto& cb = ordered_candidates[b];
        return std::tie(ca.columns, ca.values, ca.decision) <
               std::tie(cb.columns, cb.values, cb.decision);
    });
    RuleSet sorted;
    sorted.source = RuleSource::induced;
    for (std::size_t i : order) sorted.rules.push_back(std::move(out.rules[i]));
    return sorted;
}

RuleAudit audit_rules(const DecisionTable& table, const RuleSet& rules) {
    RuleAudit audit;
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        Rule copy = rules.rules[i];
        RuleAuditEntry entry;
        entry.rule_index = i;
        fill_stats(table, copy, &entry.counterexamples);
        entry.support = copy.support;
        entry.hits = copy.hits;
        entry.confidence = copy.confidence;
        audit.entries.push_back(std::move(entry));
    }
    return audit;
}

RuleSet annotate(const DecisionTable& table, RuleSet rules) {
    for (auto& rule : rules.rules) fill_stats(table, rule, nullptr);
    return rules;
}

Verdict classify(const RuleSet& rules, const Object& object) {
    Verdict verdict;
    std::map<Decision, std::size_t> weight;
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const Rule& rule = rules.rules[i];
        bool fires = true;
        for (const auto& c : rule.antecedent) {
            auto it = object.find(c.attr);
            if (it == object.end())
                throw DataError(DataErrorKind::missing_object_attribute,
                                "object has no value for '" + c.attr + "' (rule " +
                                    std::to_string(i + 1) + ")");
            if (it->second != c.value) {
                fires = false;
                break;
            }
        }
        if (!fires) continue;
        verdict.matched_rules.push_back(i);
        weight[rule.consequent] += rule.support;
    }

    if (weight.size() == 1) {
        verdict.decision = to_outcome(weight.begin()->first);
    } else if (weight.size() == 2) {
        const auto c = weight[Decision::consistent];
        const auto n = weight[Decision::inconsistent];
        verdict.decision = c > n ? Outcome::consistent
                         : n > c ? Outcome::inconsistent
                                 : Outcome::unknown;
    }
    verdict.override_alert = verdict.decision == Outcome::inconsistent;
    return verdict;
}

std::vector<std::pair<std::string, std::size_t>> attribute_frequency(
    const RuleSet& rules, const std::vector<std::string>& attributes) {
    std::vector<std::pair<std::string, std::size_t>> counts;
    const auto slot = [&](const std::string& name) -> std::size_t& {
        for (auto& [n, c] : counts)
            if (n == name) return c;
        counts.emplace_back(name, 0);
        return counts.back().second;
    };
    for (const auto& a : attributes) slot(a);
    for (const auto& rule : rules.rules) {
        std::vector<std::string_view> seen;
        for (const auto& c : rule.antecedent) {
            if (std::find(seen.begin(), seen.end(), c.attr) != seen.end()) continue;
            seen.push_back(c.attr);
            ++slot(c.attr);
        }
    }
    return counts;
}

Object row_object(const DecisionTable& table, RowIndex row) {
    Object obj;
    for (std::size_t c = 0; c < table.condition_count(); ++c)
        obj.emplace(table.condition_attrs()[c], table.level(row, c));
    for (const auto& [alias, target] : table.aliases())
        if (auto c = table.find_column(target); c && *c < table.condition_count())
            obj.emplace(alias, table.level(row, *c));
    return obj;
}

RuleSet parse_rule_file(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(DataErrorKind::malformed_file, std::string("rule file: ") + e.what());
    }
    if (!doc.is_array())
        throw DataError(DataErrorKind::malformed_file, "rule file must be a JSON array");

    RuleSet out;
    out.source = RuleSource::file;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        const std::string where = "rule " + std::to_string(i + 1);
        if (!item.is_object() || !item.contains("if") || !item.contains("then") ||
            !item["if"].is_array() || !item["then"].is_string())
            throw DataError(DataErrorKind::malformed_file,
                            where + ": expected {\"if\": [...], \"then\": \"...\"}");
        Rule rule;
        for (const auto& cond : item["if"]) {
            if (!cond.is_object() || !cond.contains("attr") || !cond.contains("value") ||
                !cond["attr"].is_string() || !cond["value"].is_string())
                throw DataError(DataErrorKind::malformed_file,
                                where + ": condition needs string \"attr\" and \"value\"");
            Condition c{cond["attr"].get<std::string>(),
                        canonicalize_level(cond["value"].get<std::string>())};
            const bool repeated = std::any_of(rule.antecedent.begin(), rule.antecedent.end(),
                                              [&](const Condition& o) { return o.attr == c.attr; });
            if (repeated)
                throw DataError(DataErrorKind::malformed_file,
                                where + ": attribute '" + c.attr + "' appears twice");
            rule.antecedent.push_back(std::move(c));
        }
        rule.consequent = canonicalize_decision(item["then"].get<std::string>());
        for (const auto& existing : out.rules)
            if (existing.same_body(rule))
                throw DataError(DataErrorKind::malformed_file, where + ": duplicate rule");
        out.rules.push_back(std::move(rule));
    }
    return out;
}

std::string write_rule_file(const RuleSet& rules) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& rule : rules.rules) {
        nlohmann::ordered_json conds = nlohmann::ordered_json::array();
        for (const auto& c : rule.antecedent)
            conds.push_back({{"attr", c.attr}, {"value", std::string(to_string(c.value))}});
        doc.push_back({{"if", conds}, {"then", std::string(to_string(rule.consequent))}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace roughset
