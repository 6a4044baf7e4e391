#include <roughset/report.hpp>

namespace roughset::report {

Json rational(const Rational& value) {
    return Json{{"num", value.numerator()}, {"den", value.denominator()}, {"decimal", to_decimal(value)}};
}

Json optional_rational(const std::optional<Rational>& value) {
    return value ? rational(*value) : Json(nullptr);
}

Json rows(const RowSet& rows) {
    Json out = Json::array();
    for (RowIndex r : rows) out.push_back(r + 1);
    return out;
}

Json attributes(const DecisionTable& table, const AttributeSet& attrs) {
    Json out = Json::array();
    for (std::size_t a : attrs) out.push_back(table.column_name(a));
    return out;
}

Json row_pairs(const std::vector<std::pair<RowIndex, RowIndex>>& pairs) {
    Json out = Json::array();
    for (const auto& [i, j] : pairs) out.push_back(Json::array({i + 1, j + 1}));
    return out;
}

Json validation(const ValidationReport& report) {
    return Json{{"consistent", report.consistent()},
                {"conflicting_pairs", row_pairs(report.conflicting_pairs)},
                {"duplicate_pairs", row_pairs(report.duplicate_pairs)}};
}

Json partition(const DecisionTable& table, const Partition& partition) {
    Json blocks = Json::array();
    for (const auto& b : partition.blocks) blocks.push_back(rows(b));
    return Json{{"attributes", attributes(table, partition.attrs)},
                {"block_count", partition.blocks.size()},
                {"blocks", std::move(blocks)}};
}

Json approximation(const ApproximationReport& report) {
    return Json{{"lower", rows(report.lower)},
                {"upper", rows(report.upper)},
                {"boundary", rows(report.boundary)},
                {"accuracy", rational(report.accuracy)},
                {"is_crisp", report.is_crisp}};
}

Json reducts(const DecisionTable& table, const ReductReport& report) {
    Json list = Json::array();
    for (const auto& r : report.reducts) list.push_back(attributes(table, r));
    return Json{{"baseline_gamma", rational(report.baseline_gamma)},
                {"reducts", std::move(list)},
                {"core", attributes(table, report.core)}};
}

Json rule(const Rule& rule) {
    Json conds = Json::array();
    for (const auto& c : rule.antecedent)
        conds.push_back(Json{{"attr", c.attr}, {"value", to_string(c.value)}});
    return Json{{"if", std::move(conds)},
                {"then", to_string(rule.consequent)},
                {"support", rule.support},
                {"hits", rule.hits},
                {"confidence", optional_rational(rule.confidence)},
                {"coverage", optional_rational(rule.coverage)}};
}

Json rule_set(const RuleSet& rules) {
    Json list = Json::array();
    for (const auto& r : rules.rules) list.push_back(rule(r));
    return Json{{"source", rules.source == RuleSource::induced ? "induced" : "file"},
                {"rule_count", rules.rules.size()},
                {"rules", std::move(list)}};
}

Json audit(const RuleSet& rules, const RuleAudit& audit) {
    Json entries = Json::array();
    for (const auto& e : audit.entries) {
        const Rule& r = rules.rules.at(e.rule_index);
        Json conds = Json::array();
        for (const auto& c : r.antecedent)
            conds.push_back(Json{{"attr", c.attr}, {"value", to_string(c.value)}});
        entries.push_back(Json{{"rule", e.rule_index + 1},
                               {"if", std::move(conds)},
                               {"then", to_string(r.consequent)},
                               {"support", e.support},
                               {"hits", e.hits},
                               {"confidence", optional_rational(e.confidence)},
                               {"counterexamples", rows(e.counterexamples)}});
    }
    return Json{{"rules", std::move(entries)}};
}

Json verdict(const Verdict& verdict) {
    Json matched = Json::array();
    for (std::size_t i : verdict.matched_rules) matched.push_back(i + 1);
    return Json{{"decision", to_string(verdict.decision)},
                {"matched_rules", std::move(matched)},
                {"override_alert", verdict.override_alert}};
}

Json frequency(const std::vector<std::pair<std::string, std::size_t>>& counts) {
    Json out = Json::object();
    for (const auto& [name, count] : counts) out[name] = count;
    return out;
}

Json tree(const id3::TreeNode& node) {
    if (const auto* leaf = std::get_if<id3::Leaf>(&node.node))
        return Json{{"leaf", to_string(leaf->decision)}};
    const auto& split = std::get<id3::Split>(node.node);
    Json branches = Json::object();
    for (const auto& [level, child] : split.branches) branches[std::string(to_string(level))] = tree(*child);
    return Json{{"split", split.attr},
                {"fallback", to_string(split.fallback)},
                {"branches", std::move(branches)}};
}

id3::TreeNode parse_tree(const nlohmann::json& doc) {
    if (!doc.is_object()) throw DataError(DataErrorKind::malformed_file, "tree node must be an object");
    if (doc.contains("leaf")) {
        if (!doc["leaf"].is_string()) throw DataError(DataErrorKind::malformed_file, "leaf must be a string");
        return id3::TreeNode{id3::Leaf{canonicalize_decision(doc["leaf"].get<std::string>())}};
    }
    if (!doc.contains("split") || !doc.contains("fallback") || !doc.contains("branches") ||
        !doc["split"].is_string() || !doc["fallback"].is_string() || !doc["branches"].is_object())
        throw DataError(DataErrorKind::malformed_file,
                        "tree node needs \"leaf\" or \"split\", \"fallback\" and \"branches\"");
    id3::Split split;
    split.attr = doc["split"].get<std::string>();
    split.fallback = canonicalize_decision(doc["fallback"].get<std::string>());
    for (const auto& [key, child] : doc["branches"].items())
        split.branches.emplace(canonicalize_level(key), std::make_unique<id3::TreeNode>(parse_tree(child)));
    return id3::TreeNode{std::move(split)};
}

Json evaluation(const eval::EvalReport& report) {
    return Json{{"approach", report.approach},
                {"training_size", report.training_size},
                {"testing_size", report.testing_size},
                {"matched", report.matched},
                {"detection_rate", rational(report.detection_rate)},
                {"detection_rate_percent", eval::percent(report.detection_rate)},
                {"unknown_verdicts", report.unknown_verdicts ? Json(*report.unknown_verdicts) : Json(nullptr)}};
}

Json levels(const autopilot::LevelQuintuple& levels) {
    Json out = Json::object();
    for (autopilot::Payload p : autopilot::kAllPayloads)
        out[std::string(autopilot::payload_name(p))] = to_string(levels[static_cast<std::size_t>(p)]);
    return out;
}

Json pipeline(const autopilot::PipelineResult& result) {
    return Json{{"levels", levels(result.levels)}, {"verdict", verdict(result.verdict)}};
}

}  // namespace roughset::report
