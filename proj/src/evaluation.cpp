#include <roughset/evaluation.hpp>

#include <roughset/autopilot.hpp>
#include <roughset/id3.hpp>
#include <roughset/rules.hpp>

#include <random>

namespace roughset::eval {

Rational detection_rate(std::size_t matched, std::size_t total) {
    if (total == 0) throw DataError(DataErrorKind::invalid_argument, "detection rate over an empty test set");
    if (matched > total)
        throw DataError(DataErrorKind::invalid_argument,
                        std::to_string(matched) + " matched out of " + std::to_string(total));
    return {static_cast<std::int64_t>(matched), static_cast<std::int64_t>(total)};
}

std::string percent(const Rational& rate) {
    return to_fixed(rate * Rational(100), 0) + "%";
}

std::pair<EvalReport, EvalReport> compare(const DecisionTable& train, const DecisionTable& test) {
    if (train.condition_attrs() != test.condition_attrs() ||
        train.decision_attr() != test.decision_attr())
        throw DataError(DataErrorKind::schema_mismatch,
                        "training and test tables must have identical attribute headers");

    const RuleSet rules = induce_rules(train);
    const id3::TreeNode tree = id3::build_tree(train);

    EvalReport rule_report{std::string(kRuleApproach), train.size(), test.size(), 0, {}, 0};
    EvalReport tree_report{std::string(kTreeApproach), train.size(), test.size(), 0, {}, std::nullopt};

    for (RowIndex r = 0; r < test.size(); ++r) {
        const Object obj = row_object(test, r);
        const Verdict verdict = classify(rules, obj);
        if (verdict.decision == Outcome::unknown)
            ++*rule_report.unknown_verdicts;
        else if (verdict.decision == to_outcome(test.decision(r)))
            ++rule_report.matched;
        if (id3::tree_classify(tree, obj) == test.decision(r)) ++tree_report.matched;
    }
    rule_report.detection_rate = detection_rate(rule_report.matched, test.size());
    tree_report.detection_rate = detection_rate(tree_report.matched, test.size());
    return {std::move(rule_report), std::move(tree_report)};
}

DecisionTable synth_test_set(const DecisionTable& train, std::uint64_t seed, std::size_t n) {
    if (n == 0) throw DataError(DataErrorKind::invalid_argument, "synthetic test set needs n > 0");

    const RuleSet rules = induce_rules(train);
    const id3::TreeNode tree = id3::build_tree(train);

    std::mt19937_64 stream(seed);
    std::vector<std::vector<Level>> rows;
    std::vector<Decision> decisions;
    rows.reserve(n);
    decisions.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Level> levels(train.condition_count());
        for (auto& l : levels) l = kAllLevels[stream() % kAllLevels.size()];

        Object obj;
        for (std::size_t c = 0; c < levels.size(); ++c) obj.emplace(train.condition_attrs()[c], levels[c]);
        const Verdict verdict = classify(rules, obj);
        const Decision by_tree = id3::tree_classify(tree, obj);
        Decision label = by_tree;
        if (verdict.decision == Outcome::consistent) label = Decision::consistent;
        if (verdict.decision == Outcome::inconsistent) label = Decision::inconsistent;

        rows.push_back(std::move(levels));
        decisions.push_back(label);
    }
    return DecisionTable(train.condition_attrs(), train.decision_attr(), std::move(rows),
                         std::move(decisions));
}

DecisionTable synth_test_set(std::uint64_t seed, std::size_t n) {
    return synth_test_set(autopilot::training_fixture(), seed, n);
}

}  // namespace roughset::eval
