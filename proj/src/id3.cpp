#include <roughset/id3.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

namespace roughset::id3 {

double entropy(std::span<const std::size_t> class_counts) {
    const std::size_t total = std::accumulate(class_counts.begin(), class_counts.end(), std::size_t{0});
    if (total == 0) throw DataError(DataErrorKind::invalid_argument, "entropy of an empty histogram");
    double h = 0.0;
    for (std::size_t c : class_counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h == 0.0 ? 0.0 : h;  // no -0.0
}

double entropy(const std::map<std::string, std::size_t>& class_counts) {
    std::vector<std::size_t> counts;
    counts.reserve(class_counts.size());
    for (const auto& [_, c] : class_counts) counts.push_back(c);
    return entropy(counts);
}

namespace {

std::array<std::size_t, kAllDecisions.size()> tally(const DecisionTable& table, const RowSet& rows) {
    std::array<std::size_t, kAllDecisions.size()> counts{};
    for (RowIndex r : rows) ++counts[static_cast<std::size_t>(table.decision(r))];
    return counts;
}

std::map<Level, RowSet> split_rows(const DecisionTable& table, const RowSet& rows, std::size_t attr) {
    std::map<Level, RowSet> parts;
    for (RowIndex r : rows) parts[table.level(r, attr)].push_back(r);
    return parts;
}

// Decisions are ordered consistent < inconsistent, which is also their
// lexicographic order, so the first maximum is the tie winner.
Decision majority(const DecisionTable& table, const RowSet& rows) {
    const auto counts = tally(table, rows);
    const auto it = std::max_element(counts.begin(), counts.end());
    return kAllDecisions[static_cast<std::size_t>(it - counts.begin())];
}

TreeNode grow(const DecisionTable& table, const RowSet& rows, std::vector<std::size_t> remaining) {
    const auto counts = tally(table, rows);
    const auto classes = std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
    if (classes <= 1 || remaining.empty()) return TreeNode{Leaf{majority(table, rows)}};

    std::size_t best = remaining.front();
    double best_gain = -1.0;
    for (std::size_t attr : remaining) {
        const double g = information_gain(table, rows, attr);
        if (g > best_gain + kGainEpsilon) {
            best_gain = g;
            best = attr;
        }
    }
    if (best_gain <= kGainEpsilon) return TreeNode{Leaf{majority(table, rows)}};

    Split split;
    split.attr = table.condition_attrs()[best];
    split.fallback = majority(table, rows);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    for (auto& [level, subset] : split_rows(table, rows, best))
        split.branches.emplace(level, std::make_unique<TreeNode>(grow(table, subset, remaining)));
    return TreeNode{std::move(split)};
}

}  // namespace

double decision_entropy(const DecisionTable& table, const RowSet& rows) {
    const auto counts = tally(table, rows);
    return entropy(counts);
}

double information_gain(const DecisionTable& table, const RowSet& rows, std::size_t attr) {
    if (attr >= table.condition_count())
        throw DataError(DataErrorKind::unknown_attribute,
                        "column index " + std::to_string(attr) + " is not a condition attribute");
    if (rows.empty()) throw DataError(DataErrorKind::invalid_argument, "information gain over no rows");
    const double n = static_cast<double>(rows.size());
    double remainder = 0.0;
    for (const auto& [_, subset] : split_rows(table, rows, attr))
        remainder += static_cast<double>(subset.size()) / n * decision_entropy(table, subset);
    const double gain = decision_entropy(table, rows) - remainder;
    return gain < 0.0 ? 0.0 : gain;  // rounding can leave -1e-17 on constant splits
}

std::size_t TreeNode::depth() const {
    if (const auto* split = std::get_if<Split>(&node)) {
        std::size_t deepest = 0;
        for (const auto& [_, child] : split->branches) deepest = std::max(deepest, child->depth());
        return deepest + 1;
    }
    return 0;
}

TreeNode build_tree(const DecisionTable& table) {
    return grow(table, universe(table), all_conditions(table));
}

Decision tree_classify(const TreeNode& tree, const Object& object) {
    const TreeNode* node = &tree;
    while (const auto* split = std::get_if<Split>(&node->node)) {
        const auto value = object.find(split->attr);
        if (value == object.end())
            throw DataError(DataErrorKind::missing_object_attribute,
                            "object has no value for split attribute '" + split->attr + "'");
        const auto branch = split->branches.find(value->second);
        if (branch == split->branches.end()) return split->fallback;
        node = branch->second.get();
    }
    return std::get<Leaf>(node->node).decision;
}

}  // namespace roughset::id3
