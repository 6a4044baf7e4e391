#pragma once

#include <roughset/decision_table.hpp>
#include <roughset/rough_set.hpp>
#include <roughset/rules.hpp>

#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>

namespace roughset::id3 {

/// Shannon entropy in bits, 0 log 0 = 0. Throws on an all-zero histogram.
double entropy(std::span<const std::size_t> class_counts);
double entropy(const std::map<std::string, std::size_t>& class_counts);

/// Entropy of the decision column restricted to `rows`.
double decision_entropy(const DecisionTable& table, const RowSet& rows);

/// entropy(rows) minus the size-weighted entropy of the split on `attr`.
double information_gain(const DecisionTable& table, const RowSet& rows, std::size_t attr);

/// Gains below this are treated as zero (stop splitting) and gains closer
/// than this are treated as ties (earlier column wins).
inline constexpr double kGainEpsilon = 1e-12;

struct TreeNode;

struct Leaf {
    Decision decision;
};

struct Split {
    std::string attr;
    Decision fallback = Decision::consistent;  // majority of the node's training rows
    std::map<Level, std::unique_ptr<TreeNode>> branches;
};

struct TreeNode {
    std::variant<Leaf, Split> node;

    [[nodiscard]] bool is_leaf() const noexcept { return std::holds_alternative<Leaf>(node); }
    [[nodiscard]] std::size_t depth() const;
};

/// Greedy max-gain tree. Stops on a pure subset, exhausted attributes or
/// zero gain with a majority leaf (ties go to the lexicographically smaller
/// decision). Gain ties go to the earlier column.
TreeNode build_tree(const DecisionTable& table);

/// Follows branches by the object's levels; an unseen level takes the node's
/// fallback. Throws DataError(missing_object_attribute) for a missing split attribute.
Decision tree_classify(const TreeNode& tree, const Object& object);

}  // namespace roughset::id3
