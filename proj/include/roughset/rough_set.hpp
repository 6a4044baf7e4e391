#pragma once

#include <roughset/decision_table.hpp>
#include <roughset/rational.hpp>

#include <span>
#include <string>
#include <vector>

namespace roughset {

/// Column indices into a DecisionTable, ascending and unique.
using AttributeSet = std::vector<std::size_t>;

/// Row positions within a table's universe, ascending and unique.
using RowSet = std::vector<RowIndex>;

/// Equivalence classes of the indiscernibility relation over `attrs`.
/// Blocks are ordered by their smallest member; no block is empty.
struct Partition {
    AttributeSet attrs;
    std::vector<RowSet> blocks;
};

struct ApproximationReport {
    RowSet lower;
    RowSet upper;
    RowSet boundary;
    Rational accuracy;  // |lower| / |upper|, 1 when upper is empty
    bool is_crisp = true;
};

struct ReductReport {
    std::vector<AttributeSet> reducts;  // by size, then attribute names
    AttributeSet core;
    Rational baseline_gamma;
};

/// Largest condition-attribute count find_reducts will enumerate.
inline constexpr std::size_t kMaxReductAttributes = 20;

/// Resolves names (conditions or the decision attribute) to a sorted column set.
AttributeSet resolve_attributes(const DecisionTable& table, const std::vector<std::string>& names);

AttributeSet all_conditions(const DecisionTable& table);

/// The whole universe 0..N-1.
RowSet universe(const DecisionTable& table);

Partition partition(const DecisionTable& table, std::span<const std::size_t> attrs);

RowSet lower_approximation(const DecisionTable& table, std::span<const std::size_t> attrs,
                           const RowSet& target);
RowSet upper_approximation(const DecisionTable& table, std::span<const std::size_t> attrs,
                           const RowSet& target);
ApproximationReport approximate(const DecisionTable& table, std::span<const std::size_t> attrs,
                                const RowSet& target);

/// Rows whose `attrs`-block lies inside a single decision class.
RowSet positive_region(const DecisionTable& table, std::span<const std::size_t> attrs);

/// |positive_region| / N.
Rational dependency_degree(const DecisionTable& table, std::span<const std::size_t> attrs);

/// All minimal condition subsets preserving the dependency degree of the full
/// condition set, by exhaustive enumeration. Core is their intersection.
ReductReport find_reducts(const DecisionTable& table);

/// Drop in dependency degree when `attr` is removed from the full condition set.
Rational significance(const DecisionTable& table, std::size_t attr);

/// Names of `attrs` in column order.
std::vector<std::string> attribute_names(const DecisionTable& table, const AttributeSet& attrs);

namespace rowset {

RowSet intersect(const RowSet& a, const RowSet& b);
RowSet unite(const RowSet& a, const RowSet& b);
RowSet subtract(const RowSet& a, const RowSet& b);
bool is_subset(const RowSet& a, const RowSet& b);
/// Sorts, deduplicates and bounds-checks an arbitrary index list.
RowSet normalize(std::vector<RowIndex> indices, std::size_t universe_size);

}  // namespace rowset

}  // namespace roughset
