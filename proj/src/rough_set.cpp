#include <roughset/rough_set.hpp>

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <numeric>

namespace roughset {

namespace rowset {

RowSet intersect(const RowSet& a, const RowSet& b) {
    RowSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

RowSet unite(const RowSet& a, const RowSet& b) {
    RowSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

RowSet subtract(const RowSet& a, const RowSet& b) {
    RowSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const RowSet& a, const RowSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RowSet normalize(std::vector<RowIndex> indices, std::size_t universe_size) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.back() >= universe_size)
        throw DataError(DataErrorKind::invalid_argument,
                        "row " + std::to_string(indices.back() + 1) + " outside universe of " +
                            std::to_string(universe_size));
    return indices;
}

}  // namespace rowset

namespace {

void check_columns(const DecisionTable& table, std::span<const std::size_t> attrs,
                   bool allow_decision) {
    const std::size_t limit = table.condition_count() + (allow_decision ? 1 : 0);
    for (std::size_t a : attrs)
        if (a >= limit)
            throw DataError(DataErrorKind::unknown_attribute,
                            "column index " + std::to_string(a) + " is not a " +
                                (allow_decision ? "table column" : "condition attribute"));
}

RowSet checked_target(const DecisionTable& table, const RowSet& target) {
    return rowset::normalize(target, table.size());
}

}  // namespace

AttributeSet resolve_attributes(const DecisionTable& table, const std::vector<std::string>& names) {
    AttributeSet out;
    for (const auto& n : names) out.push_back(table.column(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AttributeSet all_conditions(const DecisionTable& table) {
    AttributeSet out(table.condition_count());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

RowSet universe(const DecisionTable& table) {
    RowSet out(table.size());
    std::iota(out.begin(), out.end(), RowIndex{0});
    return out;
}

Partition partition(const DecisionTable& table, std::span<const std::size_t> attrs) {
    check_columns(table, attrs, true);
    Partition result;
    result.attrs.assign(attrs.begin(), attrs.end());
    std::sort(result.attrs.begin(), result.attrs.end());
    result.attrs.erase(std::unique(result.attrs.begin(), result.attrs.end()), result.attrs.end());

    std::map<std::vector<std::uint8_t>, std::size_t> block_of;
    std::vector<std::uint8_t> key(result.attrs.size());
    for (RowIndex r = 0; r < table.size(); ++r) {
        for (std::size_t k = 0; k < result.attrs.size(); ++k) key[k] = table.code(r, result.attrs[k]);
        auto [it, inserted] = block_of.try_emplace(key, result.blocks.size());
        if (inserted) result.blocks.emplace_back();
        result.blocks[it->second].push_back(r);
    }
    return result;
}

RowSet lower_approximation(const DecisionTable& table, std::span<const std::size_t> attrs,
                           const RowSet& target) {
    const RowSet x = checked_target(table, target);
    RowSet out;
    for (const auto& block : partition(table, attrs).blocks)
        if (rowset::is_subset(block, x)) out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end());
    return out;
}

RowSet upper_approximation(const DecisionTable& table, std::span<const std::size_t> attrs,
                           const RowSet& target) {
    const RowSet x = checked_target(table, target);
    RowSet out;
    for (const auto& block : partition(table, attrs).blocks)
        if (!rowset::intersect(block, x).empty()) out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end());
    return out;
}

ApproximationReport approximate(const DecisionTable& table, std::span<const std::size_t> attrs,
                                const RowSet& target) {
    ApproximationReport report;
    report.lower = lower_approximation(table, attrs, target);
    report.upper = upper_approximation(table, attrs, target);
    report.boundary = rowset::subtract(report.upper, report.lower);
    report.is_crisp = report.boundary.empty();
    report.accuracy = report.upper.empty()
                          ? Rational(1)
                          : Rational(static_cast<std::int64_t>(report.lower.size()),
                                     static_cast<std::int64_t>(report.upper.size()));
    return report;
}

RowSet positive_region(const DecisionTable& table, std::span<const std::size_t> attrs) {
    check_columns(table, attrs, false);
    RowSet out;
    for (Decision d : kAllDecisions) {
        const RowSet cls = table.rows_with(d);
        if (cls.empty()) continue;
        out = rowset::unite(out, lower_approximation(table, attrs, cls));
    }
    return out;
}

Rational dependency_degree(const DecisionTable& table, std::span<const std::size_t> attrs) {
    return {static_cast<std::int64_t>(positive_region(table, attrs).size()),
            static_cast<std::int64_t>(table.size())};
}

std::vector<std::string> attribute_names(const DecisionTable& table, const AttributeSet& attrs) {
    std::vector<std::string> out;
    out.reserve(attrs.size());
    for (std::size_t a : attrs) out.push_back(table.column_name(a));
    return out;
}

ReductReport find_reducts(const DecisionTable& table) {
    const std::size_t n = table.condition_count();
    if (n > kMaxReductAttributes)
        throw DataError(DataErrorKind::attribute_bound_exceeded,
                        std::to_string(n) + " condition attributes, exhaustive search allows " +
                            std::to_string(kMaxReductAttributes));

    ReductReport report;
    report.baseline_gamma = dependency_degree(table, all_conditions(table));

    // Visit subsets by increasing size; a preserving subset is a reduct unless
    // it contains an already-found (smaller) reduct.
    std::vector<std::uint32_t> masks(std::size_t{1} << n);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    std::vector<std::uint32_t> found;
    for (std::uint32_t mask : masks) {
        const bool has_sub_reduct = std::any_of(found.begin(), found.end(), [mask](std::uint32_t r) {
            return (r & mask) == r;
        });
        if (has_sub_reduct) continue;
        AttributeSet attrs;
        for (std::size_t a = 0; a < n; ++a)
            if (mask & (1u << a)) attrs.push_back(a);
        if (dependency_degree(table, attrs) == report.baseline_gamma) {
            found.push_back(mask);
            report.reducts.push_back(std::move(attrs));
        }
    }

    std::sort(report.reducts.begin(), report.reducts.end(),
              [&](const AttributeSet& a, const AttributeSet& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return attribute_names(table, a) < attribute_names(table, b);
              });

    if (!report.reducts.empty()) {
        report.core = report.reducts.front();
        for (const auto& r : report.reducts) {
            AttributeSet next;
            std::set_intersection(report.core.begin(), report.core.end(), r.begin(), r.end(),
                                  std::back_inserter(next));
            report.core = std::move(next);
        }
    }
    return report;
}

Rational significance(const DecisionTable& table, std::size_t attr) {
    if (attr >= table.condition_count())
        throw DataError(DataErrorKind::unknown_attribute,
                        "column index " + std::to_string(attr) + " is not a condition attribute");
    const AttributeSet full = all_conditions(table);
    AttributeSet without;
    for (std::size_t a : full)
        if (a != attr) without.push_back(a);
    return dependency_degree(table, full) - dependency_degree(table, without);
}

}  // namespace roughset
