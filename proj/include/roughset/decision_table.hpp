#pragma once

#include <roughset/errors.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roughset {

/// Closed vocabulary for condition values.
enum class Level : std::uint8_t { high, moderate, low, extremely_low };

/// Closed vocabulary for the decision attribute.
enum class Decision : std::uint8_t { consistent, inconsistent };

inline constexpr std::array<Level, 4> kAllLevels{Level::high, Level::moderate, Level::low,
                                                 Level::extremely_low};
inline constexpr std::array<Decision, 2> kAllDecisions{Decision::consistent,
                                                       Decision::inconsistent};

/// Maps a raw token onto the canonical vocabulary. Trims whitespace, ignores
/// case, accepts "medium" for moderate and "very low"/"extremely low" for
/// extremely_low. Canonical spellings ("extremely_low") are accepted too, so
/// the mapping is idempotent.
Level canonicalize_level(std::string_view raw);
Decision canonicalize_decision(std::string_view raw);

std::string_view to_string(Level level) noexcept;
std::string_view to_string(Decision decision) noexcept;

using RowIndex = std::size_t;

/// Categorical decision table: N >= 1 rows over named condition attributes
/// plus one decision attribute. Immutable after construction.
///
/// Columns are addressed by index: 0..condition_count()-1 are the condition
/// attributes in header order, condition_count() is the decision attribute.
class DecisionTable {
public:
    DecisionTable(std::vector<std::string> condition_attrs, std::string decision_attr,
                  std::vector<std::vector<Level>> rows, std::vector<Decision> decisions);

    [[nodiscard]] std::size_t size() const noexcept { return decisions_.size(); }
    [[nodiscard]] std::size_t condition_count() const noexcept { return condition_attrs_.size(); }
    [[nodiscard]] std::size_t decision_column() const noexcept { return condition_attrs_.size(); }

    [[nodiscard]] const std::vector<std::string>& condition_attrs() const noexcept {
        return condition_attrs_;
    }
    [[nodiscard]] const std::string& decision_attr() const noexcept { return decision_attr_; }
    [[nodiscard]] const std::string& column_name(std::size_t column) const;

    [[nodiscard]] Level level(RowIndex row, std::size_t attr) const {
        return levels_[row * condition_count() + attr];
    }
    [[nodiscard]] std::span<const Level> conditions(RowIndex row) const {
        return {levels_.data() + row * condition_count(), condition_count()};
    }
    [[nodiscard]] Decision decision(RowIndex row) const { return decisions_[row]; }

    /// Small integer code of any column's value; lets partitioning treat the
    /// decision column like any other attribute.
    [[nodiscard]] std::uint8_t code(RowIndex row, std::size_t column) const {
        return column == decision_column() ? static_cast<std::uint8_t>(decisions_[row])
                                           : static_cast<std::uint8_t>(level(row, column));
    }

    /// Resolves a column by header name, then by registered alias.
    [[nodiscard]] std::optional<std::size_t> find_column(std::string_view name) const;
    /// As find_column, but throws DataError(unknown_attribute) naming `name`.
    [[nodiscard]] std::size_t column(std::string_view name) const;
    /// Resolves a list of names to condition-attribute indices (sorted, deduplicated).
    [[nodiscard]] std::vector<std::size_t> condition_columns(
        const std::vector<std::string>& names) const;

    /// Alternative names for columns (alias -> header name). Used so rule
    /// files written against descriptive names can address terse headers.
    [[nodiscard]] const std::map<std::string, std::string>& aliases() const noexcept {
        return aliases_;
    }
    [[nodiscard]] DecisionTable with_aliases(std::map<std::string, std::string> aliases) const;

    /// Row indices whose decision equals `d`, ascending.
    [[nodiscard]] std::vector<RowIndex> rows_with(Decision d) const;

    friend bool operator==(const DecisionTable& a, const DecisionTable& b) {
        return a.condition_attrs_ == b.condition_attrs_ && a.decision_attr_ == b.decision_attr_ &&
               a.levels_ == b.levels_ && a.decisions_ == b.decisions_;
    }

private:
    std::vector<std::string> condition_attrs_;
    std::string decision_attr_;
    std::vector<Level> levels_;  // row-major
    std::vector<Decision> decisions_;
    std::map<std::string, std::string> aliases_;
};

/// Reads a comma-separated table with a header row. An index column named
/// "S no." (any case) is skipped. The decision column defaults to the last.
DecisionTable parse_table(std::istream& source,
                          const std::optional<std::string>& decision_attr = std::nullopt);
DecisionTable parse_table(std::string_view text,
                          const std::optional<std::string>& decision_attr = std::nullopt);

/// Canonical CSV: header, then rows with canonical tokens; decision column last.
std::string serialize_table(const DecisionTable& table);

struct ValidationReport {
    std::vector<std::pair<RowIndex, RowIndex>> conflicting_pairs;
    std::vector<std::pair<RowIndex, RowIndex>> duplicate_pairs;

    [[nodiscard]] bool consistent() const noexcept { return conflicting_pairs.empty(); }
};

ValidationReport validate(const DecisionTable& table);

/// Minimal RFC 4180 reader: comma separator, double-quote escaping, quoted
/// fields may span lines. Blank lines are skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& source);
std::string csv_escape(std::string_view field);

}  // namespace roughset
