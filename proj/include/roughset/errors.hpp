#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace roughset {

enum class DataErrorKind {
    missing_header,
    ragged_row,
    unknown_level_token,
    unknown_decision_token,
    empty_body,
    decision_attr_not_found,
    duplicate_attribute,
    unknown_attribute,
    schema_mismatch,
    inconsistent_table,
    attribute_bound_exceeded,
    missing_object_attribute,
    invalid_argument,
    malformed_file,
};

std::string_view to_string(DataErrorKind kind) noexcept;

/// Raised for any problem with user-supplied data: malformed files, unknown
/// attribute names, vocabulary violations, violated preconditions on tables.
class DataError : public std::runtime_error {
public:
    DataError(DataErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    [[nodiscard]] DataErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    DataErrorKind kind_;
    std::string detail_;
};

}  // namespace roughset
