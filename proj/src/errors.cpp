#include <roughset/errors.hpp>
#include <roughset/rational.hpp>

#include <cstdlib>

namespace roughset {

std::string_view to_string(DataErrorKind kind) noexcept {
    switch (kind) {
    case DataErrorKind::missing_header: return "missing header";
    case DataErrorKind::ragged_row: return "ragged row";
    case DataErrorKind::unknown_level_token: return "unknown level token";
    case DataErrorKind::unknown_decision_token: return "unknown decision token";
    case DataErrorKind::empty_body: return "empty body";
    case DataErrorKind::decision_attr_not_found: return "decision attribute not found";
    case DataErrorKind::duplicate_attribute: return "duplicate attribute";
    case DataErrorKind::unknown_attribute: return "unknown attribute";
    case DataErrorKind::schema_mismatch: return "schema mismatch";
    case DataErrorKind::inconsistent_table: return "inconsistent table";
    case DataErrorKind::attribute_bound_exceeded: return "attribute bound exceeded";
    case DataErrorKind::missing_object_attribute: return "missing object attribute";
    case DataErrorKind::invalid_argument: return "invalid argument";
    case DataErrorKind::malformed_file: return "malformed file";
    }
    return "data error";
}

namespace {

// |value| scaled by 10^places, rounded half-up on the magnitude.
std::int64_t scaled_magnitude(const Rational& value, int places) {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const std::int64_t num = std::llabs(value.numerator());
    const std::int64_t den = value.denominator();
    const std::int64_t whole = num / den;
    const std::int64_t rem = num % den;
    // rem * scale fits: den stays small for row-count ratios.
    const std::int64_t frac_scaled = rem * scale;
    std::int64_t frac = frac_scaled / den;
    if ((frac_scaled % den) * 2 >= den) ++frac;
    return whole * scale + frac;
}

std::string render(std::int64_t scaled, int places, bool negative) {
    std::string digits = std::to_string(scaled);
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (negative && scaled != 0) digits.insert(0, "-");
    return digits;
}

}  // namespace

std::string to_fixed(const Rational& value, int places) {
    return render(scaled_magnitude(value, places), places, value < 0);
}

std::string to_decimal(const Rational& value, int places) {
    std::string s = to_fixed(value, places);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

}  // namespace roughset
