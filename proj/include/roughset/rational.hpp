#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace roughset {

/// Exact ratio used for dependency degrees, accuracies, confidences and rates.
using Rational = boost::rational<std::int64_t>;

/// Decimal rendering rounded half-up to `places` digits, trailing zeros
/// trimmed ("0.8", "1", "0.233333").
std::string to_decimal(const Rational& value, int places = 6);

/// Fixed-width decimal rendering rounded half-up ("0.96" for 48/50 at 2 places).
std::string to_fixed(const Rational& value, int places);

}  // namespace roughset
