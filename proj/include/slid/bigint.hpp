#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace slid {

/// Exact nonnegative integer type used for sequence terms, sums and counts.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);

/// Parses an unsigned decimal literal. Throws FormatError on anything else.
BigInt parse_decimal(std::string_view text);

/// Nearest long double; used only for ratios and logs.
long double to_long_double(const BigInt& value);

}  // namespace slid
