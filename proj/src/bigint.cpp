#include "slid/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "slid/error.hpp"

namespace slid {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw FormatError("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

long double to_long_double(const BigInt& value) { return value.convert_to<long double>(); }

}  // namespace slid
