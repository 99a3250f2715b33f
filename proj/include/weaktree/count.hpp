#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace weaktree {

/// Exact nonnegative integer used for positions, labels and family parameters.
using ExtendedCount = boost::multiprecision::cpp_int;

std::string to_string(const ExtendedCount& value);

/// Parses a decimal literal; rejects signs, whitespace and empty input.
ExtendedCount parse_count(std::string_view text);

/// Narrows to size_t, throwing CapacityError when the value does not fit.
std::size_t to_size(const ExtendedCount& value);

inline ExtendedCount pow2(unsigned exponent) {
  ExtendedCount result = 1;
  result <<= exponent;
  return result;
}

}  // namespace weaktree
