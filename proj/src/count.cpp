#include "weaktree/count.hpp"

#include "weaktree/errors.hpp"

#include <limits>

namespace weaktree {

std::string to_string(const ExtendedCount& value) { return value.str(); }

ExtendedCount parse_count(std::string_view text) {
  if (text.empty()) throw ParseError("expected a decimal count", 0);
  ExtendedCount value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') throw ParseError("expected a decimal digit", i);
    value *= 10;
    value += ch - '0';
  }
  return value;
}

std::size_t to_size(const ExtendedCount& value) {
  if (value < 0 || value > std::numeric_limits<std::size_t>::max()) {
    throw CapacityError("count " + value.str() + " does not fit a machine index");
  }
  return value.convert_to<std::size_t>();
}

}  // namespace weaktree
