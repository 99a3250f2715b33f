#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weaktree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (tree codes, descriptor syntax).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on an argument was violated.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request would materialize or enumerate beyond a configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency while assembling a sequence description.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace weaktree
