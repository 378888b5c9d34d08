#pragma once

#include <stdexcept>
#include <string>

namespace mqq {

// Invalid construction parameters (wrong |A|, r out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A brute-force routine was asked to run above its ground-size cap.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Malformed matroid file or element list.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mqq
