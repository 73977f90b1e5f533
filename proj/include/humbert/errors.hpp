#pragma once

#include <stdexcept>
#include <string>

namespace humbert {

// Exhaustive sweep asked for a size beyond the declared cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Working precision cannot certify the requested tolerance.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace humbert
