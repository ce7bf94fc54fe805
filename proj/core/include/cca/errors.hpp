#pragma once

#include <stdexcept>
#include <string>

namespace cca {

// Thrown for every recoverable input problem: malformed expressions, ring
// mismatches, domain violations (zero polynomial where nonzero is required,
// void complexes, ...). Internal consistency failures throw std::logic_error
// instead, since they indicate a bug rather than bad input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cca
