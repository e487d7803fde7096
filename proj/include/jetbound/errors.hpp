#pragma once

#include <stdexcept>
#include <string>

namespace jetbound {

// Bad caller input: malformed polynomials, out-of-range indices, inadmissible
// weights, dimension mismatches.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jetbound
