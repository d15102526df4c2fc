#pragma once

#include <stdexcept>
#include <string>

namespace hexa {

// Bad identifiers, malformed files, non-cycles passed as cycles.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tiling parameters outside the classified ranges.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (essential set, oversized set, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration or cache limits exceeded.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedWord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hexa
