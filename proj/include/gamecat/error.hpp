#pragma once

#include <stdexcept>
#include <string>

namespace gamecat {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input documents (JSON syntax, missing fields, bad types).
struct parse_error : error {
  using error::error;
};

// Semantic problems: broken invariants, unknown identifiers,
// precondition failures.
struct validation_error : error {
  using error::error;
};

// A search exceeded its configured budget.
struct resource_error : error {
  using error::error;
};

}  // namespace gamecat
