#pragma once

#include <stdexcept>
#include <string>

namespace veronese {

// Precondition violations (bad r/d ranges, zero polynomial where nonzero is
// required, shape mismatches). CLI maps these to exit code 2.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A series prefix is not the expansion of any numerator within the stated
// degree bound. CLI exit code 1.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// revlex_realize input failed the Kruskal-Katona test. CLI exit code 1.
struct NotAnFVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured face budget. CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace veronese
