#pragma once

#include <stdexcept>
#include <string>

namespace quivermod {

/// Base class for all library errors (bad shapes, field mismatches,
/// violated preconditions, malformed input).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed its budget.
/// The predicted enumeration size is computed before any work starts.
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(const std::string& what, std::string predicted_size)
        : Error(what), predicted_size_(std::move(predicted_size)) {}

    const std::string& predicted_size() const { return predicted_size_; }

  private:
    std::string predicted_size_;
};

/// Raised when an input document fails structural validation.
class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace quivermod
