#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropgw {

/// Machine-readable failure categories. The CLI maps each to an exit code.
enum class ErrorCategory {
    DimensionMismatch,
    EmptyPolytope,
    EmptyStratum,
    Precondition,
    InvalidQuotient,
    Validation,
    OutsideComplex,
    Inconsistency,
    Gluing,
    NoComponent,
    Diagram,
    DegreeMismatch,
    UnsupportedRegime,
    Bookkeeping,
    Ledger,
    Budget,
    Parse,
    Usage,
};

std::string_view category_name(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, const std::string &message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

  private:
    ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory category, const std::string &message) {
    throw Error(category, message);
}

} // namespace tropgw
