#pragma once

#include <stdexcept>
#include <string>

namespace cbg {

// Input text/JSON could not be understood. CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A matrix that must be invertible is not. CLI exit code 3.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard on an exponential-cost routine was exceeded. CLI exit code 4.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A proven internal invariant failed at runtime; always a defect, never a
// user error. CLI exit code 5.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cbg
