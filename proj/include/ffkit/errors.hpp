#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ffkit {

// Base for all library errors. `code()` is a stable machine-readable name
// (e.g. "ZeroInverse", "SingularCurve") used by the CLI when reporting.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Violated mathematical precondition (zero inverse, singular curve, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Request exceeds an exhaustive-computation bound (field too large, ...).
class BoundError : public Error {
public:
    using Error::Error;
};

} // namespace ffkit
