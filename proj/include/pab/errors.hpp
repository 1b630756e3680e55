#pragma once

#include <stdexcept>
#include <string>

namespace pab {

// Input that violates a documented precondition (bad parameters, malformed
// sets, templates that are not templates, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A size guard refused the computation.  The message names the limiting
// parameter so callers know which knob to override.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& parameter, long long value, long long limit)
        : std::runtime_error(parameter + " = " + std::to_string(value) +
                             " exceeds guard limit " + std::to_string(limit) +
                             " (raise the guard to override)"),
          parameter_(parameter), value_(value), limit_(limit) {}

    const std::string& parameter() const { return parameter_; }
    long long value() const { return value_; }
    long long limit() const { return limit_; }

private:
    std::string parameter_;
    long long value_;
    long long limit_;
};

// A structural assertion failed mid-pipeline: a dominating set that does not
// dominate, a peeling that stalls, a vertex whose trace fits no class.  These
// signal that the input is outside the regime the caller asserted, not a bug
// in the caller's arguments.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pab
