#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fduffing {

/// Invalid problem setup: order out of (0,1), bad grid, unparsable flag.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solver produced a non-finite state; carries the step at which it happened.
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& scheme, std::size_t step)
        : std::runtime_error(scheme + ": non-finite state at step " + std::to_string(step)),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Error metric evaluated outside its domain (log of a value <= 0 or >= 1).
class MetricDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Reading or writing a file failed, or an input file is malformed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fduffing
