#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace curvkit {

/// Error thrown when an operation's geometric preconditions fail.
/// `name()` is a stable identifier ("OutOfHemisphere", "NotCollinear", ...)
/// suitable for matching in tests and for the CLI diagnostic stream.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace curvkit
