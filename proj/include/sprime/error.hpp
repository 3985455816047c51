#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sprime {

enum class ErrorKind {
    invalid_ring,
    invalid_element,
    invalid_module,
    invalid_multiplicative_set,
    not_an_ideal,
    unsupported,
    cap_exceeded,
    precondition_violated,
    internal_error,
    syntax_error,
    semantic_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to a stable exit code and message prefix.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sprime
