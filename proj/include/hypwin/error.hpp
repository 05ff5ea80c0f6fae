#pragma once

#include <stdexcept>
#include <string>

namespace hypwin {

/// Raised when an input parameter is outside its valid domain.
/// `parameter()` names the offending parameter so front ends can report it.
class ValidationError : public std::invalid_argument
{
public:
    ValidationError(std::string parameter, const std::string& message)
        : std::invalid_argument(parameter + ": " + message), parameter_(std::move(parameter))
    {
    }

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

/// Raised when a numerical procedure cannot produce a meaningful result
/// (solver non-convergence, too few envelope peaks, noise-floor contamination).
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace hypwin
