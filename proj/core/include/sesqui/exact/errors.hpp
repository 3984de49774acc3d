#ifndef SESQUI_EXACT_ERRORS_HPP
#define SESQUI_EXACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sesqui {

// Input violates an operation's precondition (bad vector, pole, non-unit, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Binary series operation on operands with different truncation orders.
class TruncationMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

// The requested quantity is not determined at the available truncation order.
class TruncationTooLow : public DomainError {
public:
    using DomainError::DomainError;
};

// Scattering completion grew past the configured term budget.
class TermCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure of the wall-crossing conventions; never
// expected on valid input.
class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed text/JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sesqui

#endif
