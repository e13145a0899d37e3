#ifndef VSTRATA_ERRORS_HPP
#define VSTRATA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vstrata {

// Malformed or out-of-range arguments (dimension mismatch, bound violation, bad JSON field).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A scheme component kind that the requested operation does not handle.
class UnsupportedComponent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A denominator vanished modulo the probe prime; retry with another prime.
class ModularDenominatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random sampling kept producing degenerate configurations.
class ResampleExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact check failed, so no certificate is issued. what() names the failing claim.
class CertificateRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two exact routes that must agree did not. Indicates a bug, never a property of the input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace vstrata

#endif // VSTRATA_ERRORS_HPP
