#ifndef PULSESENSE_ERRORS_HPP
#define PULSESENSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pulsesense {

/// Base class for all recoverable computation errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user input (CLI exit code 2).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// The single pulse is a pure phase gate (|Im a| = 1); the alternating
/// sequence formula is singular and sensing is undefined.
class DegenerateSequence : public Error {
public:
    explicit DegenerateSequence(const std::string& msg) : Error(msg) {}
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

/// Adaptive integrator could not satisfy the tolerances within max_steps.
class ToleranceNotMet : public Error {
public:
    explicit ToleranceNotMet(const std::string& msg) : Error(msg) {}
};

/// Integrated propagator drifted too far from unitarity.
class UnitarityLost : public Error {
public:
    explicit UnitarityLost(const std::string& msg) : Error(msg) {}
};

/// No half-level crossing of the excitation profile in the scanned range.
class FeatureNotResolved : public Error {
public:
    explicit FeatureNotResolved(const std::string& msg) : Error(msg) {}
};

/// Requested a closed-form approximation outside the tabulated cases.
class UnsupportedCase : public Error {
public:
    explicit UnsupportedCase(const std::string& msg) : Error(msg) {}
};

/// Best least-squares residual exceeded the configured ceiling (CLI exit 4).
class NoFit : public Error {
public:
    explicit NoFit(const std::string& msg) : Error(msg) {}
};

/// Internal consistency failure; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pulsesense

#endif
