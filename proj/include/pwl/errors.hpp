#pragma once

#include <stdexcept>
#include <string>

namespace pwl {

// Two error families, matching the CLI exit codes: configuration problems
// (exit 2) and numeric failures discovered at run time (exit 3).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Step size violates the resolution bound of the fixed-step integrator (or
// the stability bound of the state-vector propagator).
struct StepTooLarge : ConfigError {
    explicit StepTooLarge(const std::string& msg) : ConfigError(msg) {}
};

// Input record too short for the requested analysis.
struct TooShort : ConfigError {
    explicit TooShort(const std::string& msg) : ConfigError(msg) {}
};

// Closed-form energy-flow scenario contradicts the configured coupling signs.
struct InvalidScenario : ConfigError {
    explicit InvalidScenario(const std::string& msg) : ConfigError(msg) {}
};

// Operation requires a nonzero coupling product.
struct ZeroCoupling : ConfigError {
    explicit ZeroCoupling(const std::string& msg) : ConfigError(msg) {}
};

// A sample overflowed or became NaN during integration.
struct NonFinite : NumericError {
    explicit NonFinite(const std::string& msg) : NumericError(msg) {}
};

// Growth-rate regression found no statistically clean positive slope.
struct NotGrowing : NumericError {
    explicit NotGrowing(const std::string& msg) : NumericError(msg) {}
};

// Population reached the Fock-space cutoff; results beyond are untrustworthy.
struct TruncationBreach : NumericError {
    explicit TruncationBreach(const std::string& msg) : NumericError(msg) {}
};

}  // namespace pwl
