#pragma once

#include <stdexcept>
#include <string>

namespace isodual {

// Unsupported field/tower parameters, bad CLI input. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed certificate failed (dimension mismatch, non-integer genus,
// missing iso-duality witness on a lifted code). CLI exit code 1.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation needs decomposition data that was not computed.
struct AnalysisRequiredError : std::runtime_error {
    explicit AnalysisRequiredError(const std::string& msg) : std::runtime_error(msg) {}
};

// Laurent expansion could not stabilize within the precision cap.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lift hypothesis validation failed; carries the rendered report.
struct LiftRefusedError : std::runtime_error {
    explicit LiftRefusedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace isodual
