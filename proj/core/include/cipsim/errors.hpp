#pragma once

#include <stdexcept>
#include <string>

namespace cipsim {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched or invalid matrix/vector dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A matrix required to be invertible is singular or too ill-conditioned.
/// Carries the estimated condition number when one is available.
struct SingularMatrixError : Error {
    double condition = 0.0;
    SingularMatrixError(const std::string& msg, double cond)
        : Error(msg), condition(cond) {}
};

/// The closed-form kernel path cannot be used for this model/template;
/// callers should fall back to the general block-exponential path.
struct ClosedFormUnavailable : Error {
    using Error::Error;
};

/// A kernel denominator (frequency deviation or ROCOF) is below the
/// zero-guard at the requested time.
struct SingularitySignal : Error {
    double time = 0.0;
    double denominator = 0.0;
    SingularitySignal(const std::string& msg, double t, double den)
        : Error(msg), time(t), denominator(den) {}
};

/// Iterative solver failed to converge; carries the last residual norm.
struct ConvergenceError : Error {
    double residual = 0.0;
    ConvergenceError(const std::string& msg, double res)
        : Error(msg), residual(res) {}
};

/// A simulation aborted mid-run; carries the last valid time.
struct SimulationError : Error {
    double last_valid_time = 0.0;
    SimulationError(const std::string& msg, double t)
        : Error(msg), last_valid_time(t) {}
};

/// Invalid run configuration; carries the offending field path.
struct ConfigError : Error {
    std::string field;
    ConfigError(const std::string& msg, std::string field_path)
        : Error(msg), field(std::move(field_path)) {}
};

}  // namespace cipsim
