#pragma once

#include <stdexcept>
#include <string>

namespace normcomp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched or invalid matrix/partition dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Invalid parameter, specification or configuration value.
struct ValidationError : Error {
    using Error::Error;
};

/// An operation required a (strictly) positive definite operand and got a
/// singular one.
struct SingularityError : Error {
    using Error::Error;
};

/// Iterative procedure exhausted its budget; carries the final residual.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

/// A post-hoc residual check failed (ill-conditioned input).
struct ConditioningError : Error {
    ConditioningError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

/// Internal numerical breakdown: a quantity that is positive in exact
/// arithmetic came out indefinite beyond tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

/// File or JSON parsing problem.
struct IoError : Error {
    using Error::Error;
};

}  // namespace normcomp
