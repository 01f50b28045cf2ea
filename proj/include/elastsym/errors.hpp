#pragma once

#include <stdexcept>
#include <string>

namespace elastsym {

/// Mismatched jet shapes, matrix dimensions or degrees.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Division/sqrt/inversion of a quantity whose constant term is unusable.
/// The message names the offending quantity.
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Not enough derivative budget left on a jet for the requested formula.
struct BudgetError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Measured data (or an oracle) violates the admissibility assumptions.
struct DataInconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical breakdown: ill-conditioned solve, step-controller underflow, ...
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed experiment configuration; message carries the field path.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace elastsym
