#pragma once

#include <stdexcept>
#include <string>

namespace lipscope {

// Raised when a computation fails numerically: singular systems, failed
// convergence, diverging training runs.  Malformed arguments (bad shapes,
// out-of-range parameters) raise std::invalid_argument instead, so callers
// can tell usage errors from numeric ones.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative methods that hit their iteration cap report the state they
// stopped in, so the failure is diagnosable.
class ConvergenceError : public NumericError {
public:
    ConvergenceError(const std::string& what, double last_estimate, double last_residual)
        : NumericError(what), last_estimate(last_estimate), last_residual(last_residual) {}

    double last_estimate;
    double last_residual;
};

}  // namespace lipscope
