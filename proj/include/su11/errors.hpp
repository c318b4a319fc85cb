#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

// Stable failure codes; the CLI maps them onto process exit codes and scans
// store them per grid point.
enum class ErrorCode : int {
    ok = 0,
    domain = 1,
    overflow = 2,
    truncation = 3,
    convergence = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Invalid parameter or argument outside the documented domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

// Result magnitude not representable (or guaranteed to exceed double range).
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what, double log_magnitude = 0.0)
        : Error(ErrorCode::overflow, what), log_magnitude(log_magnitude) {}
    double log_magnitude;
};

// Basis too small: truncated-tail mass above the requested tolerance.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, int n_reached, double tail_mass)
        : Error(ErrorCode::truncation, what), n_reached(n_reached), tail_mass(tail_mass) {}
    int n_reached;
    double tail_mass;
};

// Iteration or refinement failed to reach its tolerance before the cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int n_reached, double residual)
        : Error(ErrorCode::convergence, what), n_reached(n_reached), residual(residual) {}
    int n_reached;
    double residual;
};

}  // namespace su11
