#pragma once

#include <stdexcept>
#include <string>

namespace hessian_radial {

/// Argument outside the mathematical domain of an operation (p > n, r <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke a documented precondition that is not a pure range check,
/// e.g. a nonzero slope at the origin of a radial profile.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The parameters fall outside the regime where admissible radial solutions
/// can exist (k >= 2 with mu < 0).
class AdmissibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1 + mu*s vanished inside the Volterra weight.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A user supplied nonlinearity threw or returned a non-number.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-point iteration did not settle within the iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_distance, int iterations)
        : std::runtime_error(what), last_distance_(last_distance), iterations_(iterations) {}

    double last_distance() const noexcept { return last_distance_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_distance_;
    int iterations_;
};

/// Refinement study could not produce an order (flat or non-monotone errors).
class DiagnosticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation not available for this input kind (e.g. analytic KO on a custom f).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hessian_radial
