#pragma once

#include <stdexcept>
#include <string>

namespace isac {

/// Dimension of an input (vector length, matrix size, block count) is invalid.
class InvalidDimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numeric argument outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input violates a documented precondition (e.g. a matrix that must be
/// Hermitian is not, within tolerance).
class ContractViolationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix has an eigenvalue below the accepted near-PSD tolerance.
class NotPsdError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration file is syntactically valid but violates the schema.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& field, const std::string& what)
        : std::runtime_error("config field '" + field + "': " + what), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Constraint class blamed by an infeasibility certificate.
enum class ConstraintClass { CommunicationSinr, PerAntennaPower, TargetSinr, Unknown };

std::string to_string(ConstraintClass c);

/// The scenario's first subproblem is provably infeasible.
class InfeasibleScenarioError : public std::runtime_error {
public:
    InfeasibleScenarioError(ConstraintClass cls, const std::string& what)
        : std::runtime_error(what), class_(cls) {}
    ConstraintClass violated_class() const noexcept { return class_; }

private:
    ConstraintClass class_;
};

/// A user's SINR constraint carries no useful power at the SDP optimum;
/// rank-1 recovery for that user is undefined.
class DegenerateUserError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank-1 recovery failed (residual covariance not near-PSD).
class RecoveryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A condition that is impossible under the algorithm's invariants occurred;
/// surfaced loudly rather than repaired.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace isac
