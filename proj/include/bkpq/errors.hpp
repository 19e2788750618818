// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Exception hierarchy shared by every bkpq module.  Two families exist so the
// command-line driver can map failures to exit codes uniformly: precondition
// violations (bad shapes, out-of-domain arguments, exhausted budgets) and
// numeric failures (poles, overflow, ill-conditioning, divergent integrals).

#ifndef BKPQ_ERRORS_HPP
#define BKPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bkpq {

/// @brief Root of all bkpq exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// @brief A caller violated a documented precondition (exit code 2 in the CLI).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// @brief A computation failed numerically (exit code 3 in the CLI).
class NumericError : public Error {
public:
    using Error::Error;
};

/// @brief Argument outside the mathematical domain of an operation.
class DomainError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief Matrix or vector dimensions inconsistent with the requested operation.
class ShapeError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief Index outside the valid range for a symbolic variable or container.
class IndexError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief Requested work exceeds the supported desk-scale budget.
class BudgetError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief Parameter combination is structurally degenerate and unsupported.
class DegenerateError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief A claimed simple pole has order different from one.
class PoleOrderError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief The expression is regular at a claimed pole location.
class NoPoleError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// @brief Evaluation at or too close to a pole of the gamma function.
class PoleError : public NumericError {
public:
    using NumericError::NumericError;
};

/// @brief Intermediate or final value exceeds double-precision range.
class OverflowError : public NumericError {
public:
    using NumericError::NumericError;
};

/// @brief A matrix required to be invertible is singular or near-singular.
class SingularError : public NumericError {
public:
    using NumericError::NumericError;
};

/// @brief A complex logarithm or power left its documented branch domain.
class BranchError : public NumericError {
public:
    using NumericError::NumericError;
};

/// @brief An integral or estimator is divergent for the supplied parameters.
class DivergenceWarning : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace bkpq

#endif // BKPQ_ERRORS_HPP
