// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// The matrix beta integral over the wedge: ratios of leading-minor powers of
// the core W = M - L L^T against leading-minor powers of 1 + M + N, with the
// invariant measure folded in.  Provides the gamma-product closed form, the
// raw integrand, a Monte-Carlo oracle, the classical volume and Dirichlet
// specializations, and a rank-reduction identity used as an exact self-check.

#ifndef BKPQ_B_INTEGRAL_HPP
#define BKPQ_B_INTEGRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "bkpq/estimate.hpp"
#include "bkpq/geometry.hpp"

namespace bkpq {

using Cx = std::complex<double>;

/// @brief Exponent data (lambda, sigma) of the integral at signature (p, q),
/// with lambda_{p+1} = sigma_{p+1} = 0 implicit.  Convergence requires
///   (q+k)/2 - 1 < Re lambda_k < Re sigma_k - (p-k)/2   for every k,
/// exactly the positivity region of the closed form's gamma arguments.
struct BIntegralParams {
    int p = 0;
    int q = 0;
    Eigen::VectorXcd lambda;
    Eigen::VectorXcd sigma;

    BIntegralParams(int p_, int q_, Eigen::VectorXcd lambda_,
                    Eigen::VectorXcd sigma_);

    /// @brief Whether the convergence strip holds for every coordinate.
    bool in_strip() const;
    /// @brief Throw DivergenceWarning unless in_strip().
    void require_strip() const;
};

/// @brief Closed form of the integral:
///   prod_k pi^{k+(q-p)/2-1} Gamma(lambda_k-(q+k)/2+1)
///          Gamma(sigma_k-lambda_k-(p-k)/2) / Gamma(sigma_k-p+k).
/// The pi power is the one forced by the rank-reduction identity (each
/// reduction step integrates out a (p+q-2)-sphere and a Dirichlet pair,
/// contributing pi^{(p+q)/2-1}); the Monte-Carlo oracle confirms it against
/// Lebesgue measure dL dM dN.
/// @throws PoleError on an unmatched gamma pole.
Cx closed_form(const BIntegralParams& params);

/// @brief Raw integrand at a wedge point, measure factor det(W)^{-(p+q)/2}
/// included:
///   prod_j [W]_j^{lambda_j-lambda_{j+1}} / [1+M+N]_j^{sigma_j-sigma_{j+1}}
///     * det(W)^{-(p+q)/2}.
/// All leading minors involved are positive reals, so powers are taken
/// through real logarithms.
/// @throws DomainError if a core minor is not positive; BranchError if a
/// leading minor of 1 + M + N fails to be positive.
Cx integrand(const BIntegralParams& params, const WedgePoint& w);

/// @brief Importance-weighted Monte-Carlo value of the integral with SE.
/// @throws DivergenceWarning when the convergence strip is violated.
SphericalEstimate monte_carlo_estimate(const BIntegralParams& params,
                                       std::int64_t n_samples,
                                       std::uint64_t seed,
                                       double proposal_scale = 1.0);

/// @brief Volume-type specialization: the wedge-side value of
/// integral of det(1-zz^T)^tau over the matrix ball, i.e.
///   2^{2 p tau} * closed_form(lambda_k = tau+(p+q)/2, sigma_k = 2 tau+p+q).
/// The ball-side Lebesgue integral equals this times a fixed Cayley constant
/// independent of tau.
/// @throws DivergenceWarning unless tau > (p+q)/2 - 1.
Cx hua_specialization(int p, int q, double tau);

/// @brief Closed form and adaptive-quadrature check of the scalar Dirichlet
/// integral  int u^{a-1} v^{b-1} (1+u+v)^{-a-b-c} du dv
///         = Gamma(a)Gamma(b)Gamma(c)/Gamma(a+b+c).
struct DirichletBetaResult {
    double closed_form = 0.0;
    double quadrature = 0.0;
    double relative_gap = 0.0;
};

/// @throws DomainError unless a, b, c > 0.
DirichletBetaResult dirichlet_beta(double a, double b, double c);

/// @brief Both sides of the rank-reduction identity
///   I_{p,q}(lambda; sigma)
///     = I_{p-1,q-1}(lambda' ; sigma') * J(lambda_p; sigma_p),
/// with lambda' = (lambda_1-1/2, ..., lambda_{p-1}-1/2),
///      sigma'  = (sigma_1-1, ..., sigma_{p-1}-1), and
///   J(x; s) = pi^{(p+q)/2-1} Gamma(x-(p+q)/2+1) Gamma(s-x) / Gamma(s).
struct RecurrenceReport {
    Cx lhs{0.0, 0.0};       ///< closed form at (p, q)
    Cx reduced{0.0, 0.0};   ///< closed form at (p-1, q-1), shifted parameters
    Cx j_factor{0.0, 0.0};  ///< the scalar factor J
    Cx ratio{0.0, 0.0};     ///< lhs / (reduced * j_factor), expected 1
};

/// @throws DomainError if p < 2 or the strip is violated; PoleError from
/// gamma evaluation.
RecurrenceReport recurrence_check(const BIntegralParams& params);

}  // namespace bkpq

#endif  // BKPQ_B_INTEGRAL_HPP
