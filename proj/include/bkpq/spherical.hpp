// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Eigenfunctions of the triangular subgroup on the wedge realization and the
// spherical functions obtained by averaging them over the maximal compact
// subgroup.  The average is taken by Monte-Carlo over Haar samples; one batch
// of samples serves every spectral parameter (common random numbers), which
// keeps downstream integrands smooth in s and makes modulus inequalities hold
// termwise.

#ifndef BKPQ_SPHERICAL_HPP
#define BKPQ_SPHERICAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "bkpq/estimate.hpp"
#include "bkpq/geometry.hpp"

namespace bkpq {

using Cx = std::complex<double>;

/// @brief The distinguished spectral point (rho_1, ..., rho_p) with
/// rho_k = (p+q)/2 - k; the eigenfunction with this parameter is constant.
Eigen::VectorXd rho_vector(int p, int q);

/// @brief Exponents e_1..e_p attached to the leading principal minors of the
/// wedge core W = M - L L^T:
///   e_j = (s_{p-j} - s_{p-j+1} - 1)/2 for j < p,
///   e_p = ((p+q)/2 - 1 - s_1)/2,
/// so that e == 0 exactly at s = rho_vector(p, q).
Eigen::VectorXcd psi_exponents(const Eigen::VectorXcd& s, int p, int q);

/// @brief Triangular-subgroup eigenfunction: product of the leading minors of
/// the wedge core raised to the exponents above (positive reals to complex
/// powers, so no branch ambiguity).  Equals 1 at the base point for every s,
/// and 1 everywhere at s = rho.
/// @throws DomainError if a leading minor of the core is not positive.
Cx psi_eigenfunction(const Eigen::VectorXcd& s, const WedgePoint& w);

/// @brief A reusable batch of Haar samples for spherical-function estimates
/// at one torus point: row i holds the log-minors of the core at k_i moving
/// the torus point, so estimate(s) is a deterministic function of the batch.
struct SphericalBatch {
    int p = 0;
    int q = 0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    Eigen::MatrixXd log_minors;  ///< n_samples x p

    /// @brief Draw the batch at the torus point t (z_t = [tanh(t) diag | 0]).
    SphericalBatch(int p_, int q_, const TorusCoord& t, std::int64_t n,
                   std::uint64_t seed_);

    /// @brief Monte-Carlo mean of exp(row * e(s)) with one standard error.
    SphericalEstimate estimate(const Eigen::VectorXcd& s) const;
};

/// @brief Spherical function Phi_s(t): Haar average of the eigenfunction over
/// the compact subgroup orbit of the torus point.  Exactly 1 with zero spread
/// at t = 0 (the orbit is the base point) and at s = rho (constant
/// eigenfunction).
SphericalEstimate spherical_function(const Eigen::VectorXcd& s,
                                     const TorusCoord& t, int q,
                                     std::int64_t n_samples,
                                     std::uint64_t seed);

/// @brief Phi_{Re s}(t) - |Phi_s(t)| computed on one shared sample batch, so
/// the termwise modulus bound makes the result non-negative up to rounding.
double spherical_bound_margin(const Eigen::VectorXcd& s, const TorusCoord& t,
                              int q, std::int64_t n_samples,
                              std::uint64_t seed);

/// @brief Deterministic rank-one (p = 1) spherical-function evaluator at a
/// fixed torus point.
///
/// For p = 1 the compact-group average collapses to one dimension: the moved
/// ball point is tanh(t) times a uniform unit row vector u, and the wedge
/// minor depends on u only through its first coordinate x, whose marginal
/// density on [-1, 1] is proportional to (1 - x^2)^{(q-3)/2}.  The table holds
/// a Gauss-Jacobi rule for that weight (two equal atoms at +-1 when q = 1),
/// with the minor logs precomputed per node, so evaluating many spectral
/// parameters against one table mirrors the shared-batch contract of the
/// Monte-Carlo route with the statistical error replaced by quadrature error
/// far below double precision at the default node count.
struct Rank1Table {
    int q = 0;
    double t = 0.0;
    Eigen::VectorXd log_minors;  ///< log of the wedge minor per node
    Eigen::VectorXd weights;     ///< probability weights (sum to 1)

    /// @throws DomainError for q < 1, nodes < 2, or non-finite t.
    Rank1Table(double t_, int q_, int nodes = 256);

    /// @brief Weighted average of exp(e(s) * log_minor) over the nodes.
    Cx evaluate(Cx s) const;
};

/// @brief One-off deterministic rank-one evaluation (builds a table per call).
Cx spherical_function_rank1(Cx s, double t, int q, int nodes = 256);

}  // namespace bkpq

#endif  // BKPQ_SPHERICAL_HPP
