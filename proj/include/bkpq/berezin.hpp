// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Deformation kernels on the real matrix ball and their matrix element in the
// three coordinate charts (ball, polar torus, wedge), the admissible set of
// the deformation parameter, Gram-matrix positivity diagnostics, and the
// spherical transform of the matrix element, both as a wedge Monte-Carlo
// integral and in gamma-product closed form.

#ifndef BKPQ_BEREZIN_HPP
#define BKPQ_BEREZIN_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "bkpq/estimate.hpp"
#include "bkpq/geometry.hpp"

namespace bkpq {

using Cx = std::complex<double>;

/// @brief Normalized two-point kernel
///   M_alpha(z, u) = det(1-zz^T)^{a/2} det(1-uu^T)^{a/2} / det(1-zu^T)^a.
/// Lies in (0, 1] for real ball points, with value 1 exactly when z = u.
/// @throws BranchError if det(1 - z u^T) <= 0 (outside the real chart's reach).
double kernel_M(double alpha, const BallPoint& z, const BallPoint& u);

/// @brief Matrix element in the ball chart: det(1 - z z^T)^{alpha/2}.
double b_function(double alpha, const BallPoint& z);

/// @brief Matrix element in polar coordinates: prod_k cosh^{-alpha}(t_k).
double b_function(double alpha, const TorusCoord& t);

/// @brief Matrix element in the wedge chart:
///   2^{p alpha} det(M - L L^T)^{alpha/2} / det(1 + M + N)^{alpha}.
/// @throws BranchError if det(1 + M + N) <= 0.
double b_function(double alpha, const WedgePoint& w);

/// @brief Membership of alpha in the admissible set {0, 1, ..., p-1} u
/// (p-1, infinity) where the kernel is positive definite.
bool berezin_admissible(double alpha, int p);

/// @brief Minimum eigenvalue of the Gram matrix [M_alpha(z_i, z_j)].
double gram_min_eigenvalue(double alpha, const std::vector<BallPoint>& points);

/// @brief Spherical transform of the matrix element by importance-weighted
/// Monte-Carlo over the wedge: mean of B_alpha * Psi_s * invariant density
/// against Lebesgue samples.  Convergent for alpha > p + q - 1.
/// @throws DivergenceWarning outside that range.
SphericalEstimate spherical_transform_numeric(double alpha,
                                              const Eigen::VectorXcd& s, int q,
                                              std::int64_t mc_samples,
                                              std::uint64_t seed);

/// @brief Closed form of the same transform up to one global normalization:
///   2^{p alpha} / prod_{j=1}^p Gamma(alpha - j + 1)
///     * prod_k Gamma((alpha - (p+q)/2 + 1 + s_k)/2)
///              Gamma((alpha - (p+q)/2 + 1 - s_k)/2).
/// Even in every s_k and symmetric under coordinate permutations.
/// @throws PoleError on an unmatched gamma pole.
Cx b_transform_closed(double alpha, const Eigen::VectorXcd& s, int p, int q);

}  // namespace bkpq

#endif  // BKPQ_BEREZIN_HPP
