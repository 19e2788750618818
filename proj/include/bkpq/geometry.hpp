// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Matrix models of the indefinite-orthogonal symmetric space at signature
// (p, q): the group of J-isometries, the operator-norm matrix ball it acts on
// by fractional-linear maps, the unbounded wedge realization reached through a
// Cayley transform, polar (torus) coordinates, Haar sampling on the maximal
// compact subgroup, invariant measure densities, and an importance sampler
// for wedge integrals.

#ifndef BKPQ_GEOMETRY_HPP
#define BKPQ_GEOMETRY_HPP

#include <Eigen/Dense>

#include "bkpq/rng.hpp"

namespace bkpq {

/// @brief J-isometry test: g^T J g = J with J = diag(I_p, -I_q), within tol.
bool group_membership(const Eigen::MatrixXd& g, int p, int q, double tol = 1e-10);

/// @brief Element of the isometry group at signature (p, q); the constructor
/// validates shape and membership (ShapeError / DomainError).
struct GroupElement {
    Eigen::MatrixXd mat;
    int p = 0;
    int q = 0;
    GroupElement(Eigen::MatrixXd g, int p_, int q_);

    Eigen::MatrixXd block_a() const { return mat.topLeftCorner(p, p); }
    Eigen::MatrixXd block_b() const { return mat.topRightCorner(p, q); }
    Eigen::MatrixXd block_c() const { return mat.bottomLeftCorner(q, p); }
    Eigen::MatrixXd block_d() const { return mat.bottomRightCorner(q, q); }
};

/// @brief Point of the p x q matrix ball (operator norm strictly below one).
struct BallPoint {
    Eigen::MatrixXd z;
    int p = 0;
    int q = 0;
    BallPoint(Eigen::MatrixXd z_, int p_, int q_);
};

/// @brief Point of the wedge realization: blocks (L, M, N) with M symmetric,
/// N antisymmetric, and M - L L^T positive definite.
///
/// The core W = M - L L^T and its Cholesky factor are fixed at construction.
/// When a caller already holds the factor exactly (samplers do), from_cholesky
/// avoids both the cancellation of recovering a small W from two large
/// summands and the refactorization of an ill-conditioned product.
struct WedgePoint {
    Eigen::MatrixXd L;  ///< p x (q-p)
    Eigen::MatrixXd M;  ///< p x p symmetric
    Eigen::MatrixXd N;  ///< p x p antisymmetric
    int p = 0;
    int q = 0;
    WedgePoint(Eigen::MatrixXd L_, Eigen::MatrixXd M_, Eigen::MatrixXd N_, int p_, int q_);

    /// @brief Build from a lower-triangular Cholesky factor C of the core
    /// (strictly positive finite diagonal), setting M = C C^T + L L^T.
    static WedgePoint from_cholesky(Eigen::MatrixXd L_, Eigen::MatrixXd C_,
                                    Eigen::MatrixXd N_, int p_, int q_);

    /// @brief The positive-definite core W = M - L L^T.
    const Eigen::MatrixXd& core() const { return W; }

    /// @brief Logs of the leading principal minors of the core, exact from
    /// the stored Cholesky factor (entry j is log det of the (j+1) block).
    Eigen::VectorXd core_log_minors() const;

  private:
    WedgePoint() = default;
    Eigen::MatrixXd W;  ///< cached core, set once at construction
    Eigen::MatrixXd C;  ///< cached lower Cholesky factor of the core
};

/// @brief Canonical polar coordinates: entries descending, in [0, 20].
struct TorusCoord {
    Eigen::VectorXd t;
    explicit TorusCoord(Eigen::VectorXd t_);

    /// @brief Canonicalize an arbitrary sign/order pattern (absolute values,
    /// sorted descending).
    static TorusCoord canonical(Eigen::VectorXd raw);
};

/// @brief One-parameter torus element: hyperbolic rotations in the k-th
/// mixed plane with angles t_k.
GroupElement torus_element(const TorusCoord& t, int p, int q);

/// @brief Fractional-linear action z -> (a + z c)^{-1} (b + z d).  Throws
/// SingularError when a + z c is ill-conditioned (condition number > 1e12).
BallPoint mobius_action(const GroupElement& g, const BallPoint& z);

/// @brief Cayley transform of a ball point into the wedge realization.
WedgePoint cayley_to_wedge(const BallPoint& z);

/// @brief Logs of the leading principal minors of the wedge core W for the
/// Cayley image of a raw ball matrix (fast path used by spherical averages).
/// Throws DomainError if a minor fails to be positive.
Eigen::VectorXd cayley_log_minors(const Eigen::MatrixXd& z, int p, int q);

/// @brief Polar coordinates of a group element via the singular values of its
/// ball image; throws DomainError when a coordinate would exceed 20.
TorusCoord kak_coordinates(const GroupElement& g);

/// @brief A group element moving the origin to z (torus times compact).
GroupElement transporter(const BallPoint& z);

/// @brief Haar-distributed element of the maximal compact subgroup
/// (block-diagonal orthogonal pair), via QR with sign-fixed diagonal.
GroupElement haar_sample_k(int p, int q, Rng& rng);

/// @brief Invariant measure density det(1 - z z^T)^{-(p+q)/2} on the ball.
double ball_measure_density(const BallPoint& z);

/// @brief Invariant measure density det(M - L L^T)^{-(p+q)/2} on the wedge.
double wedge_measure_density(const WedgePoint& w);

/// @brief Importance sample for Lebesgue wedge integrals.
///
/// The core is drawn through its Cholesky factor with log-Student-t(4)
/// diagonal and Student-t(3) strict lower triangle; L and N entries are
/// Student-t(3).  All scales are multiplied by proposal_scale.  These tails
/// are heavier than any integrand of wedge type (polynomially decaying in the
/// blocks, exponentially decaying in log-coordinates of the core), so
/// importance weights have finite variance.  weight = 1 / proposal density
/// with respect to Lebesgue measure dL dM dN.
struct WedgeSample {
    WedgePoint w;
    double weight = 0.0;
};
WedgeSample sample_wedge(int p, int q, double proposal_scale, Rng& rng);

} // namespace bkpq

#endif // BKPQ_GEOMETRY_HPP
