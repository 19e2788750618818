// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Complex log-gamma and pole-aware gamma-quotient evaluation.  These are the
// numeric primitives under every density evaluation in bkpq: a Lanczos
// log-gamma valid on the cut plane, a product evaluator that cancels matched
// numerator/denominator poles exactly, the large-argument modulus asymptotic,
// and exact rational residue coefficients at the poles of Gamma.

#ifndef BKPQ_GAMMA_HPP
#define BKPQ_GAMMA_HPP

#include <complex>
#include <span>

#include "bkpq/rational.hpp"

namespace bkpq {

using Cx = std::complex<double>;

/// @brief Radius around non-positive integers treated as "at a pole" of Gamma.
inline constexpr double kPoleRadius = 1e-12;

/// @brief Log of the gamma function on the cut plane.
///
/// Real on the positive real axis.  In the reflected half-plane (Re z < 1/2)
/// the imaginary part is only determined modulo 2*pi; every consumer in bkpq
/// exponentiates, so this ambiguity is harmless.  Throws PoleError when z lies
/// within kPoleRadius of a non-positive integer.
Cx log_gamma(Cx z);

/// @brief Evaluate prod Gamma(nums[i]) / prod Gamma(dens[j]) with pole pairing.
///
/// Arguments within kPoleRadius of a non-positive integer are singular.  Each
/// singular numerator is cancelled against a singular denominator (in input
/// order); a matched pair with arguments near -na and -nb contributes the
/// exact residue-coefficient ratio (-1)^(na-nb) * nb! / na!, i.e. both factors
/// are replaced by their leading Laurent coefficients at unit approach rate.
/// Unmatched singular numerators throw PoleError; unmatched singular
/// denominators make the whole product zero.  Throws OverflowError if the
/// result magnitude exceeds double range.
Cx gamma_product(std::span<const Cx> nums, std::span<const Cx> dens);

/// @brief Large-|y| modulus asymptotic sqrt(2*pi) * |y|^(a-1/2) * exp(-pi*|y|/2)
/// for |Gamma(a + i y)|.  Throws DomainError when |y| < 1 (outside the regime
/// where the leading term is meaningful).
double gamma_modulus_asymptotic(double a, double y);

/// @brief Exact residue coefficient (-1)^n / n! of Gamma at z = -n.
///
/// Gamma(z) ~ gamma_residue_coefficient(n) / (z + n) as z -> -n.  Throws
/// DomainError for n < 0 and OverflowError when n! exceeds the exact integer
/// range (n > 20).
Rat gamma_residue_coefficient(int n);

} // namespace bkpq

#endif // BKPQ_GAMMA_HPP
