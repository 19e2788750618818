// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Deterministic tensor-product integration over small products of real axes
// for integrands with exponential decay in every coordinate, plus a generic
// weighted Monte-Carlo mean with standard-error tracking.  The
// axis rules exploit even symmetry exactly: a function odd in any coordinate
// integrates to zero to rounding, because mirrored nodes are evaluated at
// bitwise-negated abscissae and summed in a fixed pairing order.

#ifndef BKPQ_QUADRATURE_HPP
#define BKPQ_QUADRATURE_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bkpq/errors.hpp"
#include "bkpq/estimate.hpp"
#include "bkpq/rng.hpp"

namespace bkpq {

using Cx = std::complex<double>;

/// @brief Quadrature rule family for one axis.
enum class AxisRule {
    trapezoid,       ///< uniform nodes, trapezoid weights
    gauss_legendre,  ///< Gauss-Legendre nodes scaled to [-R, R]
};

/// @brief One-dimensional grid replicated across every axis of the integral.
struct AxisGrid {
    double truncation_radius;  ///< half-width R of the integration box (> 0)
    int nodes_per_axis;        ///< node count per axis (>= 8)
    AxisRule rule = AxisRule::gauss_legendre;

    AxisGrid(double radius, int nodes, AxisRule rule_ = AxisRule::gauss_legendre);
};

/// @brief Nodes and weights of the grid's rule on [-R, R], symmetric about 0:
/// node i and node n-1-i are exact IEEE negations with equal weights.
std::vector<std::pair<double, double>> axis_nodes(const AxisGrid& grid);

/// @brief Deterministic integral value plus a bound on the discarded tail.
struct IntegralResult {
    Cx value{0.0, 0.0};
    double truncation_bound = 0.0;  ///< estimate of the mass outside the box
};

/// @brief Integrand sample carrying a per-node statistical spread, used when
/// the "function" being integrated is itself a Monte-Carlo estimate.
struct NodeValue {
    Cx value{0.0, 0.0};
    double spread = 0.0;  ///< one standard error of the node value (>= 0)
};

/// @brief Tensor-product integral of f over [-R, R]^dims.
///
/// The reduction pairs each node with its mirror image across every axis, so
/// even/odd symmetry is exploited exactly.  The truncation bound estimates the
/// tail past R per axis and per side by fitting an exponential decay rate to
/// the sums of |f| over the boundary face at R and over the parallel slice one
/// unit inside, then integrating the fitted tail; the fitted rate is clamped
/// to [0.2, 10] so flat or noisy samples still give a finite bound.
/// @throws BudgetError if dims > 3 (use mc_mean beyond desk scale).
IntegralResult integrate_axes(const std::function<Cx(std::span<const double>)>& f,
                              int dims, const AxisGrid& grid);

/// @brief Result of integrating a statistically noisy integrand.
struct IntegralResultWithSpread {
    Cx value{0.0, 0.0};
    double truncation_bound = 0.0;
    double spread = 0.0;  ///< sum of |weight| * node spread (worst-case SE)
};

/// @brief Overload for integrands that return a NodeValue; the node spreads
/// accumulate into a conservative standard-error bound sum |w_i| * spread_i.
IntegralResultWithSpread integrate_axes(
    const std::function<NodeValue(std::span<const double>)>& f, int dims,
    const AxisGrid& grid);

/// @brief Weighted Monte-Carlo mean (1/n) sum w_i f(x_i) with standard error.
///
/// The sampler is any callable on Rng& returning a (point, weight) pair; f
/// maps a point to a complex value.  Evaluation is sequential in sample order,
/// so the result is bitwise deterministic for a fixed seed.
template <typename F, typename Sampler>
SphericalEstimate mc_mean(F&& f, Sampler&& sampler, std::int64_t n,
                          std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("mc_mean: sample count must be at least 1");
    }
    Rng rng(seed);
    Cx mean{0.0, 0.0};
    double m2_re = 0.0;
    double m2_im = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        auto [point, weight] = sampler(rng);
        const Cx x = weight * f(point);
        const Cx delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        const Cx delta2 = x - mean;
        m2_re += delta.real() * delta2.real();
        m2_im += delta.imag() * delta2.imag();
    }
    SphericalEstimate out;
    out.value = mean;
    out.n_samples = n;
    out.seed = seed;
    if (n > 1) {
        const double var = (m2_re + m2_im) / static_cast<double>(n - 1);
        out.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    }
    return out;
}

}  // namespace bkpq

#endif  // BKPQ_QUADRATURE_HPP
