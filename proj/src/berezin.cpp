// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/berezin.hpp"

#include <cmath>
#include <span>

#include "bkpq/errors.hpp"
#include "bkpq/gamma.hpp"
#include "bkpq/quadrature.hpp"
#include "bkpq/spherical.hpp"

namespace bkpq {

double kernel_M(double alpha, const BallPoint& z, const BallPoint& u) {
    const int p = z.p;
    if (u.p != p || u.q != z.q) {
        throw ShapeError("kernel_M: mismatched ball shapes");
    }
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(p, p);
    const double dz = (eye - z.z * z.z.transpose()).determinant();
    const double du = (eye - u.z * u.z.transpose()).determinant();
    const double dzu = (eye - z.z * u.z.transpose()).determinant();
    if (!(dzu > 0.0)) {
        throw BranchError("kernel_M: det(1 - z u^T) is not positive");
    }
    return std::exp(0.5 * alpha * (std::log(dz) + std::log(du)) -
                    alpha * std::log(dzu));
}

double b_function(double alpha, const BallPoint& z) {
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(z.p, z.p);
    const double det = (eye - z.z * z.z.transpose()).determinant();
    return std::exp(0.5 * alpha * std::log(det));
}

double b_function(double alpha, const TorusCoord& t) {
    double log_value = 0.0;
    for (Eigen::Index k = 0; k < t.t.size(); ++k) {
        log_value -= alpha * std::log(std::cosh(t.t(k)));
    }
    return std::exp(log_value);
}

double b_function(double alpha, const WedgePoint& w) {
    const int p = w.p;
    const double log_core_det = w.core_log_minors()(p - 1);
    const Eigen::MatrixXd denom =
        Eigen::MatrixXd::Identity(p, p) + w.M + w.N;
    const double denom_det = denom.determinant();
    if (!(denom_det > 0.0)) {
        throw BranchError("b_function: det(1 + M + N) is not positive");
    }
    return std::exp(p * alpha * std::log(2.0) + 0.5 * alpha * log_core_det -
                    alpha * std::log(denom_det));
}

bool berezin_admissible(double alpha, int p) {
    if (alpha > static_cast<double>(p - 1)) {
        return true;
    }
    const double nearest = std::round(alpha);
    return std::abs(alpha - nearest) < 1e-12 && nearest >= 0.0 &&
           nearest <= static_cast<double>(p - 1);
}

double gram_min_eigenvalue(double alpha, const std::vector<BallPoint>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 1) {
        throw DomainError("gram_min_eigenvalue: need at least one point");
    }
    Eigen::MatrixXd gram(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double value = kernel_M(alpha, points[static_cast<size_t>(i)],
                                          points[static_cast<size_t>(j)]);
            gram(i, j) = value;
            gram(j, i) = value;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    if (solver.info() != Eigen::Success) {
        throw SingularError("gram_min_eigenvalue: eigensolver failed");
    }
    return solver.eigenvalues().minCoeff();
}

SphericalEstimate spherical_transform_numeric(double alpha,
                                              const Eigen::VectorXcd& s, int q,
                                              std::int64_t mc_samples,
                                              std::uint64_t seed) {
    const int p = static_cast<int>(s.size());
    if (p < 1 || q < p) {
        throw DomainError("spherical_transform_numeric: require 1 <= p <= q");
    }
    if (!(alpha > static_cast<double>(p + q - 1))) {
        throw DivergenceWarning(
            "spherical_transform_numeric: integral diverges for alpha <= p+q-1");
    }
    const auto integrand = [alpha, &s](const WedgePoint& w) -> Cx {
        return b_function(alpha, w) * psi_eigenfunction(s, w) *
               wedge_measure_density(w);
    };
    const auto sampler = [p, q](Rng& rng) {
        WedgeSample sample = sample_wedge(p, q, 1.0, rng);
        return std::make_pair(sample.w, sample.weight);
    };
    return mc_mean(integrand, sampler, mc_samples, seed);
}

Cx b_transform_closed(double alpha, const Eigen::VectorXcd& s, int p, int q) {
    if (s.size() != p) {
        throw ShapeError("b_transform_closed: spectral parameter must have length p");
    }
    const double hd = 0.5 * (p + q);
    std::vector<Cx> nums;
    nums.reserve(static_cast<size_t>(2 * p));
    for (int k = 0; k < p; ++k) {
        nums.push_back(0.5 * (alpha - hd + 1.0 + s(k)));
        nums.push_back(0.5 * (alpha - hd + 1.0 - s(k)));
    }
    std::vector<Cx> dens;
    dens.reserve(static_cast<size_t>(p));
    for (int j = 1; j <= p; ++j) {
        dens.push_back(Cx(alpha - j + 1.0, 0.0));
    }
    const Cx product = gamma_product(std::span<const Cx>(nums.data(), nums.size()),
                                     std::span<const Cx>(dens.data(), dens.size()));
    return std::exp2(p * alpha) * product;
}

}  // namespace bkpq
