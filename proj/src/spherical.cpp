// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/spherical.hpp"

#include <cmath>

#include "bkpq/errors.hpp"
#include "bkpq/rng.hpp"

namespace bkpq {

Eigen::VectorXd rho_vector(int p, int q) {
    if (p < 1 || q < p) {
        throw DomainError("rho_vector: require 1 <= p <= q");
    }
    Eigen::VectorXd rho(p);
    for (int k = 1; k <= p; ++k) {
        rho(k - 1) = 0.5 * (p + q) - k;
    }
    return rho;
}

Eigen::VectorXcd psi_exponents(const Eigen::VectorXcd& s, int p, int q) {
    if (s.size() != p) {
        throw ShapeError("psi_exponents: spectral parameter must have length p");
    }
    if (p < 1 || q < p) {
        throw DomainError("psi_exponents: require 1 <= p <= q");
    }
    Eigen::VectorXcd e(p);
    for (int j = 0; j + 1 < p; ++j) {
        e(j) = 0.5 * (s(p - j - 2) - s(p - j - 1) - 1.0);
    }
    const double rho1 = 0.5 * (p + q) - 1;
    e(p - 1) = 0.5 * (rho1 - s(0));
    return e;
}

Cx psi_eigenfunction(const Eigen::VectorXcd& s, const WedgePoint& w) {
    const int p = static_cast<int>(w.M.rows());
    const int q = p + static_cast<int>(w.L.cols());
    const Eigen::VectorXcd e = psi_exponents(s, p, q);
    const Eigen::VectorXd log_minors = w.core_log_minors();
    Cx log_value{0.0, 0.0};
    for (int j = 0; j < p; ++j) {
        log_value += e(j) * log_minors(j);
    }
    return std::exp(log_value);
}

SphericalBatch::SphericalBatch(int p_, int q_, const TorusCoord& t,
                               std::int64_t n, std::uint64_t seed_)
    : p(p_), q(q_), n_samples(n), seed(seed_) {
    if (p < 1 || q < p) {
        throw DomainError("SphericalBatch: require 1 <= p <= q");
    }
    if (t.t.size() != p) {
        throw ShapeError("SphericalBatch: torus point must have length p");
    }
    if (n < 1) {
        throw DomainError("SphericalBatch: need at least one sample");
    }
    Eigen::MatrixXd zt = Eigen::MatrixXd::Zero(p, q);
    for (int k = 0; k < p; ++k) {
        zt(k, k) = std::tanh(t.t(k));
    }
    const BallPoint base(zt, p, q);
    log_minors.resize(n, p);
    Rng rng(seed);
    for (std::int64_t i = 0; i < n; ++i) {
        const GroupElement k = haar_sample_k(p, q, rng);
        const BallPoint moved = mobius_action(k, base);
        log_minors.row(i) = cayley_log_minors(moved.z, p, q).transpose();
    }
}

SphericalEstimate SphericalBatch::estimate(const Eigen::VectorXcd& s) const {
    const Eigen::VectorXcd e = psi_exponents(s, p, q);
    Cx mean{0.0, 0.0};
    double m2_re = 0.0;
    double m2_im = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        Cx exponent{0.0, 0.0};
        for (int j = 0; j < p; ++j) {
            exponent += log_minors(i, j) * e(j);
        }
        const Cx x = std::exp(exponent);
        const Cx delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        const Cx delta2 = x - mean;
        m2_re += delta.real() * delta2.real();
        m2_im += delta.imag() * delta2.imag();
    }
    SphericalEstimate out;
    out.value = mean;
    out.n_samples = n_samples;
    out.seed = seed;
    if (n_samples > 1) {
        const double var = (m2_re + m2_im) / static_cast<double>(n_samples - 1);
        out.std_error =
            std::sqrt(std::max(0.0, var) / static_cast<double>(n_samples));
    }
    return out;
}

SphericalEstimate spherical_function(const Eigen::VectorXcd& s,
                                     const TorusCoord& t, int q,
                                     std::int64_t n_samples,
                                     std::uint64_t seed) {
    const int p = static_cast<int>(s.size());
    const SphericalBatch batch(p, q, t, n_samples, seed);
    return batch.estimate(s);
}

double spherical_bound_margin(const Eigen::VectorXcd& s, const TorusCoord& t,
                              int q, std::int64_t n_samples,
                              std::uint64_t seed) {
    const int p = static_cast<int>(s.size());
    const SphericalBatch batch(p, q, t, n_samples, seed);
    const SphericalEstimate complex_est = batch.estimate(s);
    const Eigen::VectorXcd real_part = s.real().cast<Cx>();
    const SphericalEstimate real_est = batch.estimate(real_part);
    return real_est.value.real() - std::abs(complex_est.value);
}

namespace {

// Gauss-Jacobi rule for the symmetric weight (1 - x^2)^beta on [-1, 1] via
// the Golub-Welsch eigenvalue method; returns probability-normalized weights
// (the total mass of the weight is divided out).
void gauss_jacobi_symmetric(double beta, int nodes, Eigen::VectorXd* x,
                            Eigen::VectorXd* w) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(nodes, nodes);
    for (int k = 1; k < nodes; ++k) {
        double ck;
        if (k == 1) {
            ck = 1.0 / (3.0 + 2.0 * beta);
        } else {
            const double kk = static_cast<double>(k);
            const double den = (2.0 * kk + 2.0 * beta);
            ck = 4.0 * kk * (kk + beta) * (kk + beta) * (kk + 2.0 * beta) /
                 (den * den * (den + 1.0) * (den - 1.0));
        }
        const double off = std::sqrt(ck);
        jac(k, k - 1) = off;
        jac(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jac);
    if (solver.info() != Eigen::Success) {
        throw SingularError("Rank1Table: quadrature eigenproblem failed");
    }
    *x = solver.eigenvalues();
    w->resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        (*w)(i) = v0 * v0;
    }
}

}  // namespace

Rank1Table::Rank1Table(double t_, int q_, int nodes) : q(q_), t(t_) {
    if (q < 1) {
        throw DomainError("Rank1Table: require q >= 1");
    }
    if (nodes < 2) {
        throw DomainError("Rank1Table: need at least two nodes");
    }
    if (!std::isfinite(t)) {
        throw DomainError("Rank1Table: torus coordinate must be finite");
    }
    Eigen::VectorXd x;
    if (q == 1) {
        x.resize(2);
        x << -1.0, 1.0;
        weights = Eigen::VectorXd::Constant(2, 0.5);
    } else {
        gauss_jacobi_symmetric(0.5 * (q - 3), nodes, &x, &weights);
    }
    const double r = std::tanh(t);
    log_minors.resize(x.size());
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(1, q);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        // The minor depends on the moved point only through its norm (fixed at
        // |tanh t| on the orbit) and its last coordinate r*x; the rest of the
        // vector is placed in the orthogonal complement.
        v(0, q - 1) = r * x(i);
        if (q > 1) {
            v(0, 0) = r * std::sqrt(std::max(0.0, 1.0 - x(i) * x(i)));
        }
        log_minors(i) = cayley_log_minors(v, 1, q)(0);
    }
}

Cx Rank1Table::evaluate(Cx s) const {
    Eigen::VectorXcd sv(1);
    sv << s;
    const Cx e = psi_exponents(sv, 1, q)(0);
    Cx acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < log_minors.size(); ++i) {
        acc += weights(i) * std::exp(e * log_minors(i));
    }
    return acc;
}

Cx spherical_function_rank1(Cx s, double t, int q, int nodes) {
    return Rank1Table(t, q, nodes).evaluate(s);
}

}  // namespace bkpq