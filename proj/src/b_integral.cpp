// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/b_integral.hpp"

#include <cmath>
#include <span>
#include <vector>

#include "bkpq/errors.hpp"
#include "bkpq/gamma.hpp"
#include "bkpq/quadrature.hpp"

namespace bkpq {

namespace {

// Gauss-Legendre panel rule on [x0,x1] x [y0,y1] with n^2 nodes.
double panel_value(const std::function<double(double, double)>& f, double x0,
                   double x1, double y0, double y1,
                   const std::vector<std::pair<double, double>>& rule) {
    const double cx = 0.5 * (x0 + x1);
    const double hx = 0.5 * (x1 - x0);
    const double cy = 0.5 * (y0 + y1);
    const double hy = 0.5 * (y1 - y0);
    double total = 0.0;
    for (const auto& [xi, wi] : rule) {
        for (const auto& [yj, wj] : rule) {
            total += wi * wj * f(cx + hx * xi, cy + hy * yj);
        }
    }
    return total * hx * hy;
}

// Adaptive quadtree refinement: a panel is accepted when its coarse and fine
// Gauss-Legendre values agree to the local tolerance, else split in four.
double adaptive_panel(const std::function<double(double, double)>& f, double x0,
                      double x1, double y0, double y1, double tol, int depth,
                      const std::vector<std::pair<double, double>>& coarse,
                      const std::vector<std::pair<double, double>>& fine) {
    const double value_coarse = panel_value(f, x0, x1, y0, y1, coarse);
    const double value_fine = panel_value(f, x0, x1, y0, y1, fine);
    if (std::abs(value_fine - value_coarse) <= tol || depth >= 14) {
        return value_fine;
    }
    const double xm = 0.5 * (x0 + x1);
    const double ym = 0.5 * (y0 + y1);
    const double quarter_tol = 0.25 * tol;
    return adaptive_panel(f, x0, xm, y0, ym, quarter_tol, depth + 1, coarse, fine) +
           adaptive_panel(f, xm, x1, y0, ym, quarter_tol, depth + 1, coarse, fine) +
           adaptive_panel(f, x0, xm, ym, y1, quarter_tol, depth + 1, coarse, fine) +
           adaptive_panel(f, xm, x1, ym, y1, quarter_tol, depth + 1, coarse, fine);
}

std::vector<std::pair<double, double>> unit_rule(int n) {
    // Nodes of the [-R, R] grid shrunk to [-1, 1].
    const AxisGrid grid(1.0, n, AxisRule::gauss_legendre);
    return axis_nodes(grid);
}

}  // namespace

BIntegralParams::BIntegralParams(int p_, int q_, Eigen::VectorXcd lambda_,
                                 Eigen::VectorXcd sigma_)
    : p(p_), q(q_), lambda(std::move(lambda_)), sigma(std::move(sigma_)) {
    if (p < 1 || q < p) {
        throw DomainError("BIntegralParams: require 1 <= p <= q");
    }
    if (lambda.size() != p || sigma.size() != p) {
        throw ShapeError("BIntegralParams: lambda and sigma must have length p");
    }
}

bool BIntegralParams::in_strip() const {
    for (int k = 1; k <= p; ++k) {
        const double lo = 0.5 * (q + k) - 1.0;
        const double hi = sigma(k - 1).real() - 0.5 * (p - k);
        const double re = lambda(k - 1).real();
        if (!(lo < re && re < hi)) {
            return false;
        }
    }
    return true;
}

void BIntegralParams::require_strip() const {
    if (!in_strip()) {
        throw DivergenceWarning(
            "BIntegralParams: exponents outside the convergence strip");
    }
}

Cx closed_form(const BIntegralParams& params) {
    const int p = params.p;
    const int q = params.q;
    std::vector<Cx> nums;
    std::vector<Cx> dens;
    nums.reserve(static_cast<size_t>(2 * p));
    dens.reserve(static_cast<size_t>(p));
    for (int k = 1; k <= p; ++k) {
        const Cx lk = params.lambda(k - 1);
        const Cx sk = params.sigma(k - 1);
        nums.push_back(lk - 0.5 * (q + k) + 1.0);
        nums.push_back(sk - lk - 0.5 * (p - k));
        dens.push_back(sk - static_cast<double>(p - k));
    }
    const double pi_exponent = 0.5 * p * (q - 1);
    const Cx product = gamma_product(std::span<const Cx>(nums.data(), nums.size()),
                                     std::span<const Cx>(dens.data(), dens.size()));
    return std::pow(M_PI, pi_exponent) * product;
}

Cx integrand(const BIntegralParams& params, const WedgePoint& w) {
    const int p = params.p;
    if (w.p != p || w.q != params.q) {
        throw ShapeError("integrand: wedge point has wrong signature");
    }
    const double hd = 0.5 * (params.p + params.q);
    const Eigen::VectorXd core_log = w.core_log_minors();
    const Eigen::MatrixXd denom =
        Eigen::MatrixXd::Identity(p, p) + w.M + w.N;
    Cx log_value{0.0, 0.0};
    for (int j = 1; j <= p; ++j) {
        const double denom_minor = denom.topLeftCorner(j, j).determinant();
        if (!(denom_minor > 0.0)) {
            throw BranchError(
                "integrand: leading minor of 1 + M + N is not positive");
        }
        const Cx dl = params.lambda(j - 1) -
                      (j < p ? params.lambda(j) : Cx(0.0, 0.0));
        const Cx ds = params.sigma(j - 1) -
                      (j < p ? params.sigma(j) : Cx(0.0, 0.0));
        log_value += dl * core_log(j - 1) - ds * std::log(denom_minor);
        if (j == p) {
            log_value -= hd * core_log(j - 1);
        }
    }
    return std::exp(log_value);
}

SphericalEstimate monte_carlo_estimate(const BIntegralParams& params,
                                       std::int64_t n_samples,
                                       std::uint64_t seed,
                                       double proposal_scale) {
    params.require_strip();
    const int p = params.p;
    const int q = params.q;
    const auto f = [&params](const WedgePoint& w) -> Cx {
        return integrand(params, w);
    };
    const auto sampler = [p, q, proposal_scale](Rng& rng) {
        WedgeSample sample = sample_wedge(p, q, proposal_scale, rng);
        return std::make_pair(sample.w, sample.weight);
    };
    return mc_mean(f, sampler, n_samples, seed);
}

Cx hua_specialization(int p, int q, double tau) {
    if (p < 1 || q < p) {
        throw DomainError("hua_specialization: require 1 <= p <= q");
    }
    const double hd = 0.5 * (p + q);
    if (!(tau > hd - 1.0)) {
        throw DivergenceWarning(
            "hua_specialization: require tau > (p+q)/2 - 1");
    }
    const Eigen::VectorXcd lambda =
        Eigen::VectorXcd::Constant(p, Cx(tau + hd, 0.0));
    const Eigen::VectorXcd sigma =
        Eigen::VectorXcd::Constant(p, Cx(2.0 * tau + p + q, 0.0));
    const BIntegralParams params(p, q, lambda, sigma);
    return std::exp2(2.0 * p * tau) * closed_form(params);
}

DirichletBetaResult dirichlet_beta(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
        throw DomainError("dirichlet_beta: parameters must be positive");
    }
    DirichletBetaResult out;
    const std::vector<Cx> nums = {Cx(a, 0.0), Cx(b, 0.0), Cx(c, 0.0)};
    const std::vector<Cx> dens = {Cx(a + b + c, 0.0)};
    out.closed_form =
        gamma_product(std::span<const Cx>(nums.data(), nums.size()),
                      std::span<const Cx>(dens.data(), dens.size()))
            .real();
    // Split coordinates u = r w, v = r (1-w) turn the integral into a product
    // of two beta integrals; mapping r = x/(1-x) gives the bounded square
    //   integral over (0,1)^2 of x^{a+b-1} (1-x)^{c-1} w^{a-1} (1-w)^{b-1}.
    const auto f = [a, b, c](double x, double w) -> double {
        if (x <= 0.0 || x >= 1.0 || w <= 0.0 || w >= 1.0) {
            return 0.0;
        }
        return std::pow(x, a + b - 1.0) * std::pow(1.0 - x, c - 1.0) *
               std::pow(w, a - 1.0) * std::pow(1.0 - w, b - 1.0);
    };
    const auto coarse = unit_rule(12);
    const auto fine = unit_rule(24);
    const double tol = 1e-12 * std::max(1.0, std::abs(out.closed_form));
    out.quadrature = adaptive_panel(f, 0.0, 1.0, 0.0, 1.0, tol, 0, coarse, fine);
    out.relative_gap = std::abs(out.quadrature - out.closed_form) /
                       std::max(1e-300, std::abs(out.closed_form));
    return out;
}

RecurrenceReport recurrence_check(const BIntegralParams& params) {
    const int p = params.p;
    const int q = params.q;
    if (p < 2) {
        throw DomainError("recurrence_check: rank reduction needs p >= 2");
    }
    if (!params.in_strip()) {
        throw DomainError(
            "recurrence_check: exponents outside the convergence strip");
    }
    RecurrenceReport report;
    report.lhs = closed_form(params);
    Eigen::VectorXcd lambda_red = params.lambda.head(p - 1);
    Eigen::VectorXcd sigma_red = params.sigma.head(p - 1);
    lambda_red.array() -= Cx(0.5, 0.0);
    sigma_red.array() -= Cx(1.0, 0.0);
    const BIntegralParams reduced_params(p - 1, q - 1, lambda_red, sigma_red);
    report.reduced = closed_form(reduced_params);
    const Cx lp = params.lambda(p - 1);
    const Cx sp = params.sigma(p - 1);
    const std::vector<Cx> nums = {lp - 0.5 * (p + q) + 1.0, sp - lp};
    const std::vector<Cx> dens = {sp};
    report.j_factor =
        std::pow(M_PI, 0.5 * (p + q) - 1.0) *
        gamma_product(std::span<const Cx>(nums.data(), nums.size()),
                      std::span<const Cx>(dens.data(), dens.size()));
    report.ratio = report.lhs / (report.reduced * report.j_factor);
    return report;
}

}  // namespace bkpq
