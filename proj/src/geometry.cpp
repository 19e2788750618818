// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bkpq/errors.hpp"

namespace bkpq {

namespace {

void require_shape(const Eigen::MatrixXd& m, long rows, long cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
}

double condition_number(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

} // namespace

bool group_membership(const Eigen::MatrixXd& g, int p, int q, double tol) {
    const int n = p + q;
    if (g.rows() != n || g.cols() != n) {
        throw ShapeError("group_membership: expected " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix, got " + std::to_string(g.rows()) + "x" +
                         std::to_string(g.cols()));
    }
    Eigen::VectorXd jdiag(n);
    jdiag.head(p).setOnes();
    jdiag.tail(q).setConstant(-1.0);
    const Eigen::MatrixXd gram = g.transpose() * jdiag.asDiagonal() * g;
    return (gram - Eigen::MatrixXd(jdiag.asDiagonal())).cwiseAbs().maxCoeff() <= tol;
}

GroupElement::GroupElement(Eigen::MatrixXd g, int p_, int q_) : mat(std::move(g)), p(p_), q(q_) {
    if (p < 1 || q < 1) {
        throw DomainError("GroupElement: need p >= 1 and q >= 1");
    }
    if (!group_membership(mat, p, q)) {
        throw DomainError("GroupElement: matrix does not preserve the signature form");
    }
}

BallPoint::BallPoint(Eigen::MatrixXd z_, int p_, int q_) : z(std::move(z_)), p(p_), q(q_) {
    if (p < 1 || q < p) {
        throw DomainError("BallPoint: need 1 <= p <= q");
    }
    require_shape(z, p, q, "BallPoint");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(z);
    if (!(svd.singularValues().maxCoeff() < 1.0)) {
        throw DomainError("BallPoint: operator norm must be strictly below one, got " +
                          std::to_string(svd.singularValues().maxCoeff()));
    }
}

WedgePoint::WedgePoint(Eigen::MatrixXd L_, Eigen::MatrixXd M_, Eigen::MatrixXd N_, int p_, int q_)
    : L(std::move(L_)), M(std::move(M_)), N(std::move(N_)), p(p_), q(q_) {
    if (p < 1 || q < p) {
        throw DomainError("WedgePoint: need 1 <= p <= q");
    }
    require_shape(L, p, q - p, "WedgePoint L");
    require_shape(M, p, p, "WedgePoint M");
    require_shape(N, p, p, "WedgePoint N");
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, M.cwiseAbs().maxCoeff())) {
        throw DomainError("WedgePoint: M must be symmetric");
    }
    if ((N + N.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, N.cwiseAbs().maxCoeff())) {
        throw DomainError("WedgePoint: N must be antisymmetric");
    }
    M = 0.5 * (M + M.transpose().eval());
    N = 0.5 * (N - N.transpose().eval());
    W = M - L * L.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(W);
    if (llt.info() != Eigen::Success) {
        throw DomainError("WedgePoint: M - L L^T must be positive definite");
    }
    C = llt.matrixL();
}

WedgePoint WedgePoint::from_cholesky(Eigen::MatrixXd L_, Eigen::MatrixXd C_,
                                     Eigen::MatrixXd N_, int p_, int q_) {
    WedgePoint out;
    out.p = p_;
    out.q = q_;
    if (out.p < 1 || out.q < out.p) {
        throw DomainError("WedgePoint: need 1 <= p <= q");
    }
    require_shape(L_, out.p, out.q - out.p, "WedgePoint L");
    require_shape(C_, out.p, out.p, "WedgePoint C");
    require_shape(N_, out.p, out.p, "WedgePoint N");
    for (int i = 0; i < out.p; ++i) {
        if (!(C_(i, i) > 0.0) || !std::isfinite(C_(i, i))) {
            throw DomainError(
                "WedgePoint: Cholesky diagonal must be positive and finite");
        }
        for (int j = i + 1; j < out.p; ++j) {
            if (C_(i, j) != 0.0) {
                throw DomainError("WedgePoint: Cholesky factor must be lower triangular");
            }
        }
    }
    if ((N_ + N_.transpose()).cwiseAbs().maxCoeff() >
        1e-10 * std::max(1.0, N_.cwiseAbs().maxCoeff())) {
        throw DomainError("WedgePoint: N must be antisymmetric");
    }
    out.L = std::move(L_);
    out.C = std::move(C_);
    out.N = 0.5 * (N_ - N_.transpose().eval());
    out.W = out.C * out.C.transpose();
    out.M = out.W + out.L * out.L.transpose();
    return out;
}

Eigen::VectorXd WedgePoint::core_log_minors() const {
    Eigen::VectorXd out(p);
    double acc = 0.0;
    for (int j = 0; j < p; ++j) {
        acc += 2.0 * std::log(C(j, j));
        out(j) = acc;
    }
    return out;
}

TorusCoord::TorusCoord(Eigen::VectorXd t_) : t(std::move(t_)) {
    for (int k = 0; k < t.size(); ++k) {
        if (t[k] < 0.0) {
            throw DomainError("TorusCoord: entries must be non-negative (canonical form)");
        }
        if (t[k] > 20.0) {
            throw DomainError("TorusCoord: entry " + std::to_string(t[k]) +
                              " exceeds the supported range t <= 20");
        }
        if (k > 0 && t[k] > t[k - 1]) {
            throw DomainError("TorusCoord: entries must be non-increasing (canonical form)");
        }
    }
}

TorusCoord TorusCoord::canonical(Eigen::VectorXd raw) {
    for (int k = 0; k < raw.size(); ++k) raw[k] = std::abs(raw[k]);
    std::sort(raw.data(), raw.data() + raw.size(), std::greater<double>());
    return TorusCoord(std::move(raw));
}

GroupElement torus_element(const TorusCoord& t, int p, int q) {
    if (t.t.size() != p) {
        throw ShapeError("torus_element: need exactly p = " + std::to_string(p) + " coordinates");
    }
    if (q < p) {
        throw DomainError("torus_element: need q >= p");
    }
    const int n = p + q;
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    for (int k = 0; k < p; ++k) {
        const double c = std::cosh(t.t[k]);
        const double s = std::sinh(t.t[k]);
        g(k, k) = c;
        g(k, p + k) = s;
        g(p + k, k) = s;
        g(p + k, p + k) = c;
    }
    return GroupElement(std::move(g), p, q);
}

BallPoint mobius_action(const GroupElement& g, const BallPoint& z) {
    if (g.p != z.p || g.q != z.q) {
        throw ShapeError("mobius_action: signature mismatch between group element and point");
    }
    const Eigen::MatrixXd denom = g.block_a() + z.z * g.block_c();
    if (condition_number(denom) > 1e12) {
        throw SingularError("mobius_action: a + z c is singular or ill-conditioned");
    }
    const Eigen::MatrixXd numer = g.block_b() + z.z * g.block_d();
    return BallPoint(denom.partialPivLu().solve(numer), z.p, z.q);
}

WedgePoint cayley_to_wedge(const BallPoint& z) {
    const int p = z.p;
    const int q = z.q;
    const Eigen::MatrixXd A = z.z.leftCols(q - p);
    const Eigen::MatrixXd B = z.z.rightCols(p);
    const Eigen::MatrixXd S = Eigen::MatrixXd::Identity(p, p) + B;
    if (condition_number(S) > 1e12) {
        throw SingularError("cayley_to_wedge: 1 + B is singular or ill-conditioned");
    }
    const auto lu = S.partialPivLu();
    const Eigen::MatrixXd L = -lu.solve(A);
    // X = (1 - B) (1 + B)^{-1}, computed through X S = 1 - B.
    const Eigen::MatrixXd X = S.transpose()
                                  .partialPivLu()
                                  .solve((Eigen::MatrixXd::Identity(p, p) - B).transpose())
                                  .transpose();
    const Eigen::MatrixXd M = 0.5 * (X + X.transpose());
    const Eigen::MatrixXd N = 0.5 * (X - X.transpose());
    return WedgePoint(L, M, N, p, q);
}

Eigen::VectorXd cayley_log_minors(const Eigen::MatrixXd& z, int p, int q) {
    const Eigen::MatrixXd A = z.leftCols(q - p);
    const Eigen::MatrixXd B = z.rightCols(p);
    const Eigen::MatrixXd S = Eigen::MatrixXd::Identity(p, p) + B;
    const auto lu = S.partialPivLu();
    const Eigen::MatrixXd L = -lu.solve(A);
    const Eigen::MatrixXd X = S.transpose()
                                  .partialPivLu()
                                  .solve((Eigen::MatrixXd::Identity(p, p) - B).transpose())
                                  .transpose();
    const Eigen::MatrixXd W = 0.5 * (X + X.transpose()) - L * L.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(W);
    if (llt.info() != Eigen::Success) {
        throw DomainError("cayley_log_minors: wedge core is not positive definite");
    }
    const Eigen::MatrixXd chol = llt.matrixL();
    Eigen::VectorXd out(p);
    double acc = 0.0;
    for (int j = 0; j < p; ++j) {
        acc += 2.0 * std::log(chol(j, j));
        out[j] = acc;
    }
    return out;
}

TorusCoord kak_coordinates(const GroupElement& g) {
    const Eigen::MatrixXd a = g.block_a();
    if (condition_number(a) > 1e12) {
        throw SingularError("kak_coordinates: upper-left block is ill-conditioned");
    }
    const Eigen::MatrixXd z = a.partialPivLu().solve(g.block_b());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(z);
    Eigen::VectorXd t(g.p);
    for (int k = 0; k < g.p; ++k) {
        const double sigma = svd.singularValues()[k];
        if (sigma >= 1.0 - 1e-16) {
            throw DomainError("kak_coordinates: coordinate exceeds the supported range t <= 20");
        }
        t[k] = std::atanh(sigma);
    }
    return TorusCoord(std::move(t));
}

GroupElement transporter(const BallPoint& z) {
    const int p = z.p;
    const int q = z.q;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(z.z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::VectorXd t(p);
    for (int k = 0; k < p; ++k) t[k] = std::atanh(svd.singularValues()[k]);
    const GroupElement at = torus_element(TorusCoord(t), p, q);
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(p + q, p + q);
    k.topLeftCorner(p, p) = svd.matrixU().transpose();
    k.bottomRightCorner(q, q) = svd.matrixV().transpose();
    return GroupElement(at.mat * k, p, q);
}

GroupElement haar_sample_k(int p, int q, Rng& rng) {
    auto orthogonal = [&rng](int n) {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
        }
        const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd qmat = qr.householderQ();
        const Eigen::MatrixXd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < n; ++j) {
            if (rmat(j, j) < 0.0) qmat.col(j) *= -1.0;
        }
        return qmat;
    };
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(p + q, p + q);
    k.topLeftCorner(p, p) = orthogonal(p);
    k.bottomRightCorner(q, q) = orthogonal(q);
    return GroupElement(std::move(k), p, q);
}

double ball_measure_density(const BallPoint& z) {
    const Eigen::MatrixXd G =
        Eigen::MatrixXd::Identity(z.p, z.p) - z.z * z.z.transpose();
    return std::pow(G.determinant(), -0.5 * static_cast<double>(z.p + z.q));
}

double wedge_measure_density(const WedgePoint& w) {
    const double log_det = w.core_log_minors()(w.p - 1);
    return std::exp(-0.5 * static_cast<double>(w.p + w.q) * log_det);
}

WedgeSample sample_wedge(int p, int q, double proposal_scale, Rng& rng) {
    if (p < 1 || q < p) {
        throw DomainError("sample_wedge: need 1 <= p <= q");
    }
    if (proposal_scale <= 0.0) {
        throw DomainError("sample_wedge: proposal_scale must be positive");
    }
    const double sd = proposal_scale;  // log-diagonal scale
    const double so = proposal_scale;  // everything else

    double log_pdf = 0.0;

    // Cholesky factor of the core: log-t(4) diagonal, t(3) strict lower part.
    // The log-diagonal is redrawn while |x| > 600 so exp(x) stays finite and
    // nonzero; the discarded mass is below 1e-10 of the proposal.
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(p, p);
    for (int j = 0; j < p; ++j) {
        double x = rng.student_t(4, sd);
        while (std::abs(x) > 600.0) x = rng.student_t(4, sd);
        T(j, j) = std::exp(x);
        log_pdf += student_t_log_pdf(x, 4, sd) - x;  // density over T_jj
        for (int i = j + 1; i < p; ++i) {
            T(i, j) = rng.student_t(3, so);
            log_pdf += student_t_log_pdf(T(i, j), 3, so);
        }
    }
    // Jacobian of W = T T^T (lower-triangular Cholesky, positive diagonal):
    // dW = 2^p prod_j T_jj^(p-j+1) dT, diagonal indexed from 1.
    log_pdf -= static_cast<double>(p) * std::log(2.0);
    for (int j = 0; j < p; ++j) {
        log_pdf -= static_cast<double>(p - j) * std::log(T(j, j));
    }

    Eigen::MatrixXd L(p, q - p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q - p; ++j) {
            L(i, j) = rng.student_t(3, so);
            log_pdf += student_t_log_pdf(L(i, j), 3, so);
        }
    }
    Eigen::MatrixXd N = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            N(i, j) = rng.student_t(3, so);
            N(j, i) = -N(i, j);
            log_pdf += student_t_log_pdf(N(i, j), 3, so);
        }
    }
    return WedgeSample{WedgePoint::from_cholesky(L, T, N, p, q), std::exp(-log_pdf)};
}

} // namespace bkpq
