// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include "bkpq/gamma.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "bkpq/errors.hpp"

namespace bkpq {

namespace {

// 15-term Lanczos coefficients for g = 607/128; relative error of the
// resulting gamma values is a few ulps times 10 across the right half-plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2
constexpr double kLogPi = 1.1447298858494001741;        // log(pi)

// Lanczos evaluation, valid for Re z >= 1/2.
Cx log_gamma_right(Cx z) {
    Cx acc(kLanczosC[0], 0.0);
    for (int k = 1; k < 15; ++k) {
        acc += kLanczosC[k] / (z + Cx(static_cast<double>(k - 1), 0.0));
    }
    const Cx base = z + Cx(kLanczosG - 0.5, 0.0);
    return kHalfLog2Pi + (z - Cx(0.5, 0.0)) * std::log(base) - base + std::log(acc);
}

// exp(w) - 1 without cancellation for small |w|.
Cx cexpm1(Cx w) {
    const double ex = std::expm1(w.real());
    const double cy = std::cos(w.imag());
    const double sy = std::sin(w.imag());
    const double half = std::sin(0.5 * w.imag());
    const double cym1 = -2.0 * half * half;  // cos(y) - 1
    return Cx(ex * cy + cym1, (1.0 + ex) * sy);
}

// log(sin(pi z)) computed without overflow for large |Im z|, by factoring out
// the exponentially dominant half of sin(pi z) = (e^{i pi z} - e^{-i pi z})/(2i).
Cx log_sin_pi(Cx z) {
    const Cx ipz = Cx(0.0, M_PI) * z;
    if (z.imag() > 0.0) {
        // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) * (i/2)
        return -ipz + std::log(-cexpm1(2.0 * ipz)) + std::log(Cx(0.0, 0.5));
    }
    // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2 i)
    return ipz + std::log(-cexpm1(-2.0 * ipz)) - std::log(Cx(0.0, 2.0));
}

bool near_nonpositive_integer(Cx z, double radius, long long* n_out) {
    const double re = z.real();
    if (re > 0.5) return false;
    const double n = std::round(re);
    if (n > 0.0) return false;
    if (std::abs(re - n) <= radius && std::abs(z.imag()) <= radius) {
        if (n_out) *n_out = static_cast<long long>(-n);
        return true;
    }
    return false;
}

double factorial_double(long long n) {
    double f = 1.0;
    for (long long k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

} // namespace

Cx log_gamma(Cx z) {
    long long n = 0;
    if (near_nonpositive_integer(z, kPoleRadius, &n)) {
        throw PoleError("log_gamma: argument (" + std::to_string(z.real()) + "," +
                        std::to_string(z.imag()) + ") is within 1e-12 of the pole at -" +
                        std::to_string(n));
    }
    if (z.real() >= 0.5) {
        return log_gamma_right(z);
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z),
    // exact modulo 2*pi*i (see header note).
    return Cx(kLogPi, 0.0) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Cx gamma_product(std::span<const Cx> nums, std::span<const Cx> dens) {
    std::vector<long long> sing_num;
    std::vector<long long> sing_den;
    Cx log_acc(0.0, 0.0);
    for (const Cx& z : nums) {
        long long n = 0;
        if (near_nonpositive_integer(z, kPoleRadius, &n)) {
            sing_num.push_back(n);
        } else {
            log_acc += log_gamma(z);
        }
    }
    for (const Cx& z : dens) {
        long long n = 0;
        if (near_nonpositive_integer(z, kPoleRadius, &n)) {
            sing_den.push_back(n);
        } else {
            log_acc -= log_gamma(z);
        }
    }
    if (sing_num.size() > sing_den.size()) {
        throw PoleError("gamma_product: " +
                        std::to_string(sing_num.size() - sing_den.size()) +
                        " uncancelled numerator pole(s)");
    }
    if (sing_num.size() < sing_den.size()) {
        return Cx(0.0, 0.0);  // excess denominator poles: the quotient vanishes
    }
    double coeff = 1.0;
    for (size_t k = 0; k < sing_num.size(); ++k) {
        const long long na = sing_num[k];
        const long long nb = sing_den[k];
        if (na > 170 || nb > 170) {
            throw OverflowError("gamma_product: residue factorial exceeds double range");
        }
        const double ratio = factorial_double(nb) / factorial_double(na);
        coeff *= (((na - nb) % 2) != 0) ? -ratio : ratio;
    }
    if (log_acc.real() > 709.0) {
        throw OverflowError("gamma_product: magnitude exceeds double range (log=" +
                            std::to_string(log_acc.real()) + ")");
    }
    return coeff * std::exp(log_acc);
}

double gamma_modulus_asymptotic(double a, double y) {
    const double ay = std::abs(y);
    if (ay < 1.0) {
        throw DomainError("gamma_modulus_asymptotic: |y| = " + std::to_string(ay) +
                          " is below the asymptotic regime (need |y| >= 1)");
    }
    return std::sqrt(2.0 * M_PI) * std::pow(ay, a - 0.5) * std::exp(-0.5 * M_PI * ay);
}

Rat gamma_residue_coefficient(int n) {
    if (n < 0) {
        throw DomainError("gamma_residue_coefficient: n must be >= 0, got " + std::to_string(n));
    }
    if (n > 20) {
        throw OverflowError("gamma_residue_coefficient: n! overflows exact integers for n = " +
                            std::to_string(n));
    }
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    return Rat((n % 2 == 0) ? 1 : -1, fact);
}

} // namespace bkpq
