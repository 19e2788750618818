// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Deterministic random-variate generation.  All stochastic estimators in bkpq
// draw from this wrapper: a fixed 64-bit Mersenne Twister engine plus explicit
// Box-Muller normals, so a given seed reproduces the identical stream on every
// platform with the same libm, independent of the standard library's
// distribution implementations.

#ifndef BKPQ_RNG_HPP
#define BKPQ_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace bkpq {

/// @brief SplitMix64 scrambler used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// @brief Mix a base seed with stream tags (component indices, purposes) into
/// a decorrelated sub-seed; deterministic in all arguments.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t x = splitmix64(base ^ 0x6a09e667f3bcc909ULL);
    for (const std::uint64_t tag : tags) {
        x = splitmix64(x ^ splitmix64(tag + 0x9e3779b97f4a7c15ULL));
    }
    return x;
}

/// @brief Deterministic variate source.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// @brief Uniform on (0, 1] (never zero, safe under log).
    double uniform() {
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// @brief Standard normal via Box-Muller (two uniforms per call).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// @brief Chi-square with integer degrees of freedom (sum of squares).
    double chi_square(int dof) {
        double acc = 0.0;
        for (int k = 0; k < dof; ++k) {
            const double z = normal();
            acc += z * z;
        }
        return acc;
    }

    /// @brief Student-t with integer degrees of freedom nu and scale factor.
    double student_t(int nu, double scale) {
        return scale * normal() / std::sqrt(chi_square(nu) / static_cast<double>(nu));
    }

private:
    std::mt19937_64 eng_;
};

/// @brief Log-density of the scaled Student-t distribution at x.
inline double student_t_log_pdf(double x, int nu, double scale) {
    const double dnu = static_cast<double>(nu);
    const double z = x / scale;
    return std::lgamma(0.5 * (dnu + 1.0)) - std::lgamma(0.5 * dnu) -
           0.5 * std::log(dnu * M_PI) - std::log(scale) -
           0.5 * (dnu + 1.0) * std::log1p(z * z / dnu);
}

} // namespace bkpq

#endif // BKPQ_RNG_HPP
