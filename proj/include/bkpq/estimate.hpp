// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// The one value type every stochastic routine in this library returns: a
// complex estimate with a standard error, the sample count that produced it,
// and the seed that makes the run repeatable.  Kept in its own header so the
// deterministic-quadrature and Monte-Carlo layers can share it without
// depending on each other.

#ifndef BKPQ_ESTIMATE_HPP
#define BKPQ_ESTIMATE_HPP

#include <complex>
#include <cstdint>

namespace bkpq {

/// @brief A Monte-Carlo (or hybrid) estimate with reproducibility metadata.
struct SphericalEstimate {
    std::complex<double> value{0.0, 0.0};  ///< the estimate itself
    double std_error = 0.0;                ///< one standard error (>= 0)
    std::int64_t n_samples = 0;            ///< samples used
    std::uint64_t seed = 0;                ///< seed that reproduces the run
};

}  // namespace bkpq

#endif  // BKPQ_ESTIMATE_HPP
