// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Exact rational scalar used by the symbolic-density layer.  All affine forms,
// prefactors, and residue coefficients are kept as rationals so that iterated
// residues and substitutions stay exact; doubles appear only at evaluation.

#ifndef BKPQ_RATIONAL_HPP
#define BKPQ_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "bkpq/errors.hpp"

namespace bkpq {

using Rat = boost::rational<long long>;

/// @brief Render a rational as "n/d" (always with the slash, e.g. "3/2", "-1/1").
inline std::string rat_to_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// @brief Parse "n/d" or a bare integer "n" into a rational.
inline Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(std::stoll(text), 1);
        }
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) {
            throw DomainError("rational parse: zero denominator in '" + text + "'");
        }
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("rational parse: malformed '" + text + "'");
    } catch (const std::out_of_range&) {
        throw OverflowError("rational parse: out of range '" + text + "'");
    }
}

/// @brief Convert to double (exact division of exact integers).
inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// @brief True when the rational is an integer <= 0 (a pole location of Gamma).
inline bool is_nonpositive_integer(const Rat& r) {
    return r.denominator() == 1 && r.numerator() <= 0;
}

} // namespace bkpq

#endif // BKPQ_RATIONAL_HPP
