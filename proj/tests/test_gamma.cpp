// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Tests for the complex log-gamma primitives.
//
// The frozen oracle table below was generated by tools/gen_gamma_oracle.py:
//
//   #!/usr/bin/env python3
//   import mpmath as mp
//   mp.mp.dps = 60
//   POINTS = [mp.mpc("0.5","0"), mp.mpc("1","0"), mp.mpc("7.25","0"),
//             mp.mpc("20.5","0"), mp.mpc("0.5","0.5"), mp.mpc("1.5","-2.5"),
//             mp.mpc("3","4"), mp.mpc("6.5","12"), mp.mpc("12","-7"),
//             mp.mpc("25","25"), mp.mpc("0.25","40"), mp.mpc("2","-49"),
//             mp.mpc("-0.5","0"), mp.mpc("-2.5","0"), mp.mpc("-7.3","0.0"),
//             mp.mpc("-0.5","1.5"), mp.mpc("-3.25","-2"), mp.mpc("-10.5","4.5"),
//             mp.mpc("-19.75","-0.25"), mp.mpc("-1.125","30"), mp.mpc("0","1"),
//             mp.mpc("0","-15"), mp.mpc("-35.5","2"), mp.mpc("4.75","-33.5")]
//   for z in POINTS:
//       g = mp.gamma(z)
//       print("    {%s, %s, %s, %s}," % tuple(
//           mp.nstr(v, 17, strip_zeros=False)
//           for v in (z.real, z.imag, g.real, g.imag)))

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "bkpq/errors.hpp"
#include "bkpq/gamma.hpp"

using bkpq::Cx;

namespace {

struct OracleRow {
    double re_z, im_z, re_g, im_g;
};

// {re_z, im_z, re_gamma, im_gamma}
const OracleRow kGammaOracle[] = {
    {0.50000000000000000, 0.0, 1.7724538509055160, 0.0},
    {1.0000000000000000, 0.0, 1.0000000000000000, 0.0},
    {7.2500000000000000, 0.0, 1155.3810139199897, 0.0},
    {20.500000000000000, 0.0, 5.4062429823350750e+17, 0.0},
    {0.50000000000000000, 0.50000000000000000, 0.81816399954174739, -0.76331382871398262},
    {1.5000000000000000, -2.5000000000000000, 0.047852328112029621, -0.11646735440110321},
    {3.0000000000000000, 4.0000000000000000, 0.0052255384713692142, -0.17254707929430019},
    {6.5000000000000000, 12.000000000000000, 0.048148251914964198, 0.038198199897241411},
    {12.000000000000000, -7.0000000000000000, 1112765.2628578611, 5208219.4721327994},
    {25.000000000000000, 25.000000000000000, -1.1135374386467985e+18, 8.8892714760098944e+18},
    {0.25000000000000000, 40.000000000000000, 4.8318236203355451e-28, 1.7560326729457917e-28},
    {2.0000000000000000, -49.000000000000000, 2.8521981114412758e-31, 1.4848091448505129e-31},
    {-0.50000000000000000, 0.0, -3.5449077018110321, 0.0},
    {-2.5000000000000000, 0.0, -0.94530872048294188, 0.0},
    {-7.3000000000000000, 0.0, 0.00041838787301354770, 0.0},
    {-0.50000000000000000, 1.5000000000000000, -0.13920273326162969, -0.056553073037431998},
    {-3.2500000000000000, -2.0000000000000000, -0.0021864756495538060, 0.00087219701823069434},
    {-10.500000000000000, 4.5000000000000000, 7.8707910554587416e-14, 9.3427222647770840e-13},
    {-19.750000000000000, -0.25000000000000000, 2.4171344808200833e-18, -4.1898161088972825e-19},
    {-1.1250000000000000, 30.000000000000000, 3.2311043067526321e-23, 1.0913586108718236e-23},
    {0.0, 1.0000000000000000, -0.15494982830181069, -0.49801566811835604},
    {0.0, -15.000000000000000, 3.6139373250576581e-11, 1.1295850473444960e-11},
    {-35.500000000000000, 2.0000000000000000, 1.2714372388243505e-43, 1.5535911334735861e-43},
    {4.7500000000000000, -33.500000000000000, -9.1154832710161387e-17, -5.7299079983637451e-17},
};

double rel_err(Cx got, Cx want) {
    return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("log_gamma matches the frozen high-precision oracle") {
    for (const auto& row : kGammaOracle) {
        const Cx z(row.re_z, row.im_z);
        const Cx want(row.re_g, row.im_g);
        const Cx got = std::exp(bkpq::log_gamma(z));
        INFO("z = (", row.re_z, ", ", row.im_z, ")");
        CHECK(rel_err(got, want) <= 1e-12);
    }
}

TEST_CASE("log_gamma is real on the positive axis and agrees with lgamma") {
    for (double x : {0.1, 0.45, 0.50001, 1.0, 2.75, 9.0, 21.5, 45.0}) {
        const Cx lg = bkpq::log_gamma(Cx(x, 0.0));
        CHECK(std::abs(lg.imag()) <= 1e-13 * std::max(1.0, std::abs(lg.real())));
        CHECK(std::abs(lg.real() - std::lgamma(x)) <=
              1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    }
}

TEST_CASE("log_gamma satisfies the recurrence Gamma(z+1) = z Gamma(z)") {
    const std::vector<Cx> pts = {
        {0.3, 0.0},  {1.0, 1.0},   {-0.7, 0.4},  {-4.3, -2.2}, {5.5, -9.0},
        {-9.1, 0.3}, {12.0, 17.0}, {-15.5, -8.0}, {0.0, 3.0},  {-0.25, -19.0},
    };
    for (const Cx& z : pts) {
        const Cx ratio = std::exp(bkpq::log_gamma(z + 1.0) - bkpq::log_gamma(z));
        CHECK(std::abs(ratio - z) <= 1e-10 * std::abs(z));
    }
}

TEST_CASE("log_gamma satisfies the reflection identity") {
    const std::vector<Cx> pts = {
        {0.3, 0.0}, {-1.4, 0.7}, {0.5, 5.0}, {-6.6, -3.1}, {-0.2, 9.5}, {2.8, -7.7},
    };
    for (const Cx& z : pts) {
        const Cx lhs = std::exp(bkpq::log_gamma(z) + bkpq::log_gamma(1.0 - z));
        const Cx rhs = M_PI / std::sin(M_PI * z);
        CHECK(rel_err(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("log_gamma throws PoleError at and near non-positive integers") {
    CHECK_THROWS_AS(bkpq::log_gamma(Cx(0.0, 0.0)), bkpq::PoleError);
    CHECK_THROWS_AS(bkpq::log_gamma(Cx(-1.0, 0.0)), bkpq::PoleError);
    CHECK_THROWS_AS(bkpq::log_gamma(Cx(-7.0, 0.0)), bkpq::PoleError);
    CHECK_THROWS_AS(bkpq::log_gamma(Cx(-3.0, 1e-13)), bkpq::PoleError);
    CHECK_THROWS_AS(bkpq::log_gamma(Cx(-3.0 + 1e-13, 0.0)), bkpq::PoleError);
    // Outside the pole radius evaluation must succeed.
    CHECK_NOTHROW(bkpq::log_gamma(Cx(-3.0 + 1e-9, 0.0)));
    CHECK_NOTHROW(bkpq::log_gamma(Cx(-3.0, 1e-9)));
    CHECK_NOTHROW(bkpq::log_gamma(Cx(0.5, 0.0)));
}

TEST_CASE("gamma_product evaluates regular quotients") {
    // Gamma(5)/Gamma(3) = 4*3 = 12.
    const std::vector<Cx> nums = {{5.0, 0.0}};
    const std::vector<Cx> dens = {{3.0, 0.0}};
    const Cx got = bkpq::gamma_product(nums, dens);
    CHECK(rel_err(got, Cx(12.0, 0.0)) <= 1e-13);
}

TEST_CASE("gamma_product cancels paired poles with the exact residue ratio") {
    // Gamma(x)/Gamma(x-3) -> (x-1)(x-2)(x-3) = -60 as x -> -2; the paired-pole
    // convention reproduces the same limit because both arguments approach
    // their poles at the same rate.
    {
        const std::vector<Cx> nums = {{-2.0, 0.0}};
        const std::vector<Cx> dens = {{-5.0, 0.0}};
        const Cx got = bkpq::gamma_product(nums, dens);
        CHECK(rel_err(got, Cx(-60.0, 0.0)) <= 1e-13);
    }
    // A regular factor rides along unchanged.
    {
        const std::vector<Cx> nums = {{-2.0, 0.0}, {4.0, 0.0}};
        const std::vector<Cx> dens = {{-5.0, 0.0}};
        const Cx got = bkpq::gamma_product(nums, dens);
        CHECK(rel_err(got, Cx(-360.0, 0.0)) <= 1e-13);
    }
    // Numerical limit check just outside the pole radius.
    {
        const double eps = 1e-9;
        const std::vector<Cx> nums = {{-2.0 + eps, 0.0}};
        const std::vector<Cx> dens = {{-5.0 + eps, 0.0}};
        const Cx got = bkpq::gamma_product(nums, dens);
        CHECK(rel_err(got, Cx(-60.0, 0.0)) <= 1e-6);
    }
}

TEST_CASE("gamma_product pole bookkeeping") {
    // Unmatched numerator pole.
    {
        const std::vector<Cx> nums = {{-4.0, 0.0}};
        const std::vector<Cx> dens = {{2.0, 0.0}};
        CHECK_THROWS_AS(bkpq::gamma_product(nums, dens), bkpq::PoleError);
    }
    // Excess denominator pole: the quotient vanishes.
    {
        const std::vector<Cx> nums = {{2.5, 0.0}};
        const std::vector<Cx> dens = {{-1.0, 0.0}};
        const Cx got = bkpq::gamma_product(nums, dens);
        CHECK(got == Cx(0.0, 0.0));
    }
}

TEST_CASE("gamma_modulus_asymptotic approaches the true modulus") {
    // |Gamma(1.25+30i)| = 1.0997764540617115e-19 (60-digit oracle).
    const double truth = 1.0997764540617115e-19;
    const double approx = bkpq::gamma_modulus_asymptotic(1.25, 30.0);
    CHECK(std::abs(approx / truth - 1.0) <= 0.02);

    // The relative error must shrink as |y| grows (first-order term ~ 1/y).
    auto rel_at = [](double a, double y) {
        const double t = std::exp(bkpq::log_gamma(Cx(a, y)).real());
        return std::abs(bkpq::gamma_modulus_asymptotic(a, y) / t - 1.0);
    };
    CHECK(rel_at(1.25, 40.0) < rel_at(1.25, 10.0));
    CHECK(rel_at(0.5, 25.0) < rel_at(0.5, 5.0));

    CHECK_THROWS_AS(bkpq::gamma_modulus_asymptotic(1.0, 0.5), bkpq::DomainError);
}

TEST_CASE("gamma_residue_coefficient gives exact Laurent coefficients") {
    CHECK(bkpq::gamma_residue_coefficient(0) == bkpq::Rat(1, 1));
    CHECK(bkpq::gamma_residue_coefficient(1) == bkpq::Rat(-1, 1));
    CHECK(bkpq::gamma_residue_coefficient(2) == bkpq::Rat(1, 2));
    CHECK(bkpq::gamma_residue_coefficient(3) == bkpq::Rat(-1, 6));
    CHECK(bkpq::gamma_residue_coefficient(4) == bkpq::Rat(1, 24));
    CHECK_THROWS_AS(bkpq::gamma_residue_coefficient(-1), bkpq::DomainError);
    CHECK_THROWS_AS(bkpq::gamma_residue_coefficient(21), bkpq::OverflowError);

    // Gamma(-n + eps) ~ coefficient / eps near the pole.
    const double eps = 1e-7;
    const double got = std::exp(bkpq::log_gamma(Cx(-3.0 + eps, 0.0)).real());
    // log_gamma is real-signed through exp only up to phase; evaluate the
    // signed value through the reflection of the real-axis quotient instead.
    const Cx val = std::exp(bkpq::log_gamma(Cx(-3.0 + eps, 0.0)));
    const double want = bkpq::rat_to_double(bkpq::gamma_residue_coefficient(3)) / eps;
    CHECK(std::abs(val.real() / want - 1.0) <= 1e-5);
    CHECK(std::abs(val.imag()) <= 1e-6 * std::abs(want));
    (void)got;
}

TEST_CASE("rational helpers round-trip") {
    using bkpq::Rat;
    CHECK(bkpq::rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(bkpq::rat_to_string(Rat(-1, 1)) == "-1/1");
    CHECK(bkpq::rat_from_string("3/2") == Rat(3, 2));
    CHECK(bkpq::rat_from_string("-7") == Rat(-7, 1));
    CHECK(bkpq::rat_from_string("4/-6") == Rat(-2, 3));
    CHECK_THROWS_AS(bkpq::rat_from_string("1/0"), bkpq::DomainError);
    CHECK_THROWS_AS(bkpq::rat_from_string("abc"), bkpq::DomainError);
    CHECK(bkpq::is_nonpositive_integer(Rat(0, 1)));
    CHECK(bkpq::is_nonpositive_integer(Rat(-4, 1)));
    CHECK(!bkpq::is_nonpositive_integer(Rat(-4, 3)));
    CHECK(!bkpq::is_nonpositive_integer(Rat(2, 1)));
}
