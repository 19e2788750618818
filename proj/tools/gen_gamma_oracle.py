#!/usr/bin/env python3
# SPDX-License-Identifier: MIT
# Copyright (c) 2026 the bkpq authors
#
# Generates frozen oracle values for tests/test_gamma.cpp.  Values are printed
# as C++ initializer rows {re(z), im(z), re(gamma), im(gamma)} where gamma is
# Gamma(z) computed at 60 significant digits, rounded to double.
#
# Usage: python3 tools/gen_gamma_oracle.py

import mpmath as mp

mp.mp.dps = 60

POINTS = [
    mp.mpc("0.5", "0"),
    mp.mpc("1", "0"),
    mp.mpc("7.25", "0"),
    mp.mpc("20.5", "0"),
    mp.mpc("0.5", "0.5"),
    mp.mpc("1.5", "-2.5"),
    mp.mpc("3", "4"),
    mp.mpc("6.5", "12"),
    mp.mpc("12", "-7"),
    mp.mpc("25", "25"),
    mp.mpc("0.25", "40"),
    mp.mpc("2", "-49"),
    mp.mpc("-0.5", "0"),
    mp.mpc("-2.5", "0"),
    mp.mpc("-7.3", "0.0"),
    mp.mpc("-0.5", "1.5"),
    mp.mpc("-3.25", "-2"),
    mp.mpc("-10.5", "4.5"),
    mp.mpc("-19.75", "-0.25"),
    mp.mpc("-1.125", "30"),
    mp.mpc("0", "1"),
    mp.mpc("0", "-15"),
    mp.mpc("-35.5", "2"),
    mp.mpc("4.75", "-33.5"),
]


def main():
    print("// {re_z, im_z, re_gamma, im_gamma}")
    for z in POINTS:
        g = mp.gamma(z)
        print(
            "    {%s, %s, %s, %s}," % (
                mp.nstr(z.real, 17, strip_zeros=False),
                mp.nstr(z.imag, 17, strip_zeros=False),
                mp.nstr(g.real, 17, strip_zeros=False),
                mp.nstr(g.imag, 17, strip_zeros=False),
            )
        )
    # Modulus asymptotic sanity row: |Gamma(1.25 + 30 i)| at high precision.
    z = mp.mpc("1.25", "30")
    print("// |Gamma(1.25+30i)| =", mp.nstr(abs(mp.gamma(z)), 17))


if __name__ == "__main__":
    main()
