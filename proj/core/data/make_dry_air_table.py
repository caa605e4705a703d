#!/usr/bin/env python3
"""Regenerates dry_air_1atm_v1.txt (stdout).

Dry air at 101325 Pa: Sutherland viscosity, the US Standard Atmosphere 1976
thermal-conductivity correlation, ideal-gas density, and a piecewise-linear
cp reference table. Rows are T_K,k,nu,Pr at 20 K steps over 200-400 K, printed
to 6 significant digits.

The shipped file is byte-frozen (tests compare the embedded copy against it),
so never regenerate in place: bump the version suffix in the header and the
file name, and re-freeze the affected test values.
"""

import sys

CP_NODES = [(200.0, 1007.0), (250.0, 1006.0), (300.0, 1007.0),
            (350.0, 1009.0), (400.0, 1014.0)]


def cp(t):
    for (t0, c0), (t1, c1) in zip(CP_NODES, CP_NODES[1:]):
        if t0 <= t <= t1:
            return c0 + (c1 - c0) * (t - t0) / (t1 - t0)
    raise ValueError(f"cp table does not cover {t} K")


def mu(t):
    return 1.458e-6 * t**1.5 / (t + 110.4)


def k(t):
    return 2.648151e-3 * t**1.5 / (t + 245.4 * 10 ** (-12.0 / t))


def rho(t):
    return 101325.0 / (287.058 * t)


def nu(t):
    return mu(t) / rho(t)


def pr(t):
    return mu(t) * cp(t) / k(t)


def main():
    sys.stdout.write("# dry-air 1atm v1\n")
    for t in range(200, 401, 20):
        sys.stdout.write(f"{t},{k(t):.6g},{nu(t):.6g},{pr(t):.6g}\n")


if __name__ == "__main__":
    main()
