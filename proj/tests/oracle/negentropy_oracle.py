#!/usr/bin/env python3
"""Quadrature negentropies from closed-form densities, integrated with scipy.

Writes tests/fixtures/oracle_negentropy.csv. Independent of the C++ engine:
densities come from wavefunctions in the rotated quadrature basis, the
two-mode case from a direct line integral of |Psi(x1, x2)|^2.
"""
import csv
import math
import os
import sys

import numpy as np
from scipy import integrate, special

SQRT2 = math.sqrt(2.0)


def hermite_fn(n, x):
    # normalized oscillator eigenfunction
    return special.eval_hermite(n, x) * np.exp(-x * x / 2) / math.sqrt(2.0**n * math.factorial(n) * math.sqrt(math.pi))


def fock(n):
    return lambda x: hermite_fn(n, x) ** 2, 12.0


def pacs(g):
    def p(x):
        f = lambda t: np.exp(-(x - SQRT2 * g * math.cos(t)) ** 2)
        return integrate.quad(f, 0, 2 * math.pi, epsabs=1e-14, epsrel=1e-13, limit=200)[0] / (2 * math.pi * math.sqrt(math.pi))
    return p, 10.0 + SQRT2 * g


def cat(g, phi, even):
    s = 1.0 if even else -1.0
    norm = 1.0 / (2.0 * (1.0 + s * math.exp(-2 * g * g)))
    m, k = SQRT2 * g * math.cos(phi), SQRT2 * g * math.sin(phi)

    def p(x):
        return norm / math.sqrt(math.pi) * (
            np.exp(-(x - m) ** 2) + np.exp(-(x + m) ** 2) + 2 * s * np.exp(-(x * x + m * m)) * np.cos(2 * k * x))
    return p, 10.0 + SQRT2 * g


def pnes(f, theta, phi1, phi2):
    c1, c2 = math.cos(theta), math.sin(theta)
    ph = phi1 + phi2

    def p(q):
        def integrand(y):
            x1, x2 = c1 * q - c2 * y, c2 * q + c1 * y
            a = math.sqrt(1 - f) * hermite_fn(0, x1) * hermite_fn(0, x2)
            b = math.sqrt(f) * hermite_fn(1, x1) * hermite_fn(1, x2)
            return a * a + b * b + 2 * a * b * math.cos(ph)
        return integrate.quad(integrand, -14, 14, epsabs=1e-15, epsrel=1e-13, limit=200)[0]
    return p, 12.0


def piecewise(f, half, width=0.05):
    # short panels keep Gauss-Kronrod accurate next to the zeros of p
    edges = np.arange(-half, half + width / 2, width)
    return math.fsum(integrate.quad(f, a, b, epsabs=1e-16, epsrel=1e-14, limit=100)[0]
                     for a, b in zip(edges[:-1], edges[1:]))


def negentropy(p, half):
    mass = piecewise(p, half)
    mean = piecewise(lambda x: x * p(x), half) / mass
    var = piecewise(lambda x: (x - mean) ** 2 * p(x), half) / mass

    def plogp(x):
        v = p(x) / mass
        return -v * math.log(v) if v > 1e-300 else 0.0
    h = piecewise(plogp, half)
    return 0.5 * math.log(2 * math.pi * math.e * var) - h, mass, var


def rows():
    for n in range(1, 7):
        yield f"fock:{n}", (0.0, 0.0, 0.0), fock(n)
    for g in (0.5, 1.0, 1.5, 2.0):
        yield f"pacs:{g:g}", (0.0, 0.0, 0.0), pacs(g)
    for g in (0.5, 1.0, 1.6):
        for phi in (0.0, 0.7, math.pi / 2):
            yield f"evencat:{g:g}", (0.0, phi, 0.0), cat(g, phi, True)
            yield f"oddcat:{g:g}", (0.0, phi, 0.0), cat(g, phi, False)
    for f in (0.3, 0.7):
        for theta, p1, p2 in ((math.pi / 4, 0.0, 0.0), (0.4, 0.3, 1.1), (1.2, 2.0, 0.5)):
            yield f"pnes:{f:g}", (theta, p1, p2), pnes(f, theta, p1, p2)


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out = os.path.join(here, "..", "fixtures", "oracle_negentropy.csv")
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["state", "theta", "phi1", "phi2", "variance", "negentropy"])
        for spec, (t, p1, p2), (p, half) in rows():
            j, mass, var = negentropy(p, half)
            assert abs(mass - 1) < 1e-9, (spec, mass)
            w.writerow([spec, repr(t), repr(p1), repr(p2), f"{var:.15g}", f"{j:.15g}"])
            print(spec, t, p1, p2, j, file=sys.stderr)


if __name__ == "__main__":
    main()
