#!/usr/bin/env python3
"""Recompute the frozen oracle fixtures used by the test suite.

Run this only to regenerate tests/oracles.py constants; it is slow on
purpose (10^8-term sums).
"""

import math

import numpy as np


def euler_gamma_fixture(n: int = 10**6) -> tuple[float, float]:
    """gamma estimate from gamma_n with the half-boundary correction.

    The correction term gives |error| <= pV(f,[n,inf))/2 = 1/(2(n+1))
    for f(x) = 1/(1+x), which certifies ~5e-7 at n = 10^6.
    """
    harmonic_n = math.fsum(1.0 / (1.0 + k) for k in range(n))
    gamma_n = harmonic_n - math.log(n + 1)
    estimate = gamma_n + 0.5 / (n + 1)
    return estimate, 0.5 / (n + 1)


def basel_fixture(terms: int = 10**8) -> tuple[float, float]:
    """sum_{k=1}^inf 1/k^2 via a compensated partial sum plus the
    integral-test tail bracket [1/(N+1), 1/N]."""
    parts = []
    chunk = 1 << 22
    for start in range(1, terms + 1, chunk):
        stop = min(terms + 1, start + chunk)
        k = np.arange(start, stop, dtype=np.float64)
        parts.append(float(np.sum(1.0 / (k * k))))
    partial = math.fsum(parts)
    lo = partial + 1.0 / (terms + 1)
    hi = partial + 1.0 / terms
    return 0.5 * (lo + hi), 0.5 * (hi - lo)


if __name__ == "__main__":
    g, gerr = euler_gamma_fixture()
    print(f"EULER_GAMMA = {g!r}  # certified +- {gerr:.3g}")
    b, berr = basel_fixture()
    print(f"BASEL_SUM = {b!r}  # certified +- {berr:.3g}")
    print(f"math.pi**2/6 = {math.pi**2 / 6!r}")
