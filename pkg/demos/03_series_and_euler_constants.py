#!/usr/bin/env python3
"""Series summation with certified tails, and generalized Euler constants.

The integral criterion decides convergence; when the series converges,
its sum is enclosed by partial sum + tail integral - boundary/2 with
radius pV(f,[n,inf))/2.  The same machinery encloses the Euler constant
of f, which for f(x)=1/(1+x) is the Euler-Mascheroni constant.
"""

import math
from pathlib import Path

from bvsum import (
    classify_convergence,
    euler_constant,
    load_function,
    series_sum,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

basel = load_function(CORPUS / "basel.json")
harmonic = load_function(CORPUS / "harmonic.json")
atan_f = load_function(CORPUS / "atan_bounded.json")

print("integral criterion:")
for name, f in (("1/(1+k)^2", basel), ("1/(1+k)", harmonic),
                ("atan(k)", atan_f)):
    print(f"  sum {name:10s} -> {classify_convergence(f).value}")

print()
print("Basel problem, true value pi^2/6 =", math.pi**2 / 6)
print(f"{'n':>5} {'enclosure':>18} {'radius':>12} {'true error':>12}")
for n in (5, 10, 100, 1000):
    enc = series_sum(basel, n)
    print(f"{n:5d} {enc.value:18.12f} {enc.radius:12.3e} "
          f"{abs(enc.value - math.pi**2 / 6):12.3e}")

print()
print("Euler-Mascheroni constant, true value 0.5772156649...")
print(f"{'n':>6} {'gamma_n':>18} {'enclosure':>18} {'radius':>12}")
for n in (1, 10, 100, 10_000):
    rep = euler_constant(harmonic, n)
    print(f"{n:6d} {rep.gamma_n.value:18.12f} "
          f"{rep.gamma_estimate.value:18.12f} {rep.gamma_estimate.radius:12.3e}")
print("every enclosure above contains the constant; the radius is")
print("exactly pV(f,[n,inf))/2 = 1/(2(n+1)) plus the quadrature slack.")
