#!/usr/bin/env python3
"""Certified finite sums: the first-order summation identity for BV
functions, with the remainder reported as a rigorous bound.

For any a < b in Z:  sum_{a<=k<b} f(k) = int_a^b f - (f(b)-f(a))/2 + R,
|R| <= pV(f,[a,b])/2, collapsing to |f(b)-f(a)|/2 when f is monotone.
"""

from pathlib import Path

from bvsum import em_finite_sum, load_function

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

harmonic = load_function(CORPUS / "harmonic.json")

print("partial sums of 1/(1+k), approximated from the integral alone:")
print(f"{'b':>5} {'exact':>18} {'approx':>18} {'|R|':>12} {'bound':>12}")
for b in (5, 10, 50, 1000):
    rep = em_finite_sum(harmonic, 0, b, tol=1e-10)
    r = abs(rep.exact_sum - rep.approx.value)
    print(f"{b:5d} {rep.exact_sum:18.12f} {rep.approx.value:18.12f} "
          f"{r:12.6f} {rep.remainder_bound:12.6f}")

print()
print("the enclosure always contains the exact sum:")
rep = em_finite_sum(harmonic, 3, 40)
print(f"  sum_{{3<=k<40}} = {rep.exact_sum:.12f}")
print(f"  enclosure     = {rep.approx.value:.12f} +- {rep.approx.radius:.3g}")

print()
print("a step function with unit jumps hits the bound exactly:")
floor_steps = load_function(CORPUS / "floor_steps.json")
rep = em_finite_sum(floor_steps, 0, 12)
print(f"  exact = {rep.exact_sum}, approx = {rep.approx.value}, "
      f"|R| = {abs(rep.exact_sum - rep.approx.value)}, "
      f"bound = {rep.remainder_bound}")
