#!/usr/bin/env python3
"""Building piecewise-monotone BV functions and reading off their structure.

A function is a list of monotone pieces between breakpoints; every
one-sided limit is part of the description, so jumps, the pointwise
variation and the Jordan decomposition are exact computations.
"""

from bvsum import (
    evaluate,
    jordan_decompose,
    limits,
    mid_value,
    pointwise_variation,
    rho,
    validate,
)

# A step function that is 0, then 1, with the *stored value* at the jump
# deliberately placed outside the interval of the one-sided limits
# (f(1) = 2): the classic "misplaced value" that makes pointwise
# variation strictly larger than the measure-theoretic variation.
step = validate({
    "domain": {"lo": 0, "hi": 2},
    "pieces": [
        {"interval": [0, 1], "expr": "0", "direction": "const",
         "left_limit": 0, "right_limit": 0},
        {"interval": [1, 2], "expr": "1", "direction": "const",
         "left_limit": 1, "right_limit": 1},
    ],
    "breakpoints": [{"x": 1, "left": 0, "value": 2, "right": 1}],
})

print("f(0.5) =", evaluate(step, 0.5))
print("f(1)   =", evaluate(step, 1.0), "   (stored breakpoint value wins)")
print("limits at 1:", limits(step, 1.0))
print("mid-value at 1:", mid_value(step, 1.0))
print("rho at 1:", rho(step, 1.0), "  (twice dist(f(1), [f(1-), f(1+)]))")
print()

print("pV over [0,2] :", pointwise_variation(step, 0, 2))
print("pV over ]0,2[ :", pointwise_variation(step, 0, 2, False, False))
print("pV over [1,2] :", pointwise_variation(step, 1, 2))
print("pV over ]1,2] :", pointwise_variation(step, 1, 2, closed_lo=False))
print()

# Jordan decomposition of a V shape: decreasing then increasing.
vshape = validate({
    "domain": {"lo": 0, "hi": 2},
    "pieces": [
        {"interval": [0, 1], "expr": "abs(x-1)", "direction": "dec",
         "left_limit": 1, "right_limit": 0},
        {"interval": [1, 2], "expr": "abs(x-1)", "direction": "inc",
         "left_limit": 0, "right_limit": 1},
    ],
    "breakpoints": [{"x": 1, "left": 0, "value": 0, "right": 0}],
})
up, down = jordan_decompose(vshape)
print("V shape: f = f1 - f2 with both parts nondecreasing")
for x in (0.0, 0.5, 1.0, 1.5, 2.0):
    print(f"  x={x:3.1f}  f={evaluate(vshape, x):5.2f}  "
          f"f1={evaluate(up, x):5.2f}  f2={evaluate(down, x):5.2f}")
print("pV(f)        =", pointwise_variation(vshape, 0, 2))
print("pV(f1)+pV(f2)=", pointwise_variation(up, 0, 2)
      + pointwise_variation(down, 0, 2))
