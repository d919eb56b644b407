#!/usr/bin/env python3
"""Regenerate the committed corpus of function spec files in corpus/.

Limit values are computed by evaluating the same expressions the files
declare, so the files always satisfy the validator's consistency checks.
"""

import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bvsum.expr import eval_expr, parse  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "corpus"


def ev(expr_text, x):
    return eval_expr(parse(expr_text), float(x))


def piece(lo, hi, expr, direction, left=None, right=None, antiderivative=None):
    if left is None:
        left = ev(expr, lo)
    if right is None:
        right = ev(expr, hi)
    d = {"interval": [lo, hi], "expr": expr, "direction": direction,
         "left_limit": left, "right_limit": right}
    if antiderivative is not None:
        d["antiderivative"] = antiderivative
    return d


def bp(x, left, value, right):
    return {"x": x, "left": left, "value": value, "right": right}


def spec(name, lo, hi, pieces, breakpoints, tail=None):
    d = {"format": 1, "name": name, "domain": {"lo": lo, "hi": hi},
         "pieces": pieces, "breakpoints": breakpoints}
    if tail is not None:
        d["tail"] = tail
    return d


def build():
    files = {}

    files["linear.json"] = spec(
        "linear", -1, 1100,
        [piece(-1, 1100, "x", "inc", antiderivative="x^2/2")], [])

    files["constant.json"] = spec(
        "constant-3", -1, "inf",
        [{"interval": [-1, "inf"], "expr": "3", "direction": "const",
          "left_limit": 3.0, "right_limit": 3.0, "antiderivative": "3*x"}],
        [], tail={"limit": 3.0, "antiderivative": "3*x", "antiderivative_limit": "inf"})

    files["harmonic.json"] = spec(
        "harmonic", 0, "inf",
        [{"interval": [0, "inf"], "expr": "1/(1+x)", "direction": "dec",
          "left_limit": 1.0, "right_limit": 0.0, "antiderivative": "log(1+x)"}],
        [bp(0, 1.0, 1.0, 1.0)],
        tail={"limit": 0.0, "antiderivative": "log(1+x)", "antiderivative_limit": "inf"})

    files["basel.json"] = spec(
        "basel", 0, "inf",
        [{"interval": [0, "inf"], "expr": "1/(1+x)^2", "direction": "dec",
          "left_limit": 1.0, "right_limit": 0.0, "antiderivative": "-1/(1+x)"}],
        [bp(0, 1.0, 1.0, 1.0)],
        tail={"limit": 0.0, "antiderivative": "-1/(1+x)", "antiderivative_limit": 0.0})

    files["exp_decay.json"] = spec(
        "exp-decay", -1, "inf",
        [{"interval": [-1, "inf"], "expr": "exp(-x)", "direction": "dec",
          "left_limit": math.e, "right_limit": 0.0, "antiderivative": "-exp(-x)"}],
        [], tail={"limit": 0.0, "antiderivative": "-exp(-x)", "antiderivative_limit": 0.0})

    files["atan_bounded.json"] = spec(
        "atan-bounded", -1, "inf",
        [{"interval": [-1, "inf"], "expr": "atan(x)", "direction": "inc",
          "left_limit": math.atan(-1.0), "right_limit": math.pi / 2,
          "antiderivative": "x*atan(x)-log(1+x^2)/2"}],
        [], tail={"limit": math.pi / 2, "antiderivative": "x*atan(x)-log(1+x^2)/2",
                  "antiderivative_limit": "inf"})

    files["sqrt.json"] = spec(
        "sqrt", 0, 1100,
        [piece(0, 1100, "sqrt(x)", "inc", antiderivative="2/3*x^(3/2)")],
        [bp(0, 0.0, 0.0, 0.0)])

    # floor steps: constant pieces, unit jumps at every integer
    fl_pieces = [piece(k, k + 1, str(k), "const", float(k), float(k))
                 for k in range(0, 51)]
    fl_pieces.append(piece(51, 51.5, "51", "const", 51.0, 51.0))
    fl_bps = [bp(k, float(k - 1), float(k), float(k)) for k in range(0, 52)]
    files["floor_steps.json"] = spec("floor-steps", 0, 51.5, fl_pieces, fl_bps)

    # fractional-part sawtooth: increasing pieces, jumps at every integer
    fr_pieces = [piece(k, k + 1, f"x-{k}", "inc", 0.0, 1.0,
                       antiderivative=f"(x-{k})^2/2") for k in range(0, 51)]
    fr_pieces.append(piece(51, 51.75, "x-51", "inc", 0.0, 0.75,
                           antiderivative="(x-51)^2/2"))
    fr_bps = [bp(k, 1.0 if k > 0 else 1.0, 0.0, 0.0) for k in range(0, 52)]
    files["frac_sawtooth.json"] = spec("frac-sawtooth", 0, 51.75, fr_pieces, fr_bps)

    files["step_quarter.json"] = spec(
        "step-at-0.25", -1, 60,
        [piece(-1, 0.25, "0", "const", 0.0, 0.0),
         piece(0.25, 60, "1", "const", 1.0, 1.0)],
        [bp(0.25, 0.0, 0.5, 1.0)])

    files["step_half.json"] = spec(
        "step-at-0.5", -1, 60,
        [piece(-1, 0.5, "0", "const", 0.0, 0.0),
         piece(0.5, 60, "1", "const", 1.0, 1.0)],
        [bp(0.5, 0.0, 0.5, 1.0)])

    files["rho_int.json"] = spec(
        "misplaced-value-at-1", -1, 60,
        [piece(-1, 1, "0", "const", 0.0, 0.0),
         piece(1, 60, "1", "const", 1.0, 1.0)],
        [bp(1, 0.0, 2.0, 1.0)])

    files["rho_nonint.json"] = spec(
        "misplaced-value-at-0.5", -1, 60,
        [piece(-1, 0.5, "0", "const", 0.0, 0.0),
         piece(0.5, 60, "1", "const", 1.0, 1.0)],
        [bp(0.5, 0.0, 2.0, 1.0)])

    files["vshape.json"] = spec(
        "vshape", -1, 3,
        [piece(-1, 1, "abs(x-1)", "dec", 2.0, 0.0, antiderivative="x-x^2/2"),
         piece(1, 3, "abs(x-1)", "inc", 0.0, 2.0, antiderivative="x^2/2-x")],
        [bp(1, 0.0, 0.0, 0.0)])

    half_pi = math.pi / 2
    three_half_pi = 3 * math.pi / 2
    files["sin_arches.json"] = spec(
        "sin-arches", 0, 6.25,
        [piece(0, half_pi, "sin(x)", "inc", 0.0, 1.0, antiderivative="-cos(x)"),
         piece(half_pi, three_half_pi, "sin(x)", "dec", 1.0, -1.0,
               antiderivative="-cos(x)"),
         piece(three_half_pi, 6.25, "sin(x)", "inc", -1.0, math.sin(6.25),
               antiderivative="-cos(x)")],
        [bp(0, 0.0, 0.0, 0.0), bp(half_pi, 1.0, 1.0, 1.0),
         bp(three_half_pi, -1.0, -1.0, -1.0)])

    # smooth decay with one misplaced-value jump at 2.5 and one unit
    # drop at the integer 4
    v25 = ev("1/(1+x)", 2.5)
    v4 = ev("1/(1+x)+1", 4.0)
    files["mixed_jumps.json"] = spec(
        "mixed-jumps", 0, 60,
        [piece(0, 2.5, "1/(1+x)", "dec", 1.0, v25, antiderivative="log(1+x)"),
         piece(2.5, 4, "1/(1+x)+1", "dec", v25 + 1.0, v4,
               antiderivative="log(1+x)+x"),
         piece(4, 60, "1/(1+x)", "dec", ev("1/(1+x)", 4.0), ev("1/(1+x)", 60.0),
               antiderivative="log(1+x)")],
        [bp(0, 1.0, 1.0, 1.0),
         bp(2.5, v25, v25 + 2.0, v25 + 1.0),
         bp(4, v4, ev("1/(1+x)", 4.0), ev("1/(1+x)", 4.0))])

    return files


def main():
    OUT.mkdir(exist_ok=True)
    for name, payload in sorted(build().items()):
        path = OUT / name
        path.write_text(json.dumps(payload, indent=1) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
