"""Stieltjes measure of a BV function, certified quadrature against dx and
against d(mu_f), and the periodic first Bernoulli kernel.

Every approximate routine returns a Certified(value, radius) enclosure.
On monotone pieces the Lebesgue integral is bracketed by Darboux sums
(no smoothness assumed); when a piece carries an antiderivative the
closed form is used instead, with an ulp-scale radius, after the
antiderivative has passed the sampled difference-quotient check.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from . import expr as ex
from .bv import (
    BvFunction,
    Certified,
    MonotonePiece,
    check_antiderivative,
    left_limit,
    right_limit,
    _segment_endpoint_values,
)
from .errors import (
    BadAntiderivative,
    DomainError,
    MissingAntiderivative,
    NonIntegerBounds,
    ToleranceUnreachable,
)

_EPS = sys.float_info.epsilon
MAX_CELLS = 1 << 24  # subdivision cap per piece segment
_CHUNK = 1 << 20

DEFAULT_TOL = 1e-10


def _slack(*vals: float) -> float:
    """Ulp-scale radius covering the rounding of a short computation."""
    return 8.0 * _EPS * math.fsum(abs(v) for v in vals)


@dataclass(frozen=True)
class Divergent:
    """Marker result: the improper integral has no finite value."""


DIVERGENT = Divergent()


@dataclass(frozen=True)
class IntervalSpec:
    """An interval with explicit closed/open flags at each end."""

    lo: float
    hi: float
    closed_lo: bool
    closed_hi: bool

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @classmethod
    def open(cls, lo: float, hi: float) -> "IntervalSpec":
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo: float, hi: float) -> "IntervalSpec":
        return cls(lo, hi, True, True)

    @classmethod
    def singleton(cls, x: float) -> "IntervalSpec":
        return cls(x, x, True, True)

    @property
    def is_empty(self) -> bool:
        return self.lo == self.hi and not (self.closed_lo and self.closed_hi)

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi and self.closed_lo and self.closed_hi


@dataclass(frozen=True)
class StieltjesResult:
    """Certified Stieltjes integral split into jump and continuous parts."""

    certified: Certified
    atom_contribution: float
    continuous_contribution: Certified

    @property
    def value(self) -> float:
        return self.certified.value

    @property
    def radius(self) -> float:
        return self.certified.radius


def measure_interval(f: BvFunction, iv: IntervalSpec) -> float:
    """Signed measure mu_f of the interval, via one-sided limits:
    ]c,d[ -> f(d-)-f(c+), [c,d] -> f(d+)-f(c-), [c,d[ -> f(d-)-f(c-),
    ]c,d] -> f(d+)-f(c+), {c} -> f(c+)-f(c-)."""
    if iv.is_empty:
        return 0.0
    if iv.lo < f.domain_lo or iv.hi > f.domain_hi:
        raise DomainError(f"interval [{iv.lo}, {iv.hi}] outside domain")
    if iv.is_singleton:
        return right_limit(f, iv.lo, strict=True) - left_limit(f, iv.lo, strict=True)
    hi_val = (right_limit(f, iv.hi, strict=True) if iv.closed_hi
              else left_limit(f, iv.hi, strict=True))
    lo_val = (left_limit(f, iv.lo, strict=True) if iv.closed_lo
              else right_limit(f, iv.lo, strict=True))
    return hi_val - lo_val


def total_variation_measure(f: BvFunction, iv: IntervalSpec) -> float:
    """|mu_f| of a bounded open interval (or an open half-line tail):
    sum of |piece increments| plus |jump| over interior breakpoints."""
    if iv.closed_lo or iv.closed_hi:
        raise ValueError("total_variation_measure needs an open interval")
    if iv.lo >= iv.hi:
        return 0.0
    if iv.lo < f.domain_lo or iv.hi > f.domain_hi:
        raise DomainError(f"interval ]{iv.lo}, {iv.hi}[ outside domain")
    terms: list[float] = []
    for p in f.pieces:
        s, t = max(iv.lo, p.lo), min(iv.hi, p.hi)
        if s >= t:
            continue
        vl, vr = _segment_endpoint_values(p, s, t)
        terms.append(abs(vr - vl))
    for bp in f.breakpoints:
        if iv.lo < bp.x < iv.hi:
            terms.append(abs(bp.jump))
    return math.fsum(terms)


# ---------------------------------------------------------------------------
# Lebesgue quadrature


def _overlapping_segments(f: BvFunction, a: float, b: float):
    for p in f.pieces:
        s, t = max(a, p.lo), min(b, p.hi)
        if s < t:
            yield p, s, t


def _grid_sum(e: ex.Expr, s: float, t: float, n: int, v0: float, vn: float) -> float:
    """Sum of evaluator values on the n+1 point uniform grid over [s, t],
    with the end values replaced by the supplied one-sided limits."""
    parts = [v0, vn]
    for start in range(1, n, _CHUNK):
        stop = min(n, start + _CHUNK)
        idx = np.arange(start, stop, dtype=np.float64)
        xs = s + (t - s) * (idx / n)
        parts.append(float(np.sum(ex.eval_expr(e, xs))))
    return math.fsum(parts)


def _darboux_segment(p: MonotonePiece, s: float, t: float, budget: float):
    """Certified integral of a monotone piece over [s, t] by bracketing
    Darboux sums; the bracket gap for a monotone function on an n-cell
    grid is (t-s)/n * |f(t)-f(s)|, so the cell count is doubled until
    half the gap fits the budget."""
    v0, vn = _segment_endpoint_values(p, s, t)
    width = t - s
    spread = abs(vn - v0)
    n = 64
    while width * spread / (2 * n) > budget:
        n *= 2
        if n > MAX_CELLS:
            raise ToleranceUnreachable(
                f"Darboux bracketing needs more than {MAX_CELLS} cells on "
                f"[{s}, {t}]; supply an antiderivative or relax tol")
    h = width / n
    total = _grid_sum(p.evaluator, s, t, n, v0, vn)
    value = h * (total - 0.5 * (v0 + vn))
    radius = 0.5 * h * spread + _slack(value)
    return value, radius


def integrate(f: BvFunction, a: float, b: float, tol: float = DEFAULT_TOL) -> Certified:
    """Certified enclosure of the Lebesgue integral of f over [a, b].

    Constant pieces are exact; pieces with a validated antiderivative F
    contribute F(t)-F(s) with an ulp-scale radius; remaining monotone
    pieces are bracketed by Darboux sums refined until the total radius
    is at most tol (ToleranceUnreachable past the subdivision cap).
    """
    if math.isnan(a) or math.isnan(b) or a > b:
        raise DomainError(f"need a <= b, got [{a}, {b}]")
    if a < f.domain_lo or b > f.domain_hi or math.isinf(b):
        raise DomainError(f"[{a}, {b}] outside domain")
    if a == b:
        return Certified(0.0, 0.0)
    values: list[float] = []
    radii: list[float] = []
    fallback: list[tuple[MonotonePiece, float, float]] = []
    for p, s, t in _overlapping_segments(f, a, b):
        if p.direction == "const":
            values.append(p.left_boundary_limit * (t - s))
            radii.append(0.0)
        elif p.antiderivative is not None:
            fs = ex.eval_expr(p.antiderivative, s)
            ft = ex.eval_expr(p.antiderivative, t)
            values.append(ft - fs)
            radii.append(_slack(fs, ft, ft - fs))
        else:
            fallback.append((p, s, t))
    if fallback:
        budget = tol - math.fsum(radii)
        if budget <= 0.0:
            raise ToleranceUnreachable(f"tolerance {tol} below rounding floor")
        weights = []
        for p, s, t in fallback:
            v0, vn = _segment_endpoint_values(p, s, t)
            weights.append((t - s) * abs(vn - v0) + 1e-300)
        wsum = math.fsum(weights)
        for (p, s, t), w in zip(fallback, weights):
            v, r = _darboux_segment(p, s, t, budget * w / wsum)
            values.append(v)
            radii.append(r)
    result = Certified(math.fsum(values), math.fsum(radii))
    if result.radius > tol:
        raise ToleranceUnreachable(
            f"achieved radius {result.radius:.3g} exceeds tol {tol:.3g}")
    return result


def tail_integral(f: BvFunction, n: float, tol: float = DEFAULT_TOL):
    """Certified integral of f from n to +inf, or DIVERGENT.

    Requires tail antiderivative data; F' is re-checked against f by
    sampled difference quotients (BadAntiderivative on mismatch).  For
    n below the last breakpoint the head is handled by integrate().
    """
    if not f.is_half_line:
        raise DomainError("tail_integral needs a half-line domain")
    if math.isnan(n) or n < f.domain_lo:
        raise DomainError(f"n={n!r} outside domain")
    ts = f.tail
    if ts is None or ts.antiderivative is None:
        raise MissingAntiderivative("no tail antiderivative supplied")
    tail_piece = f.pieces[-1]
    if check_antiderivative(tail_piece.evaluator, ts.antiderivative,
                            tail_piece.lo, tail_piece.hi) > 1.0:
        raise BadAntiderivative("tail antiderivative fails the sampled F' = f check")
    if ts.antiderivative_limit is None or math.isinf(ts.antiderivative_limit):
        return DIVERGENT
    f_inf = ts.antiderivative_limit
    start = max(n, tail_piece.lo)
    f_start = ex.eval_expr(ts.antiderivative, start)
    value = f_inf - f_start
    radius = _slack(f_inf, f_start, value)
    if n < tail_piece.lo:
        head = integrate(f, n, tail_piece.lo, tol)
        value += head.value
        radius += head.radius
    return Certified(value, radius)


# ---------------------------------------------------------------------------
# Periodic Bernoulli kernel


def beta1(x: float) -> float:
    """1-periodic extension of B1(x) = x - 1/2, set to 0 at integers."""
    fr = x - math.floor(x)
    if fr == 0.0:
        return 0.0
    return fr - 0.5


def _beta1_branch(x: float, k: float) -> float:
    # affine branch of beta1 on the open cell (k, k+1)
    return x - k - 0.5


# ---------------------------------------------------------------------------
# Riemann-Stieltjes integration against d(mu_f)


def _int_points(lo: float, hi: float) -> list[float]:
    return [float(k) for k in range(math.ceil(lo), math.floor(hi) + 1)]


def _refinement_grid(lo: float, hi: float, fns: tuple[BvFunction, ...],
                     with_integers: bool) -> list[float]:
    pts = {lo, hi}
    for fn in fns:
        pts.update(bp.x for bp in fn.breakpoints if lo < bp.x < hi)
    if with_integers:
        pts.update(k for k in _int_points(lo, hi) if lo < k < hi)
    return sorted(pts)


def _stieltjes_beta1_segment(p: MonotonePiece, s: float, t: float, budget: float):
    """Integral of beta1 against d(mu_f) on an open cell (s, t) that
    contains no integer and no breakpoint; f is continuous there."""
    if p.direction == "const":
        return 0.0, 0.0
    k = math.floor(s)
    v0, vn = _segment_endpoint_values(p, s, t)
    if p.antiderivative is not None:
        # beta1 has slope 1 on the cell, so Stieltjes parts gives
        # [branch * f] at the ends minus the plain integral of f.
        fs = ex.eval_expr(p.antiderivative, s)
        ft = ex.eval_expr(p.antiderivative, t)
        value = _beta1_branch(t, k) * vn - _beta1_branch(s, k) * v0 - (ft - fs)
        return value, _slack(fs, ft, v0, vn, value)
    # tagged Riemann-Stieltjes sums; beta1 is 1-Lipschitz on the cell so
    # the midpoint-tag error per subcell is (h/2) * |mu_f|(subcell)
    width = t - s
    spread = abs(vn - v0)
    n = 16
    while width * spread / (2 * n) > budget:
        n *= 2
        if n > MAX_CELLS:
            raise ToleranceUnreachable(
                f"Stieltjes refinement needs more than {MAX_CELLS} cells on "
                f"[{s}, {t}]; supply an antiderivative or relax tol")
    parts = []
    for start in range(0, n, _CHUNK):
        stop = min(n, start + _CHUNK)
        xs = s + width * (np.arange(start, stop + 1, dtype=np.float64) / n)
        vals = ex.eval_expr(p.evaluator, xs)
        if start == 0:
            vals[0] = v0
        if stop == n:
            vals[-1] = vn
        mids = 0.5 * (xs[:-1] + xs[1:])
        parts.append(float(np.sum((mids - (k + 0.5)) * np.diff(vals))))
    value = math.fsum(parts)
    radius = 0.5 * (width / n) * spread + _slack(value)
    return value, radius


def stieltjes_beta1(f: BvFunction, lo: int, hi: int,
                    tol: float = DEFAULT_TOL) -> StieltjesResult:
    """Certified integral of beta1 over the open interval ]lo, hi[
    against d(mu_f), split into atom and continuous contributions.

    Atoms at integer breakpoints vanish because beta1 is 0 there; the
    continuous part is computed per cell of the grid that contains all
    integers and all breakpoints, so beta1 is affine on every cell.
    """
    lo, hi = _require_int(lo), _require_int(hi)
    if lo >= hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if lo < f.domain_lo or hi > f.domain_hi:
        raise DomainError(f"]{lo}, {hi}[ outside domain")
    atoms = math.fsum(
        beta1(bp.x) * bp.jump for bp in f.breakpoints if lo < bp.x < hi)
    grid = _refinement_grid(float(lo), float(hi), (f,), with_integers=True)
    segments = []
    for s, t in zip(grid[:-1], grid[1:]):
        p = f.piece_containing(0.5 * (s + t))
        if p is None:
            raise DomainError(f"no piece covers ({s}, {t})")
        segments.append((p, s, t))
    values: list[float] = []
    radii: list[float] = []
    fallback = [(p, s, t) for p, s, t in segments
                if p.direction != "const" and p.antiderivative is None]
    for p, s, t in segments:
        if p.direction == "const" or p.antiderivative is not None:
            v, r = _stieltjes_beta1_segment(p, s, t, tol)
            values.append(v)
            radii.append(r)
    if fallback:
        budget = tol - math.fsum(radii)
        if budget <= 0.0:
            raise ToleranceUnreachable(f"tolerance {tol} below rounding floor")
        weights = []
        for p, s, t in fallback:
            v0, vn = _segment_endpoint_values(p, s, t)
            weights.append((t - s) * abs(vn - v0) + 1e-300)
        wsum = math.fsum(weights)
        for (p, s, t), w in zip(fallback, weights):
            v, r = _stieltjes_beta1_segment(p, s, t, budget * w / wsum)
            values.append(v)
            radii.append(r)
    cont = Certified(math.fsum(values), math.fsum(radii))
    if cont.radius > tol:
        raise ToleranceUnreachable(
            f"achieved radius {cont.radius:.3g} exceeds tol {tol:.3g}")
    return StieltjesResult(Certified(atoms + cont.value, cont.radius), atoms, cont)


def _require_int(v) -> int:
    if isinstance(v, bool):
        raise NonIntegerBounds(f"bounds must be integers, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise NonIntegerBounds(f"bounds must be integers, got {v!r}")


def _rs_mid_pass(gp: MonotonePiece, fp: MonotonePiece, s: float, t: float,
                 ends: tuple[float, float, float, float], n: int):
    """One tagged Riemann-Stieltjes pass on n subcells, chunked."""
    fv0, fvn, gv0, gvn = ends
    width = t - s
    value_parts: list[float] = []
    err_parts: list[float] = []
    for start in range(0, n, _CHUNK):
        stop = min(n, start + _CHUNK)
        xs = s + width * (np.arange(start, stop + 1, dtype=np.float64) / n)
        fv = ex.eval_expr(fp.evaluator, xs)
        gv = ex.eval_expr(gp.evaluator, xs)
        if start == 0:
            fv[0], gv[0] = fv0, gv0
        if stop == n:
            fv[-1], gv[-1] = fvn, gvn
        mids = 0.5 * (xs[:-1] + xs[1:])
        gmid = ex.eval_expr(gp.evaluator, mids)
        dmu = np.diff(fv)
        value_parts.append(float(np.sum(gmid * dmu)))
        err_parts.append(float(np.sum(np.abs(np.diff(gv)) * np.abs(dmu))))
    return math.fsum(value_parts), math.fsum(err_parts)


def _stieltjes_mid_segment(g: BvFunction, f: BvFunction, s: float, t: float,
                           budget: float):
    """Integral of g (continuous on (s,t)) against d(mu_f) on the open
    cell; tagged Riemann-Stieltjes sums with cell error bounded by
    osc(g) * |mu_f| per subcell."""
    mid = 0.5 * (s + t)
    fp = f.piece_containing(mid)
    if fp is None or fp.direction == "const":
        return 0.0, 0.0
    gp = g.piece_containing(mid)
    if gp is None:
        raise DomainError(f"no piece of the integrand covers ({s}, {t})")
    ends = (right_limit(f, s), left_limit(f, t),
            right_limit(g, s), left_limit(g, t))
    n = 16
    while True:
        value, err = _rs_mid_pass(gp, fp, s, t, ends, n)
        if err <= budget or n >= MAX_CELLS:
            break
        growth = max(2.0, 1.2 * err / max(budget, 1e-300))
        n = min(MAX_CELLS, int(n * growth) + 1)
    if err > budget:
        raise ToleranceUnreachable(
            f"Stieltjes refinement hit the {MAX_CELLS}-cell cap on [{s}, {t}]")
    return value, err + _slack(value)


def stieltjes_midvalue(g: BvFunction, f: BvFunction, lo: float, hi: float,
                       tol: float = DEFAULT_TOL) -> Certified:
    """Certified integral of the mid-value modification of g over
    [lo, hi[ against d(mu_f).

    Atoms: g_m(x) * jump_f(x) over breakpoints of f in [lo, hi[ (the
    left end belongs to the interval).  The continuous part runs on the
    common refinement of both breakpoint sets, so g is continuous and
    equal to g_m inside every cell.
    """
    if math.isnan(lo) or math.isnan(hi) or lo >= hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    for fn in (f, g):
        if lo < fn.domain_lo or hi > fn.domain_hi:
            raise DomainError(f"[{lo}, {hi}[ outside a domain")
    from .bv import mid_value_strict

    atom_terms = []
    for bp in f.breakpoints:
        if lo <= bp.x < hi and bp.jump != 0.0:
            atom_terms.append(mid_value_strict(g, bp.x) * bp.jump)
    atoms = math.fsum(atom_terms)

    grid = _refinement_grid(lo, hi, (f, g), with_integers=False)
    cells = list(zip(grid[:-1], grid[1:]))
    values: list[float] = [atoms]
    radii: list[float] = []
    # coarse error estimates decide the per-cell budget split
    est = []
    for s, t in cells:
        fp = f.piece_containing(0.5 * (s + t))
        if fp is None or fp.direction == "const":
            est.append(0.0)
        else:
            v0, vn = _segment_endpoint_values(fp, s, t)
            gz = abs(right_limit(g, s) - left_limit(g, t))
            est.append(abs(vn - v0) * gz + 1e-300)
    wsum = math.fsum(est)
    for (s, t), w in zip(cells, est):
        if w == 0.0:
            continue
        v, r = _stieltjes_mid_segment(g, f, s, t, tol * w / wsum if wsum > 0 else tol)
        values.append(v)
        radii.append(r)
    result = Certified(math.fsum(values), math.fsum(radii))
    if result.radius > tol:
        raise ToleranceUnreachable(
            f"achieved radius {result.radius:.3g} exceeds tol {tol:.3g}")
    return result
