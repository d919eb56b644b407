"""Small total expression language for piece evaluators and antiderivatives.

Grammar (EBNF, whitespace insignificant):

    expr   = term { ("+" | "-") term } ;
    term   = unary { ("*" | "/") unary } ;
    unary  = "-" unary | power ;
    power  = atom [ "^" unary ] ;
    atom   = NUMBER | "x" | "pi" | "e"
           | FUNC "(" expr ")" | "pow" "(" expr "," expr ")"
           | "(" expr ")" ;
    FUNC   = "exp" | "log" | "sqrt" | "abs" | "sin" | "cos" | "atan" | "floor" ;
    NUMBER = decimal or scientific literal, e.g. 2, 0.5, .5, 1e-3, 2.5E+10 ;

"^" is right-associative and binds tighter than unary minus, so "-2^2"
is -(2^2) = -4 while "(-2)^2" is 4.  Evaluation is total: any domain
violation (log of a nonpositive number, division by zero, 0^negative)
or non-finite intermediate raises EvalError instead of propagating
NaN/inf into certified results.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

FUNCTIONS = ("exp", "log", "sqrt", "abs", "sin", "cos", "atan", "floor")
CONSTANTS = {"pi": math.pi, "e": math.e}


class ParseError(ValueError):
    """Malformed expression text; carries the byte offset of the failure."""

    def __init__(self, offset: int, expected: tuple[str, ...], message: str):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset
        self.expected = expected
        self.message = message


class EvalError(ArithmeticError):
    """Domain violation or non-finite value during evaluation."""

    def __init__(self, kind: str, x: float):
        super().__init__(f"{kind} at x={x!r}")
        self.kind = kind
        self.x = x


class Expr:
    """Base class of AST nodes; all nodes are immutable and hashable."""


@dataclass(frozen=True)
class Num(Expr):
    value: float


@dataclass(frozen=True)
class Var(Expr):
    pass


@dataclass(frozen=True)
class Const(Expr):
    name: str


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Bin(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    fn: str
    args: tuple[Expr, ...]


_TOKEN_RE = re.compile(
    r"""(?P<num>(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<op>[-+*/^(),])
      | (?P<ws>\s+)""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(pos, (), f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, text, pos = self.peek()
        if kind == "op" and text == op:
            return self.advance()
        raise ParseError(pos, (op,), f"expected {op!r}")

    def parse(self) -> Expr:
        e = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(pos, ("end of input",), f"unexpected token {text!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in ("+", "-"):
                self.advance()
                e = Bin(text, e, self.term())
            else:
                return e

    def term(self) -> Expr:
        e = self.unary()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in ("*", "/"):
                self.advance()
                e = Bin(text, e, self.unary())
            else:
                return e

    def unary(self) -> Expr:
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            return Bin("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        kind, text, pos = self.advance()
        if kind == "num":
            return Num(float(text))
        if kind == "name":
            if text == "x":
                return Var()
            if text in CONSTANTS:
                return Const(text)
            if text in FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Call(text, (arg,))
            if text == "pow":
                self.expect_op("(")
                a = self.expr()
                self.expect_op(",")
                b = self.expr()
                self.expect_op(")")
                return Call("pow", (a, b))
            raise ParseError(pos, ("x", "pi", "e") + FUNCTIONS + ("pow",),
                             f"unknown identifier {text!r}")
        if kind == "op" and text == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if kind == "end":
            raise ParseError(pos, ("number", "x", "(", "function"),
                             "unexpected end of input")
        raise ParseError(pos, ("number", "x", "(", "function"),
                         f"unexpected token {text!r}")


def parse(text: str) -> Expr:
    """Parse expression text into an AST, raising ParseError on bad input."""
    return _Parser(text).parse()


def _scalar_pow(a: float, b: float, x: float) -> float:
    try:
        return math.pow(a, b)
    except OverflowError:
        raise EvalError("overflow", x) from None
    except ValueError:
        raise EvalError("pow_domain", x) from None
    except ZeroDivisionError:
        raise EvalError("pow_domain", x) from None


def _eval_scalar(e: Expr, x: float) -> float:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return x
    if isinstance(e, Const):
        return CONSTANTS[e.name]
    if isinstance(e, Neg):
        return -_eval_scalar(e.arg, x)
    if isinstance(e, Bin):
        a = _eval_scalar(e.left, x)
        b = _eval_scalar(e.right, x)
        if e.op == "+":
            r = a + b
        elif e.op == "-":
            r = a - b
        elif e.op == "*":
            r = a * b
        elif e.op == "/":
            if b == 0.0:
                raise EvalError("division_by_zero", x)
            r = a / b
        else:
            r = _scalar_pow(a, b, x)
        if not math.isfinite(r):
            raise EvalError("overflow", x)
        return r
    assert isinstance(e, Call)
    if e.fn == "pow":
        a = _eval_scalar(e.args[0], x)
        b = _eval_scalar(e.args[1], x)
        r = _scalar_pow(a, b, x)
        if not math.isfinite(r):
            raise EvalError("overflow", x)
        return r
    v = _eval_scalar(e.args[0], x)
    if e.fn == "log":
        if v <= 0.0:
            raise EvalError("log_domain", x)
        return math.log(v)
    if e.fn == "sqrt":
        if v < 0.0:
            raise EvalError("sqrt_domain", x)
        return math.sqrt(v)
    if e.fn == "exp":
        try:
            return math.exp(v)
        except OverflowError:
            raise EvalError("overflow", x) from None
    if e.fn == "abs":
        return abs(v)
    if e.fn == "floor":
        return float(math.floor(v))
    if e.fn == "sin":
        return math.sin(v)
    if e.fn == "cos":
        return math.cos(v)
    if e.fn == "atan":
        return math.atan(v)
    raise EvalError("unknown_function", x)


def _first_bad(r: np.ndarray, x: np.ndarray) -> float:
    bad = ~np.isfinite(np.asarray(r))
    if np.ndim(x) == 0:
        return float(x)
    xs = np.broadcast_to(x, np.asarray(r).shape)
    return float(xs[bad][0]) if bad.any() else float(xs.flat[0])


def _check_array(r: np.ndarray, x: np.ndarray, kind: str) -> np.ndarray:
    if not np.all(np.isfinite(r)):
        raise EvalError(kind, _first_bad(r, x))
    return r


_ARRAY_KIND = {"+": "overflow", "-": "overflow", "*": "overflow",
               "/": "division_by_zero", "^": "pow_domain"}
_ARRAY_FN = {"exp": (np.exp, "overflow"), "log": (np.log, "log_domain"),
             "sqrt": (np.sqrt, "sqrt_domain"), "abs": (np.abs, "overflow"),
             "sin": (np.sin, "overflow"), "cos": (np.cos, "overflow"),
             "atan": (np.atan if hasattr(np, "atan") else np.arctan, "overflow"),
             "floor": (np.floor, "overflow")}


def _eval_array(e: Expr, x: np.ndarray) -> np.ndarray:
    if isinstance(e, Num):
        return np.float64(e.value)
    if isinstance(e, Var):
        return x
    if isinstance(e, Const):
        return np.float64(CONSTANTS[e.name])
    if isinstance(e, Neg):
        return -_eval_array(e.arg, x)
    if isinstance(e, Bin):
        a = _eval_array(e.left, x)
        b = _eval_array(e.right, x)
        if e.op == "+":
            r = a + b
        elif e.op == "-":
            r = a - b
        elif e.op == "*":
            r = a * b
        elif e.op == "/":
            r = a / b
        else:
            r = np.power(a, b)
        return _check_array(r, x, _ARRAY_KIND[e.op])
    assert isinstance(e, Call)
    if e.fn == "pow":
        a = _eval_array(e.args[0], x)
        b = _eval_array(e.args[1], x)
        return _check_array(np.power(a, b), x, "pow_domain")
    fn, kind = _ARRAY_FN[e.fn]
    return _check_array(fn(_eval_array(e.args[0], x)), x, kind)


def eval_expr(e: Expr, x):
    """Evaluate at a float or a numpy array; raises EvalError when any
    point produces a domain violation or a non-finite value."""
    if isinstance(x, np.ndarray):
        with np.errstate(all="ignore"):
            r = _eval_array(e, x)
        if np.ndim(r) == 0:
            return np.full_like(x, float(r), dtype=np.float64)
        return np.asarray(r, dtype=np.float64)
    return _eval_scalar(e, float(x))


_PREC_ATOM = 5
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}


def _prec(e: Expr) -> int:
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Bin):
        return _PREC[e.op]
    return _PREC_ATOM


def render(e: Expr) -> str:
    """Render an AST back to text; parse(render(e)) == e."""
    if isinstance(e, Num):
        return repr(e.value)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Neg):
        inner = render(e.arg)
        return "-" + (inner if _prec(e.arg) >= 3 else f"({inner})")
    if isinstance(e, Bin):
        p = _PREC[e.op]
        ls, rs = render(e.left), render(e.right)
        if e.op == "^":
            if _prec(e.left) <= 4:
                ls = f"({ls})"
            if _prec(e.right) < 3:
                rs = f"({rs})"
        else:
            if _prec(e.left) < p:
                ls = f"({ls})"
            if _prec(e.right) <= p:
                rs = f"({rs})"
        return f"{ls}{e.op}{rs}"
    assert isinstance(e, Call)
    return f"{e.fn}({','.join(render(a) for a in e.args)})"
