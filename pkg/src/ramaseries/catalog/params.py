"""Parameter schemas and a safe parser for parameter expressions.

Real parameters are written as small arithmetic expressions such as ``0.3``,
``1/sqrt(5)`` or ``sqrt(5)/3``.  Besides the numeric value, the parser tries
to keep the expression in the exact form c*sqrt(d) (c rational, d a positive
integer) so that z^2 is available as an exact rational.  Angles must be
rational multiples of pi (``pi/3``, ``2*pi/3``).
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Mapping, Optional

from ..closed_forms import PiMultiple
from ..errors import ParamDomain
from ..numeric import PrecisionContext

MAX_EXPR_LENGTH = 200
MAX_EXPONENT = 64

KINDS = ("int", "real", "angle", "choice")


# ---------------------------------------------------------------------------
# expression evaluation

def _parse(text: str) -> ast.expr:
    if not isinstance(text, str) or not text.strip():
        raise ParamDomain("empty parameter expression")
    if len(text) > MAX_EXPR_LENGTH:
        raise ParamDomain("parameter expression too long")
    try:
        return ast.parse(text.strip(), mode="eval").body
    except SyntaxError:
        raise ParamDomain(f"cannot parse {text!r}") from None


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def _literal(node: ast.Constant) -> Fraction:
    v = node.value
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParamDomain(f"unsupported literal {v!r}")
    if isinstance(v, float):
        # decimal literals are read as written, not as the nearest binary double
        return Fraction(repr(v))
    return Fraction(v)


def _int_exponent(node: ast.expr) -> int:
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_exponent(node.operand)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        if abs(node.value) > MAX_EXPONENT:
            raise ParamDomain("exponent too large")
        return node.value
    raise ParamDomain("exponents must be integer literals")


@dataclass(frozen=True)
class Surd:
    """The exact number c * sqrt(d) with c rational and d >= 1 an integer."""

    c: Fraction
    d: int = 1

    def __post_init__(self):
        r = math.isqrt(self.d)
        if r * r == self.d and self.d != 1:
            object.__setattr__(self, "c", self.c * r)
            object.__setattr__(self, "d", 1)
        if self.c == 0:
            object.__setattr__(self, "d", 1)

    def square(self) -> Fraction:
        return self.c * self.c * self.d

    def __mul__(self, other: "Surd") -> "Surd":
        return Surd(self.c * other.c, self.d * other.d)

    def __truediv__(self, other: "Surd") -> "Surd":
        if other.c == 0:
            raise ParamDomain("division by zero")
        # c1 sqrt(d1) / (c2 sqrt(d2)) = (c1 / (c2 d2)) sqrt(d1 d2)
        return Surd(self.c / (other.c * other.d), self.d * other.d)

    def __add__(self, other: "Surd") -> Optional["Surd"]:
        if self.c == 0:
            return other
        if other.c == 0:
            return self
        if self.d != other.d:
            return None
        return Surd(self.c + other.c, self.d)

    def __neg__(self) -> "Surd":
        return Surd(-self.c, self.d)


def _sqrt_surd(s: Surd) -> Optional[Surd]:
    if s.d != 1 or s.c < 0:
        return None
    q = s.c
    # sqrt(a/b) = sqrt(a b) / b
    return Surd(Fraction(1, q.denominator), q.numerator * q.denominator)


def _eval_surd(node: ast.expr) -> Optional[Surd]:
    """Exact evaluation in the c*sqrt(d) form, or None if it leaves that form."""
    if isinstance(node, ast.Constant):
        return Surd(_literal(node))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_surd(node.operand)
        if v is None:
            return None
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval_surd(node.left)
            e = _int_exponent(node.right)
            if base is None:
                return None
            if e < 0 and base.c == 0:
                raise ParamDomain("division by zero")
            out = Surd(Fraction(1))
            for _ in range(abs(e)):
                out = out * base
            return out if e >= 0 else Surd(Fraction(1)) / out
        left, right = _eval_surd(node.left), _eval_surd(node.right)
        if left is None or right is None:
            return None
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left + (-right)
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
        raise ParamDomain("unsupported operator")
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt" and len(node.args) == 1:
        inner = _eval_surd(node.args[0])
        return None if inner is None else _sqrt_surd(inner)
    if isinstance(node, ast.Name) and node.id == "pi":
        return None
    raise ParamDomain(f"unsupported expression element {ast.dump(node)[:40]}")


def _eval_mp(node: ast.expr, ctx: PrecisionContext):
    """Numeric evaluation at the working precision of ``ctx``."""
    if isinstance(node, ast.Constant):
        return ctx.mpf(_literal(node))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_mp(node.operand, ctx)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            return ctx.mp.power(_eval_mp(node.left, ctx), _int_exponent(node.right))
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ParamDomain("unsupported operator")
        left, right = _eval_mp(node.left, ctx), _eval_mp(node.right, ctx)
        if op is operator.truediv and right == 0:
            raise ParamDomain("division by zero")
        return op(left, right)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt" and len(node.args) == 1:
        v = _eval_mp(node.args[0], ctx)
        if v < 0:
            raise ParamDomain("square root of a negative number")
        return ctx.sqrt(v)
    if isinstance(node, ast.Name) and node.id == "pi":
        return ctx.pi
    raise ParamDomain(f"unsupported expression element {ast.dump(node)[:40]}")


def _eval_pi_linear(node: ast.expr) -> tuple[Fraction, Fraction]:
    """Evaluate as a + b*pi with rational a, b."""
    if isinstance(node, ast.Constant):
        return _literal(node), Fraction(0)
    if isinstance(node, ast.Name) and node.id == "pi":
        return Fraction(0), Fraction(1)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        a, b = _eval_pi_linear(node.operand)
        return (-a, -b) if isinstance(node.op, ast.USub) else (a, b)
    if isinstance(node, ast.BinOp):
        a1, b1 = _eval_pi_linear(node.left)
        a2, b2 = _eval_pi_linear(node.right)
        if isinstance(node.op, ast.Add):
            return a1 + a2, b1 + b2
        if isinstance(node.op, ast.Sub):
            return a1 - a2, b1 - b2
        if isinstance(node.op, ast.Mult):
            if b1 and b2:
                raise ParamDomain("angle must be linear in pi")
            return a1 * a2, a1 * b2 + b1 * a2
        if isinstance(node.op, ast.Div):
            if b2 or a2 == 0:
                raise ParamDomain("angle may only be divided by a non-zero rational")
            return a1 / a2, b1 / a2
    raise ParamDomain("angles must be rational multiples of pi, e.g. 2*pi/3")


# ---------------------------------------------------------------------------
# parsed values

@dataclass(frozen=True)
class RealParam:
    """A real parameter kept as its source expression."""

    text: str
    square: Optional[Fraction] = None  # exact z^2 when available

    @classmethod
    def parse(cls, text) -> "RealParam":
        if isinstance(text, RealParam):
            return text
        if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
            text = str(text)
        elif isinstance(text, float):
            text = repr(text)
        node = _parse(str(text))
        surd = _eval_surd(node)
        return cls(str(text).strip(), None if surd is None else surd.square())

    def value(self, ctx: PrecisionContext):
        return _eval_mp(_parse(self.text), ctx)

    def approx(self) -> float:
        from ..numeric import make_context
        return float(self.value(make_context(64)))

    def exact(self) -> Optional[Fraction]:
        """The value itself when it is rational."""
        surd = _eval_surd(_parse(self.text))
        return surd.c if surd is not None and surd.d == 1 else None

    def __str__(self) -> str:
        return self.text


def parse_angle(text) -> PiMultiple:
    if isinstance(text, PiMultiple):
        return text
    a, b = _eval_pi_linear(_parse(str(text)))
    if a != 0:
        raise ParamDomain("angles must be rational multiples of pi, e.g. 2*pi/3")
    return PiMultiple(b)


def parse_int(text) -> int:
    if isinstance(text, bool):
        raise ParamDomain("expected an integer")
    if isinstance(text, int):
        return text
    try:
        return int(str(text).strip())
    except ValueError:
        raise ParamDomain(f"expected an integer, got {text!r}") from None


# ---------------------------------------------------------------------------
# schema

@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str = "int"
    doc: str = ""
    check: Optional[Callable[[Any], bool]] = None
    choices: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown parameter kind {self.kind!r}")

    def parse(self, raw):
        if self.kind == "int":
            v = parse_int(raw)
        elif self.kind == "real":
            v = RealParam.parse(raw)
        elif self.kind == "angle":
            v = parse_angle(raw)
        else:
            v = str(raw).strip()
            if v not in self.choices:
                raise ParamDomain(f"{self.name} must be one of {', '.join(self.choices)}")
        if self.check is not None and not self.check(v):
            raise ParamDomain(f"{self.name}={v} is outside the domain: {self.doc}")
        return v


def parse_params(schema: tuple[ParamSpec, ...], raw: Mapping | None,
                 joint: Optional[Callable[[dict], Optional[str]]] = None) -> dict:
    """Validate ``raw`` against ``schema``; ``joint`` returns an error message
    for combinations that are individually valid but jointly out of domain."""
    raw = dict(raw or {})
    names = [s.name for s in schema]
    unknown = sorted(set(raw) - set(names))
    if unknown:
        raise ParamDomain(f"unknown parameter(s): {', '.join(unknown)}")
    missing = [n for n in names if n not in raw]
    if missing:
        raise ParamDomain(f"missing parameter(s): {', '.join(missing)}")
    out = {s.name: s.parse(raw[s.name]) for s in schema}
    if joint is not None:
        msg = joint(out)
        if msg:
            raise ParamDomain(msg)
    return out


def canonical(params: Mapping) -> dict:
    """JSON-friendly form: ints stay ints, everything else becomes its text."""
    return {k: (v if isinstance(v, int) and not isinstance(v, bool) else str(v)) for k, v in params.items()}


def sort_key(params: Mapping) -> tuple:
    """Deterministic ordering of instantiations of one identity."""
    key = []
    for name in sorted(params):
        v = params[name]
        if isinstance(v, int):
            key.append((name, 0, float(v), str(v)))
        elif isinstance(v, PiMultiple):
            key.append((name, 0, float(v.q), str(v)))
        elif isinstance(v, RealParam):
            key.append((name, 0, v.approx(), v.text))
        else:
            key.append((name, 1, 0.0, str(v)))
    return tuple(key)


def numeric(params: Mapping, ctx: PrecisionContext) -> dict:
    """Parameters as numbers for closed-form evaluators."""
    return {k: (v.value(ctx) if isinstance(v, RealParam) else v) for k, v in params.items()}

