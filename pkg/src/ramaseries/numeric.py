"""Precision contexts, elementary functions and outward-rounded brackets.

Every real number in the package is an mpmath ``mpf`` produced by the
``MPContext`` owned by a :class:`PrecisionContext`.  A context works at
``prec_bits + guard_bits`` bits; results are trusted to ``prec_bits``.

:class:`Bracket` endpoints are exact binary numbers.  Bracket arithmetic
rounds the lower endpoint toward -inf and the upper one toward +inf, so a
bracket never loses the value it encloses.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key, lru_cache

import mpmath
from mpmath import libmp
from mpmath.ctx_mp import MPContext

DEFAULT_PREC_BITS = 256
MIN_PREC_BITS = 64
MAX_PREC_BITS = 4096
DEFAULT_GUARD_BITS = 64
MIN_GUARD_BITS = 32
PREC_ENV_VAR = "RAMASERIES_PREC_BITS"

# Precision for bracket endpoint arithmetic (outward rounded, so only width suffers).
BRACKET_PREC = 512

# Private high-precision context used to wrap exact raw values.
_EXACT = MPContext()
_EXACT.prec = 2 * MAX_PREC_BITS

_FLOOR = libmp.round_floor
_CEIL = libmp.round_ceiling


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision for a computation.

    The context is immutable.  ``mp`` is an mpmath context private to this
    object, set to ``wp = prec_bits + guard_bits`` bits.
    """

    prec_bits: int = DEFAULT_PREC_BITS
    guard_bits: int = DEFAULT_GUARD_BITS

    def __post_init__(self):
        if not isinstance(self.prec_bits, int) or self.prec_bits < MIN_PREC_BITS:
            raise ValueError(f"prec_bits must be an integer >= {MIN_PREC_BITS}, got {self.prec_bits!r}")
        if self.prec_bits > MAX_PREC_BITS:
            raise ValueError(f"prec_bits above {MAX_PREC_BITS} is not supported")
        if not isinstance(self.guard_bits, int) or self.guard_bits < MIN_GUARD_BITS:
            raise ValueError(f"guard_bits must be an integer >= {MIN_GUARD_BITS}")

    @property
    def wp(self) -> int:
        """Working precision in bits."""
        return self.prec_bits + self.guard_bits

    @cached_property
    def mp(self) -> MPContext:
        ctx = MPContext()
        ctx.prec = self.wp
        return ctx

    @property
    def eps(self):
        """2**-prec_bits, the trusted relative accuracy."""
        return self.mp.ldexp(1, -self.prec_bits)

    # construction ---------------------------------------------------------

    def mpf(self, x):
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def mpc(self, re, im=0):
        return self.mp.mpc(self.mpf(re), self.mpf(im))

    # elementary functions -------------------------------------------------
    # Each is faithful to a few ulp at wp bits.

    def ln(self, x):
        """Natural logarithm of a positive real."""
        x = self.mpf(x)
        if not x > 0:
            raise DomainError(f"ln requires a positive real argument, got {self.nstr(x, 15)}")
        return self.mp.ln(x)

    def sqrt(self, x):
        x = self.mpf(x)
        if x < 0:
            raise DomainError(f"sqrt of negative number {self.nstr(x, 15)}")
        return self.mp.sqrt(x)

    def exp(self, x):
        return self.mp.exp(self.mpf(x))

    def atan(self, x):
        return self.mp.atan(self.mpf(x))

    def sin(self, x):
        return self.mp.sin(self.mpf(x))

    def cos(self, x):
        return self.mp.cos(self.mpf(x))

    def tan(self, x):
        return self.mp.tan(self.mpf(x))

    def div(self, a, b):
        b = b if hasattr(b, "_mpc_") else self.mpf(b)
        if b == 0:
            raise DomainError("division by zero")
        return a / b

    @property
    def pi(self):
        return const_pi(self)

    def nstr(self, x, digits: int | None = None) -> str:
        return to_decimal(x, digits or self.prec_bits // 3)


def make_context(prec_bits: int | None = None, guard_bits: int = DEFAULT_GUARD_BITS) -> PrecisionContext:
    """Return the (cached) context for ``prec_bits``.

    ``None`` selects ``$RAMASERIES_PREC_BITS`` or 256 bits.
    """
    if prec_bits is None:
        env = os.environ.get(PREC_ENV_VAR)
        try:
            prec_bits = int(env) if env else DEFAULT_PREC_BITS
        except ValueError:
            raise ValueError(f"{PREC_ENV_VAR} must be an integer number of bits, got {env!r}") from None
    return _make_context(prec_bits, guard_bits)


@lru_cache(maxsize=None)
def _make_context(prec_bits: int, guard_bits: int) -> PrecisionContext:
    return PrecisionContext(prec_bits, guard_bits)


_ELEMENTARY = {
    "ln": lambda ctx, x: ctx.ln(x),
    "sqrt": lambda ctx, x: ctx.sqrt(x),
    "exp": lambda ctx, x: ctx.exp(x),
    "atan": lambda ctx, x: ctx.atan(x),
    "sin": lambda ctx, x: ctx.sin(x),
    "cos": lambda ctx, x: ctx.cos(x),
    "div": lambda ctx, a, b: ctx.div(ctx.mpf(a), b),
    "pow": lambda ctx, x, n: ctx.mpf(x) ** n,
}


def elementary(kind: str, *args, ctx: PrecisionContext | None = None):
    """Dispatch an elementary function by name (``ln``, ``sqrt``, ``exp``, ...)."""
    ctx = ctx or make_context()
    try:
        fn = _ELEMENTARY[kind]
    except KeyError:
        raise ValueError(f"unknown elementary function {kind!r}") from None
    return fn(ctx, *args)


# ---------------------------------------------------------------------------
# pi

def _arctan_inv_fixed(x: int, one: int) -> int:
    """arctan(1/x) * one, truncated termwise (error <= number of terms)."""
    power = one // x
    total = power
    x2 = x * x
    n = 1
    sign = -1
    while power:
        power //= x2
        n += 2
        total += sign * (power // n)
        sign = -sign
    return total


@lru_cache(maxsize=None)
def machin_pi(bits: int):
    """Independent pi oracle: Machin's formula in integer fixed point.

    Returns an mpf within 2**-bits of pi.
    """
    guard = 24
    one = 1 << (bits + guard)
    val = 4 * (4 * _arctan_inv_fixed(5, one) - _arctan_inv_fixed(239, one))
    return _EXACT.make_mpf(libmp.from_man_exp(val >> guard, -bits))


@lru_cache(maxsize=None)
def _pi_for(wp: int, prec_bits: int):
    ctx = make_context(prec_bits, wp - prec_bits)
    value = +ctx.mp.pi
    reference = machin_pi(wp)
    if abs(value - reference) > ctx.mp.ldexp(1, -wp + 4):
        raise RuntimeError("pi failed cross-validation against the Machin oracle")
    return value


def const_pi(ctx: PrecisionContext | None = None):
    """pi at the context's working precision, cross-checked once per precision."""
    ctx = ctx or make_context()
    return _pi_for(ctx.wp, ctx.prec_bits)


# ---------------------------------------------------------------------------
# exact conversions

def to_fraction(x) -> Fraction:
    """Exact rational value of an int, Fraction or finite mpf."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raw = x._mpf_
    if raw == libmp.fzero:
        return Fraction(0)
    sign, man, exp, _ = raw
    if raw in (libmp.finf, libmp.fninf, libmp.fnan):
        raise DomainError("non-finite value")
    man = -int(man) if sign else int(man)
    return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2**-exp)


def _raw(x, prec: int, rnd: str):
    if isinstance(x, int):
        return libmp.from_int(x, prec, rnd)
    if isinstance(x, Fraction):
        return libmp.from_rational(x.numerator, x.denominator, prec, rnd)
    if isinstance(x, float):
        return libmp.from_float(x)
    if hasattr(x, "_mpf_"):
        return x._mpf_
    raise TypeError(f"cannot convert {type(x).__name__} to a bracket endpoint")


def exact_mpf(raw):
    """Wrap a raw mpmath tuple without rounding."""
    return _EXACT.make_mpf(raw)


def fixed_to_mpf(value: int, scale_bits: int):
    """value * 2**-scale_bits, exactly."""
    return exact_mpf(libmp.from_man_exp(int(value), -scale_bits))


def to_decimal(x, digits: int = 85) -> str:
    """Decimal string with ``digits`` significant digits (round-trip safe for
    ``digits >= prec_bits/3``)."""
    if isinstance(x, (int, Fraction)):
        x = _EXACT.mpf(x) if isinstance(x, int) else _EXACT.mpf(x.numerator) / x.denominator
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-4, max_fixed=6)


# ---------------------------------------------------------------------------
# brackets

@dataclass(frozen=True)
class Bracket:
    """Closed interval ``[lo, hi]`` with exact binary endpoints."""

    lo: object
    hi: object
    prec: int = field(default=BRACKET_PREC, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lo", exact_mpf(_raw(self.lo, self.prec, _FLOOR)))
        object.__setattr__(self, "hi", exact_mpf(_raw(self.hi, self.prec, _CEIL)))
        if libmp.mpf_cmp(self.lo._mpf_, self.hi._mpf_) > 0:
            raise ValueError(f"bracket lower end exceeds upper end: [{to_decimal(self.lo, 20)}, {to_decimal(self.hi, 20)}]")

    @classmethod
    def point(cls, x, prec: int = BRACKET_PREC) -> "Bracket":
        return cls(x, x, prec)

    @classmethod
    def around(cls, x, radius, prec: int = BRACKET_PREC) -> "Bracket":
        """[x - radius, x + radius] with outward rounding."""
        xr = _raw(x, prec, _FLOOR)
        xr_hi = _raw(x, prec, _CEIL)
        rr = _raw(radius, prec, _CEIL)
        rr = libmp.mpf_abs(rr)
        return cls(exact_mpf(libmp.mpf_sub(xr, rr, prec, _FLOOR)),
                   exact_mpf(libmp.mpf_add(xr_hi, rr, prec, _CEIL)), prec)

    def _p(self, other: "Bracket | None" = None) -> int:
        return max(self.prec, other.prec) if other is not None else self.prec

    def width(self):
        """hi - lo, rounded up."""
        return exact_mpf(libmp.mpf_sub(self.hi._mpf_, self.lo._mpf_, self.prec, _CEIL))

    def mid(self):
        s = libmp.mpf_add(self.hi._mpf_, self.lo._mpf_, self.prec + 2, libmp.round_nearest)
        return exact_mpf(libmp.mpf_shift(s, -1))

    def contains(self, x) -> bool:
        """Exact membership test for an int, Fraction or mpf."""
        if isinstance(x, Fraction):
            return to_fraction(self.lo) <= x <= to_fraction(self.hi)
        raw = _raw(x, self.prec, _FLOOR)
        return libmp.mpf_cmp(self.lo._mpf_, raw) <= 0 and libmp.mpf_cmp(raw, self.hi._mpf_) <= 0

    def distance(self, x):
        """Distance from x to the bracket (0 when contained), rounded up."""
        if self.contains(x):
            return exact_mpf(libmp.fzero)
        raw = _raw(x, self.prec, _FLOOR)
        if libmp.mpf_cmp(raw, self.lo._mpf_) < 0:
            return exact_mpf(libmp.mpf_sub(self.lo._mpf_, raw, self.prec, _CEIL))
        return exact_mpf(libmp.mpf_sub(raw, self.hi._mpf_, self.prec, _CEIL))

    def overlaps(self, other: "Bracket") -> bool:
        return (libmp.mpf_cmp(self.lo._mpf_, other.hi._mpf_) <= 0
                and libmp.mpf_cmp(other.lo._mpf_, self.hi._mpf_) <= 0)

    def hull(self, other: "Bracket") -> "Bracket":
        lo = self.lo if libmp.mpf_cmp(self.lo._mpf_, other.lo._mpf_) <= 0 else other.lo
        hi = self.hi if libmp.mpf_cmp(self.hi._mpf_, other.hi._mpf_) >= 0 else other.hi
        return Bracket(lo, hi, self._p(other))

    def widen(self, radius) -> "Bracket":
        r = libmp.mpf_abs(_raw(radius, self.prec, _CEIL))
        return Bracket(exact_mpf(libmp.mpf_sub(self.lo._mpf_, r, self.prec, _FLOOR)),
                       exact_mpf(libmp.mpf_add(self.hi._mpf_, r, self.prec, _CEIL)), self.prec)

    def __neg__(self) -> "Bracket":
        return Bracket(-self.hi, -self.lo, self.prec)

    def __add__(self, other) -> "Bracket":
        other = _as_bracket(other, self.prec)
        p = self._p(other)
        return Bracket(exact_mpf(libmp.mpf_add(self.lo._mpf_, other.lo._mpf_, p, _FLOOR)),
                       exact_mpf(libmp.mpf_add(self.hi._mpf_, other.hi._mpf_, p, _CEIL)), p)

    __radd__ = __add__

    def __sub__(self, other) -> "Bracket":
        return self + (-_as_bracket(other, self.prec))

    def __rsub__(self, other) -> "Bracket":
        return _as_bracket(other, self.prec) + (-self)

    def __mul__(self, other) -> "Bracket":
        other = _as_bracket(other, self.prec)
        p = self._p(other)
        ends = [(a, b) for a in (self.lo._mpf_, self.hi._mpf_) for b in (other.lo._mpf_, other.hi._mpf_)]
        lows = [libmp.mpf_mul(a, b, p, _FLOOR) for a, b in ends]
        highs = [libmp.mpf_mul(a, b, p, _CEIL) for a, b in ends]
        lo = min(lows, key=_cmp_key)
        hi = max(highs, key=_cmp_key)
        return Bracket(exact_mpf(lo), exact_mpf(hi), p)

    __rmul__ = __mul__

    def scale(self, c) -> "Bracket":
        """Multiply by an exact scalar (int or Fraction) with outward rounding."""
        c = Fraction(c)
        p = self.prec
        if c == 0:
            return Bracket(0, 0, p)
        lo, hi = (self.lo._mpf_, self.hi._mpf_) if c > 0 else (self.hi._mpf_, self.lo._mpf_)
        num, den = libmp.from_int(c.numerator), libmp.from_int(c.denominator)
        # den > 0, so dividing preserves the rounding direction of the product
        lo = libmp.mpf_div(libmp.mpf_mul(lo, num, p, _FLOOR), den, p, _FLOOR)
        hi = libmp.mpf_div(libmp.mpf_mul(hi, num, p, _CEIL), den, p, _CEIL)
        return Bracket(exact_mpf(lo), exact_mpf(hi), p)

    def __repr__(self) -> str:
        return f"Bracket[{to_decimal(self.lo, 25)}, {to_decimal(self.hi, 25)}]"


_cmp_key = cmp_to_key(libmp.mpf_cmp)


def _as_bracket(x, prec: int) -> Bracket:
    if isinstance(x, Bracket):
        return x
    return Bracket(x, x, prec)


def combine(a: Bracket, b: Bracket, op: str) -> Bracket:
    """Interval ``a op b`` for op in ``+ - *``."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    raise ValueError(f"unsupported bracket operation {op!r}")


def contains(b: Bracket, x) -> bool:
    return b.contains(x)


def width(b: Bracket):
    return b.width()
