"""Brute-force certified summation of infinite series.

Partial sums are accumulated in fixed point (integers scaled by 2**W) with a
lower and an upper accumulator.  Exact rational terms are floored into the
lower accumulator and ceiled into the upper one, so every partial sum is
enclosed exactly.  Real (mpf) terms are widened by a relative allowance that
covers their evaluation error.  A tail strategy then bounds the omitted
remainder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from mpmath import libmp

from .numeric import Bracket, PrecisionContext, fixed_to_mpf, make_context, to_fraction

# Relative evaluation error assumed for real terms: 2^-(wp - REAL_TERM_SLACK_BITS).
REAL_TERM_SLACK_BITS = 24
SPOT_CHECKS = 64
SPOT_HEAD = 16
SPOT_HORIZON = 20000

Number = Union[int, Fraction]


class StrategyMismatch(RuntimeError):
    """A tail strategy's hypothesis failed a spot check."""


# ---------------------------------------------------------------------------
# term generators

@dataclass(frozen=True)
class TermGenerator:
    """A summand k -> t_k.

    ``kind='exact'``: ``fn(k)`` returns a Fraction/int or a ``(num, den)``
    pair of ints.  ``kind='real'``: ``fn(k, ctx)`` returns an mpf; an optional
    ``magnitude(k, ctx)`` gives an upper bound for |t_k| used to size the
    rounding allowance (needed when t_k may suffer cancellation).
    """

    fn: Callable
    description: str = ""
    kind: str = "exact"
    start: int = 1
    magnitude: Optional[Callable] = None

    def __post_init__(self):
        if self.kind not in ("exact", "real"):
            raise ValueError("kind must be 'exact' or 'real'")

    def exact(self, k: int) -> Fraction:
        v = self.fn(k)
        if isinstance(v, tuple):
            return Fraction(v[0], v[1])
        return Fraction(v)

    def value(self, k: int, ctx: PrecisionContext):
        """Term as an mpf (rounded for exact kinds)."""
        if self.kind == "exact":
            q = self.exact(k)
            return ctx.mpf(q)
        return self.fn(k, ctx)


def exact_terms(fn: Callable, description: str = "", start: int = 1) -> TermGenerator:
    return TermGenerator(fn, description, "exact", start)


def real_terms(fn: Callable, description: str = "", start: int = 1,
               magnitude: Optional[Callable] = None) -> TermGenerator:
    return TermGenerator(fn, description, "real", start, magnitude)


# ---------------------------------------------------------------------------
# tail strategies

@dataclass(frozen=True)
class Geometric:
    """|t_{k+1}| <= ratio |t_k| for all k >= n0."""

    ratio: Fraction
    n0: int = 1
    kind: str = field(default="GEOMETRIC", init=False)

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if not 0 <= self.ratio < 1:
            raise ValueError("geometric ratio must lie in [0, 1)")


@dataclass(frozen=True)
class AlternatingLeibniz:
    """Terms alternate in sign with |t_k| non-increasing for k >= n0."""

    n0: int = 1
    kind: str = field(default="ALTERNATING_LEIBNIZ", init=False)


@dataclass(frozen=True)
class IntegralMonotone:
    """|t_k| <= c / k^s for k >= n0, s > 1.  With ``nonnegative`` the
    remainder is one-sided."""

    exponent: Fraction
    constant: Fraction = Fraction(1)
    n0: int = 1
    nonnegative: bool = False
    kind: str = field(default="INTEGRAL_MONOTONE", init=False)

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        object.__setattr__(self, "constant", Fraction(self.constant))
        if self.exponent <= 1:
            raise ValueError("integral tail bound needs exponent > 1")
        if self.constant <= 0:
            raise ValueError("integral tail constant must be positive")

    def tail(self, n: int) -> Fraction:
        """Upper bound on sum_{k>n} c/k^s (an integral from n)."""
        s = self.exponent
        if s.denominator != 1:
            raise ValueError("integral tail bound needs an integer exponent")
        return self.constant / ((s - 1) * Fraction(n) ** int(s - 1))

    def terms_for(self, width: Fraction) -> int:
        """Smallest N >= n0 with tail(N) <= width."""
        if self.tail(self.n0) <= width:
            return self.n0
        s = int(self.exponent)
        est = float(self.constant / ((s - 1) * width)) ** (1.0 / (s - 1))
        # bisect around the float estimate; tail(n) is decreasing in n
        lo, hi = self.n0, max(self.n0 + 1, int(est * (1 + 1e-9)) + 2)
        while self.tail(hi) > width:
            lo, hi = hi, 2 * hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.tail(mid) <= width:
                hi = mid
            else:
                lo = mid
        return hi


TailStrategy = Union[Geometric, AlternatingLeibniz, IntegralMonotone]


def ratio_bound(x) -> Fraction:
    """A rational number slightly above |x| (for declaring geometric ratios)."""
    f = Fraction(abs(float(x)))
    return f * (1 + Fraction(1, 2**40))


# ---------------------------------------------------------------------------
# spot checks

def spot_indices(n0: int, horizon: int) -> list[int]:
    """The first SPOT_HEAD indices past n0 plus geometrically spaced ones."""
    horizon = max(horizon, n0 + SPOT_HEAD + 1)
    idx = list(range(n0, n0 + SPOT_HEAD))
    extra = SPOT_CHECKS - SPOT_HEAD
    lo, hi = math.log(n0 + SPOT_HEAD), math.log(horizon)
    for i in range(extra):
        idx.append(int(round(math.exp(lo + (hi - lo) * (i + 1) / extra))))
    return sorted(set(idx))


def _abs_value(gen: TermGenerator, k: int, ctx: PrecisionContext):
    if gen.kind == "exact":
        return abs(gen.exact(k))
    return abs(to_fraction(gen.fn(k, ctx)))


def _signed(gen: TermGenerator, k: int, ctx: PrecisionContext):
    if gen.kind == "exact":
        return gen.exact(k)
    return to_fraction(gen.fn(k, ctx))


def spot_check(gen: TermGenerator, tail: TailStrategy, ctx: PrecisionContext,
               horizon: int = SPOT_HORIZON) -> None:
    """Check the tail hypothesis at 64 sampled indices; raise StrategyMismatch."""
    slack = Fraction(0) if gen.kind == "exact" else Fraction(1, 2 ** (ctx.wp - REAL_TERM_SLACK_BITS - 8))
    n0 = max(tail.n0, gen.start)
    for k in spot_indices(n0, horizon):
        if isinstance(tail, Geometric):
            a, b = _abs_value(gen, k, ctx), _abs_value(gen, k + 1, ctx)
            if b > tail.ratio * a * (1 + slack) + slack * a:
                raise StrategyMismatch(f"{gen.description}: ratio |t({k+1})/t({k})| exceeds {float(tail.ratio)}")
        elif isinstance(tail, AlternatingLeibniz):
            a, b = _signed(gen, k, ctx), _signed(gen, k + 1, ctx)
            if a == 0 or b == 0 or (a > 0) == (b > 0):
                raise StrategyMismatch(f"{gen.description}: signs do not alternate at k={k}")
            if abs(b) > abs(a) * (1 + slack):
                raise StrategyMismatch(f"{gen.description}: |t_k| increases at k={k}")
        elif isinstance(tail, IntegralMonotone):
            t = _signed(gen, k, ctx)
            if tail.nonnegative and t < 0:
                raise StrategyMismatch(f"{gen.description}: negative term at k={k}")
            bound = tail.constant / Fraction(k) ** int(tail.exponent)
            if abs(t) > bound * (1 + slack):
                raise StrategyMismatch(f"{gen.description}: |t_{k}| exceeds c/k^s")
        else:  # pragma: no cover
            raise TypeError(f"unknown tail strategy {tail!r}")


# ---------------------------------------------------------------------------
# fixed-point accumulation

def _floor_ceil_fixed(raw, scale: int) -> tuple[int, int]:
    """floor and ceil of value * 2**scale for a raw mpf tuple."""
    sign, man, exp, _ = raw
    man = int(man)
    if man == 0:
        return 0, 0
    if sign:
        man = -man
    e = exp + scale
    if e >= 0:
        v = man << e
        return v, v
    q = man >> -e  # floor for negatives too
    exact = (q << -e) == man
    return q, q if exact else q + 1


class _Accumulator:
    """Lower/upper fixed-point partial sums at scale 2**W."""

    __slots__ = ("gen", "ctx", "W", "lo", "hi", "allow_shift", "k")

    def __init__(self, gen: TermGenerator, ctx: PrecisionContext):
        self.gen = gen
        self.ctx = ctx
        self.W = ctx.wp + 16
        self.lo = 0
        self.hi = 0
        self.allow_shift = ctx.wp - REAL_TERM_SLACK_BITS
        self.k = gen.start - 1

    def term_fixed(self, k: int) -> tuple[int, int]:
        """Enclosure [a, b] of t_k * 2**W in integers."""
        gen = self.gen
        if gen.kind == "exact":
            v = gen.fn(k)
            if isinstance(v, tuple):
                num, den = v
            elif isinstance(v, Fraction):
                num, den = v.numerator, v.denominator
            else:
                return v << self.W, v << self.W
            if den < 0:
                num, den = -num, -den
            q, r = divmod(num << self.W, den)
            return q, q + (1 if r else 0)
        t = gen.fn(k, self.ctx)
        a, b = _floor_ceil_fixed(t._mpf_, self.W)
        if gen.magnitude is not None:
            _, mag = _floor_ceil_fixed(gen.magnitude(k, self.ctx)._mpf_, self.W)
            mag = abs(mag)
        else:
            mag = max(abs(a), abs(b))
        allow = (mag >> self.allow_shift) + 1
        return a - allow, b + allow

    def add(self, k: int) -> tuple[int, int]:
        a, b = self.term_fixed(k)
        self.lo += a
        self.hi += b
        self.k = k
        return a, b

    def run_to(self, n: int) -> None:
        lo, hi = self.lo, self.hi
        tf = self.term_fixed
        for k in range(self.k + 1, n + 1):
            a, b = tf(k)
            lo += a
            hi += b
        self.lo, self.hi = lo, hi
        self.k = max(self.k, n)


def _ceil_fixed(q: Fraction, W: int) -> int:
    return -((-q.numerator << W) // q.denominator)


def _to_bracket(lo: int, hi: int, W: int) -> Bracket:
    return Bracket(fixed_to_mpf(lo, W), fixed_to_mpf(hi, W))


# ---------------------------------------------------------------------------
# summation

@dataclass(frozen=True)
class SeriesBracket:
    bracket: Bracket
    terms_used: int
    strategy: TailStrategy
    converged: bool
    target_width: Fraction

    @property
    def width(self):
        return self.bracket.width()


def sum_bracket(gen: TermGenerator, tail: TailStrategy, target_width=Fraction(1, 10**40),
                max_terms: int = 2_000_000, ctx: PrecisionContext | None = None,
                check: bool = True) -> SeriesBracket:
    """Certified bracket for sum_{k >= gen.start} t_k.

    The bracket width is at most ``target_width`` unless ``max_terms`` runs
    out first, in which case ``converged`` is False.
    """
    ctx = ctx or make_context()
    target = Fraction(target_width) if not isinstance(target_width, float) else Fraction(target_width)
    if target <= 0:
        raise ValueError("target width must be positive")
    if check:
        spot_check(gen, tail, ctx, min(max_terms, SPOT_HORIZON))
    acc = _Accumulator(gen, ctx)
    W = acc.W
    n0 = max(tail.n0, gen.start)
    last = gen.start + max_terms - 1

    if isinstance(tail, IntegralMonotone):
        half = target if tail.nonnegative else target / 2
        # rounding slack of the accumulators is tiny compared to the target
        n = tail.terms_for(half * Fraction(15, 16))
        n = max(n, n0)
        converged = n <= last
        n = min(n, last)
        acc.run_to(n)
        t = _ceil_fixed(tail.tail(n), W)
        lo = acc.lo if tail.nonnegative else acc.lo - t
        br = _to_bracket(lo, acc.hi + t, W)
        return SeriesBracket(br, n - gen.start + 1, tail, converged and br.width() <= _fr_mpf(target), target)

    if isinstance(tail, Geometric):
        r = tail.ratio
        factor = r / (1 - r)
        acc.run_to(n0 - 1)
        threshold = target / 2 * Fraction(15, 16)
        k = n0 - 1
        converged = False
        while k < last:
            k += 1
            a, b = acc.add(k)
            mag = max(abs(a), abs(b)) + 1
            if k >= n0 and factor * mag <= threshold * (1 << W):
                converged = True
                break
        t = _ceil_fixed(factor * (max(abs(a), abs(b)) + 1), 0)
        br = _to_bracket(acc.lo - t, acc.hi + t, W)
        return SeriesBracket(br, k - gen.start + 1, tail, converged and br.width() <= _fr_mpf(target), target)

    if isinstance(tail, AlternatingLeibniz):
        acc.run_to(n0 - 1)
        limit = target * Fraction(15, 16) * (1 << W)
        k = n0 - 1
        converged = False
        a, b = acc.term_fixed(n0)
        while k < last:
            k += 1
            acc.lo += a
            acc.hi += b
            acc.k = k
            a, b = acc.term_fixed(k + 1)  # next term bounds the remainder
            if max(abs(a), abs(b)) + 2 <= limit:
                converged = True
                break
        lo = acc.lo + min(0, a)
        hi = acc.hi + max(0, b)
        br = _to_bracket(lo, hi, W)
        return SeriesBracket(br, k - gen.start + 1, tail, converged and br.width() <= _fr_mpf(target), target)

    raise TypeError(f"unknown tail strategy {tail!r}")


def _fr_mpf(q: Fraction):
    # upper approximation of q as an exact binary number
    W = max(64, q.denominator.bit_length() + 64)
    return fixed_to_mpf(_ceil_fixed(q, W), W)


# ---------------------------------------------------------------------------
# linear combinations of series

@dataclass(frozen=True)
class SeriesPart:
    coefficient: Fraction
    generator: TermGenerator
    tail: TailStrategy


@dataclass(frozen=True)
class CombinedBracket:
    bracket: Bracket
    parts: tuple
    terms_used: int
    converged: bool

    @property
    def strategy(self):
        return tuple(p.strategy for p in self.parts)

    def width(self):
        return self.bracket.width()


def sum_combination(parts: Sequence[SeriesPart], target_width=Fraction(1, 10**40),
                    max_terms: int = 2_000_000, ctx: PrecisionContext | None = None,
                    constant: Number = 0) -> CombinedBracket:
    """Bracket for constant + sum_i c_i * S_i; the width budget is split evenly."""
    ctx = ctx or make_context()
    target = Fraction(target_width)
    total = Bracket.point(Fraction(constant)) if constant else Bracket.point(0)
    results = []
    share = target / max(1, len(parts))
    for part in parts:
        c = Fraction(part.coefficient)
        if c == 0:
            continue
        sb = sum_bracket(part.generator, part.tail, share / abs(c), max_terms, ctx)
        results.append(sb)
        total = total + sb.bracket.scale(c)
    used = sum(r.terms_used for r in results)
    ok = all(r.converged for r in results) and total.width() <= _fr_mpf(target * Fraction(17, 16))
    return CombinedBracket(total, tuple(results), used, ok)


# ---------------------------------------------------------------------------
# partial fractions

@dataclass(frozen=True)
class PartialFraction:
    """1/((2k-1) k^p (2k+1)) = sum_j power[j]/k^j + minus/(2k-1) + plus/(2k+1)."""

    p: int
    power: tuple  # ((j, coefficient), ...) with j descending
    minus: Fraction
    plus: Fraction

    def evaluate(self, k: int) -> Fraction:
        k = Fraction(k)
        total = sum((c / k ** j for j, c in self.power), Fraction(0))
        return total + self.minus / (2 * k - 1) + self.plus / (2 * k + 1)

    def direct(self, k: int) -> Fraction:
        return Fraction(1, (2 * k - 1) * k ** self.p * (2 * k + 1))


def partial_fraction(p: int) -> PartialFraction:
    """Decomposition of 1/((2k-1) k^p (2k+1)) for p >= 1."""
    if p < 1:
        raise ValueError("partial fraction decomposition needs p >= 1")
    coeffs: dict[int, Fraction] = {p: Fraction(-1)}
    for j in range(0, p - 1):
        c = Fraction(2**j * ((-1) ** j - 1))
        if c:
            coeffs[p - 1 - j] = coeffs.get(p - 1 - j, Fraction(0)) + c
    power = tuple(sorted(((j, c) for j, c in coeffs.items() if c), reverse=True))
    half = Fraction(2 ** (p - 1))
    return PartialFraction(p, power, half, half * (-1) ** (p - 1))


# ---------------------------------------------------------------------------
# telescoping constants

@dataclass(frozen=True)
class TelescopingConstant:
    name: str
    generator: TermGenerator
    tail: TailStrategy
    value: Callable  # ctx -> mpf
    target_width: Fraction


def telescoping_constants() -> list[TelescopingConstant]:
    """Elementary series used when summing the decomposed form at z = 1."""
    return [
        TelescopingConstant(
            "alternating_odd_product",
            exact_terms(lambda k: ((-1) ** k, 4 * k * k - 1), "(-1)^k/((2k-1)(2k+1))"),
            AlternatingLeibniz(),
            lambda ctx: (2 - ctx.pi) / 4,
            Fraction(1, 10**12),
        ),
        TelescopingConstant(
            "alternating_weighted_odd_product",
            exact_terms(lambda k: ((-1) ** k * k, 4 * k * k - 1), "(-1)^k k/((2k-1)(2k+1))"),
            AlternatingLeibniz(),
            lambda ctx: ctx.mpf(-0.25),
            Fraction(1, 10**6),
        ),
        TelescopingConstant(
            "harmonic_odd_product",
            exact_terms(lambda k: (1, k * (2 * k + 1)), "1/(k(2k+1))"),
            IntegralMonotone(2, Fraction(1, 2), nonnegative=True),
            lambda ctx: 2 - 2 * ctx.ln(2),
            Fraction(1, 10**6),
        ),
        TelescopingConstant(
            "odd_product",
            exact_terms(lambda k: (1, 4 * k * k - 1), "1/((2k-1)(2k+1))"),
            IntegralMonotone(2, Fraction(1, 3), nonnegative=True),
            lambda ctx: ctx.mpf(0.5),
            Fraction(1, 10**6),
        ),
    ]
