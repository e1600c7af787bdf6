"""Closed forms for F(z,p) = sum_k z^(2k) / ((2k-1)(2k)^p(2k+1)) and its relatives.

Covers the parity-split closed form on the open unit disk, the limits at
z = 1 and z = i, the half-argument restatement, and the cosine/sine series
obtained on the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..numeric import DomainError, PrecisionContext, const_pi, make_context
from ..special import (arctanh, bernoulli_poly, clausen_cl, clausen_gl, eta, gl_bernoulli,
                       gl_bernoulli_pi_multiple, polylog, zeta)

# Below this modulus F_closed sums the Maclaurin series instead of the 1/z form.
SMALL_Z = 1e-3


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 0:
        raise DomainError(f"p must be a non-negative integer, got {p!r}")


def _is_complex(z) -> bool:
    return hasattr(z, "_mpc_") or isinstance(z, complex)


def _coerce(z, ctx: PrecisionContext):
    if _is_complex(z):
        z = ctx.mp.mpc(z)
        return ctx.mpf(z.real) if z.imag == 0 else z
    return ctx.mpf(z)


def _atanh(z, ctx):
    return arctanh(z, ctx) if not _is_complex(z) else ctx.mp.atanh(z)


def _log1m(w, ctx):
    """ln(1 - w) for |w| < 1."""
    return ctx.ln(1 - w) if not _is_complex(w) else ctx.mp.log(1 - w)


def f_series_small(z, p: int, ctx: PrecisionContext):
    """Maclaurin sum of F(z,p) for small |z| (geometric tail below 2^-wp)."""
    mp = ctx.mp
    z2 = z * z
    r = abs(z2)
    tol = mp.ldexp(1, -ctx.wp - 4)
    total = 0
    power = z2
    k = 1
    while True:
        total += power / ((2 * k - 1) * mp.mpf(2 * k) ** p * (2 * k + 1))
        if abs(power) * r < tol * (1 - r):
            return total
        k += 1
        power *= z2


def f_closed(z, p: int, ctx: PrecisionContext | None = None):
    """F(z,p) for |z| < 1 (real or complex) via arctanh and polylogs."""
    ctx = ctx or make_context()
    _check_p(p)
    z = _coerce(z, ctx)
    if not abs(z) < 1:
        raise DomainError("f_closed requires |z| < 1; use f_at_1, f_at_i or the trig forms")
    if z == 0:
        return ctx.mpf(0)
    if abs(z) < SMALL_Z:
        return f_series_small(z, p, ctx)
    mp = ctx.mp
    z2 = z * z
    at = _atanh(z, ctx)
    if p % 2 == 0:
        corr = sum((polylog(2 * j, z2, ctx) * mp.ldexp(1, -(2 * j - 1)) for j in range(1, p // 2 + 1)), 0)
        return ((z - 1 / z) * at + 1 - corr) / 2
    corr = sum((polylog(2 * j + 1, z2, ctx) * mp.ldexp(1, -2 * j) for j in range(1, (p - 1) // 2 + 1)), 0)
    return ((z + 1 / z) * at - 1 + _log1m(z2, ctx) - corr) / 2


def f_closed_specialized(z, p: int, ctx: PrecisionContext | None = None):
    """The dedicated p = 1, 2, 3 formulas (independent rearrangements)."""
    ctx = ctx or make_context()
    z = _coerce(z, ctx)
    if not 0 < abs(z) < 1:
        raise DomainError("requires 0 < |z| < 1")
    z2 = z * z
    if p == 1:
        return _log1m(z2, ctx) / 2 + (z + 1 / z) * _atanh(z, ctx) / 2 - ctx.mpf(0.5)
    if p == 2:
        return -polylog(2, z2, ctx) / 4 - (1 - z2) / z2 * z * _atanh(z, ctx) / 2 + ctx.mpf(0.5)
    if p == 3:
        return (-(1 - z) ** 2 / z * _log1m(z, ctx) / 4 + (1 + z) ** 2 / z * _log1m(-z, ctx) / 4
                - polylog(3, z2, ctx) / 8 - ctx.mpf(0.5))
    raise DomainError("specialized forms exist only for p in {1, 2, 3}")


def g_closed(z, p: int, ctx: PrecisionContext | None = None):
    """sum_k z^k / ((2k-1) k^p (2k+1)) for 0 < z < 1 via polylogs of z.

    -Li_p(z) - sum_{j=1}^{ceil(p/2)-1} 4^j Li_{p-2j}(z)
      + 2^(p-2) (1 + (-1)^(p-1)/z) sqrt(z) ln((1+sqrt z)/(1-sqrt z)) + 2^(p-1) (-1)^p
    """
    ctx = ctx or make_context()
    _check_p(p)
    z = ctx.mpf(z)
    if not 0 < z < 1:
        raise DomainError("g_closed requires 0 < z < 1")
    mp = ctx.mp
    sz = ctx.sqrt(z)
    upper = (p + 1) // 2 - 1
    # the -Li_p(z) term comes from -1/k^p in the partial fractions, which is absent at p = 0
    total = -polylog(p, z, ctx) if p > 0 else ctx.mpf(0)
    for j in range(1, upper + 1):
        total -= mp.ldexp(polylog(p - 2 * j, z, ctx), 2 * j)
    sign = 1 if p % 2 == 1 else -1  # (-1)^(p-1)
    total += mp.ldexp((1 + sign / z) * sz * ctx.ln((1 + sz) / (1 - sz)), p - 2)
    total += mp.ldexp(-sign, p - 1)
    return total


def f_at_1(p: int, ctx: PrecisionContext | None = None):
    """F(1,p) in terms of zeta values."""
    ctx = ctx or make_context()
    _check_p(p)
    mp = ctx.mp
    if p % 2 == 0:
        return ctx.mpf(0.5) - sum((mp.ldexp(zeta(2 * j, ctx), -2 * j) for j in range(1, p // 2 + 1)), 0)
    return (ctx.mpf(-0.5) + ctx.ln(2)
            - sum((mp.ldexp(zeta(2 * j + 1, ctx), -(2 * j + 1)) for j in range(1, (p - 1) // 2 + 1)), 0))


def f_at_i_eta(p: int, ctx: PrecisionContext | None = None):
    """F(i,p) in terms of eta values."""
    ctx = ctx or make_context()
    _check_p(p)
    mp = ctx.mp
    if p % 2 == 0:
        return (ctx.mpf(0.5) - const_pi(ctx) / 4
                + sum((mp.ldexp(eta(2 * j, ctx), -2 * j) for j in range(1, p // 2 + 1)), 0))
    return (ctx.mpf(-0.5) + ctx.ln(2) / 2
            + sum((mp.ldexp(eta(2 * j + 1, ctx), -(2 * j + 1)) for j in range(1, (p - 1) // 2 + 1)), 0))


def f_at_i_zeta(p: int, ctx: PrecisionContext | None = None):
    """F(i,p) in terms of zeta values only."""
    ctx = ctx or make_context()
    _check_p(p)
    mp = ctx.mp
    if p % 2 == 0:
        s = sum(((mp.ldexp(1, -2 * j) - mp.ldexp(1, -(4 * j - 1))) * zeta(2 * j, ctx)
                 for j in range(1, p // 2 + 1)), 0)
        return ctx.mpf(0.5) - const_pi(ctx) / 4 + s
    s = sum(((mp.ldexp(1, -(2 * j + 1)) - mp.ldexp(1, -(4 * j + 1))) * zeta(2 * j + 1, ctx)
             for j in range(1, (p - 1) // 2 + 1)), 0)
    return ctx.mpf(-0.5) + ctx.ln(2) / 2 + s


def f_at_i(p: int, ctx: PrecisionContext | None = None):
    """F(i,p) = sum_k (-1)^k / ((2k-1)(2k)^p(2k+1)); the eta and zeta forms
    are computed independently and must agree."""
    ctx = ctx or make_context()
    a = f_at_i_eta(p, ctx)
    b = f_at_i_zeta(p, ctx)
    if abs(a - b) > ctx.mp.ldexp(1, -ctx.prec_bits + 12):
        raise ArithmeticError(f"eta and zeta forms of F(i,{p}) disagree")
    return a


# ---------------------------------------------------------------------------
# unit circle: cosine and sine series

@dataclass(frozen=True)
class PiMultiple:
    """The angle q*pi for rational q."""

    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))

    def radians(self, ctx: PrecisionContext):
        return const_pi(ctx) * ctx.mpf(self.q)

    def __str__(self) -> str:
        q = self.q
        num = "pi" if q.numerator == 1 else f"{q.numerator}*pi"
        return num if q.denominator == 1 else f"{num}/{q.denominator}"


def _angle(x, ctx: PrecisionContext):
    """(radians, q or None) for an angle given in radians or as a PiMultiple."""
    if isinstance(x, PiMultiple):
        if not 0 < x.q < 2:
            raise DomainError("angle must lie in (0, 2 pi)")
        return x.radians(ctx), x.q
    x = ctx.mpf(x)
    if not 0 < x < 2 * const_pi(ctx):
        raise DomainError("angle must lie in (0, 2 pi)")
    return x, None


def _gl(n, x, q, ctx):
    if n >= 2 and q is not None:
        return gl_bernoulli_pi_multiple(n, q, ctx)
    return clausen_gl(n, x, ctx)


def trig_cos_closed(x, p: int, ctx: PrecisionContext | None = None):
    """sum_k cos(kx) / ((2k-1)(2k)^p(2k+1)) for 0 < x < 2 pi."""
    ctx = ctx or make_context()
    _check_p(p)
    x, q = _angle(x, ctx)
    mp = ctx.mp
    pi = const_pi(ctx)
    if p % 2 == 0:
        corr = sum((mp.ldexp(_gl(2 * j, x, q, ctx), -2 * j) for j in range(1, p // 2 + 1)), 0)
        return ctx.mpf(0.5) - pi / 4 * ctx.sin(x / 2) - corr
    corr = sum((mp.ldexp(clausen_cl(2 * j + 1, x, ctx), -(2 * j + 1)) for j in range(1, (p - 1) // 2 + 1)), 0)
    return (ctx.mpf(-0.5) - ctx.cos(x / 2) * ctx.ln(ctx.tan(x / 4)) / 2
            + ctx.ln(2 * ctx.sin(x / 2)) / 2 - corr)


def trig_sin_closed(x, p: int, ctx: PrecisionContext | None = None):
    """sum_k sin(kx) / ((2k-1)(2k)^p(2k+1)) for 0 < x < 2 pi."""
    ctx = ctx or make_context()
    _check_p(p)
    x, q = _angle(x, ctx)
    mp = ctx.mp
    pi = const_pi(ctx)
    if p % 2 == 0:
        corr = sum((mp.ldexp(clausen_cl(2 * j, x, ctx), -2 * j) for j in range(1, p // 2 + 1)), 0)
        return -ctx.sin(x / 2) * ctx.ln(ctx.tan(x / 4)) / 2 - corr
    corr = sum((mp.ldexp(_gl(2 * j + 1, x, q, ctx), -(2 * j + 1)) for j in range(1, (p - 1) // 2 + 1)), 0)
    return pi / 4 * ctx.cos(x / 2) - (pi - x) / 4 - corr


TRIG_FORMS = ("cos-even", "sin-odd")


def trig_bernoulli_closed(x, p: int, kind: str, ctx: PrecisionContext | None = None):
    """Bernoulli-polynomial forms.

    cos-even: sum_k cos(kx) / ((2k-1)(2k)^(2p)(2k+1))
    sin-odd:  sum_k sin(kx) / ((2k-1)(2k)^(2p+1)(2k+1))
    """
    ctx = ctx or make_context()
    _check_p(p)
    if kind not in TRIG_FORMS:
        raise DomainError(f"kind must be one of {TRIG_FORMS}")
    xr, q = _angle(x, ctx)
    pi = const_pi(ctx)

    def bern(n):
        if q is not None:
            return ctx.mpf(bernoulli_poly(n, q / 2))
        return bernoulli_poly(n, xr / (2 * pi), ctx)

    if kind == "cos-even":
        s = sum(((-1) ** (j + 1) * pi ** (2 * j) / factorial(2 * j) * bern(2 * j) for j in range(1, p + 1)), 0)
        return ctx.mpf(0.5) - pi / 4 * ctx.sin(xr / 2) - s / 2
    s = sum(((-1) ** (j + 1) * pi ** (2 * j + 1) / factorial(2 * j + 1) * bern(2 * j + 1) for j in range(1, p + 1)), 0)
    return pi / 4 * ctx.cos(xr / 2) - (pi - xr) / 4 - s / 2


# ---------------------------------------------------------------------------
# residue-class series at x = pi/2 and x = 2 pi/3

def mod4_a(p: int, ctx: PrecisionContext | None = None):
    """sum_k (-1)^(k-1) / ((4k-1)(4k)^(2p+1)(4k+1))."""
    ctx = ctx or make_context()
    _check_p(p)
    s2 = ctx.sqrt(2)
    corr = sum((ctx.mpf(1 - Fraction(1, 4**j)) / 2 ** (4 * j) * zeta(2 * j + 1, ctx) for j in range(1, p + 1)), 0)
    return ctx.mpf(0.5) + s2 / 4 * ctx.ln(s2 - 1) - ctx.ln(2) / 4 - corr / 4


def mod4_b(p: int, ctx: PrecisionContext | None = None):
    """sum_k (-1)^(k-1) / ((4k-3)(4k-2)^(2p+1)(4k-1))."""
    ctx = ctx or make_context()
    _check_p(p)
    pi = const_pi(ctx)
    corr = sum(((-1) ** (j + 1) * pi ** (2 * j + 1) / factorial(2 * j + 1)
                * ctx.mpf(bernoulli_poly(2 * j + 1, Fraction(1, 4))) for j in range(1, p + 1)), 0)
    return pi / 8 * (ctx.sqrt(2) - 1) - corr / 2


def mod6_a(p: int, ctx: PrecisionContext | None = None):
    """S1 - (S2 + S3)/2 with S1 = sum_{k>=1} 1/((6k-1)(6k)^(2p+1)(6k+1)),
    S2 = sum_{k>=1} 1/((6k+1)(6k+2)^(2p+1)(6k+3)), S3 = sum_{k>=1} 1/((6k+3)(6k+4)^(2p+1)(6k+5))."""
    ctx = ctx or make_context()
    _check_p(p)
    const = Fraction(1, 3 * 2 ** (2 * p + 2)) + Fraction(1, 15 * 2 ** (4 * p + 3)) - Fraction(1, 2)
    corr = sum((ctx.mpf(Fraction(1) - Fraction(1, 9**j)) / 4**j * zeta(2 * j + 1, ctx) for j in range(1, p + 1)), 0)
    return ctx.mpf(const) + 3 * ctx.ln(3) / 8 + corr / 4


def mod6_b(p: int, ctx: PrecisionContext | None = None):
    """sum_{k>=0} 1/((6k+1)(6k+2)^(2p+1)(6k+3)) - sum_{k>=0} 1/((6k+3)(6k+4)^(2p+1)(6k+5))."""
    ctx = ctx or make_context()
    _check_p(p)
    pi = const_pi(ctx)
    s3 = ctx.sqrt(3)
    corr = sum(((-1) ** (j + 1) * pi ** (2 * j + 1) / factorial(2 * j + 1)
                * ctx.mpf(bernoulli_poly(2 * j + 1, Fraction(1, 3))) for j in range(1, p + 1)), 0)
    return s3 * pi / 36 - s3 / 3 * corr


def gl_check(n: int, x, ctx: PrecisionContext | None = None):
    """|Gl_n(x) - Bernoulli form| (diagnostic)."""
    ctx = ctx or make_context()
    return abs(clausen_gl(n, x, ctx) - gl_bernoulli(n, x, ctx))


def pafrac_rhs(p: int, ctx: PrecisionContext | None = None):
    """sum_k 1/((2k-1) k^p (2k+1)) = 2^p F(1,p), summed from the partial
    fraction decomposition before any telescoping simplification (p >= 2)."""
    ctx = ctx or make_context()
    if not isinstance(p, int) or p < 2:
        raise DomainError("the decomposed form needs p >= 2 (zeta(1) appears at p = 1)")
    mp = ctx.mp
    total = -mp.ldexp(zeta(p, ctx), -p)
    upper = p - 2 if p % 2 == 0 else p - 3
    for j in range(0, upper + 1):
        c = (-1) ** j - 1
        if c:
            total += c * mp.ldexp(zeta(p - 1 - j, ctx), -(p - j))
    # telescoped remainder: 1/2 for p even, ln2 - 1/2 for p odd
    total += ctx.mpf(0.5) if p % 2 == 0 else ctx.ln(2) - ctx.mpf(0.5)
    return mp.ldexp(total, p)
