"""Polylogarithms, zeta and eta at integers, Clausen functions, Bernoulli numbers.

All real-valued functions return mpf values at the working precision of the
supplied :class:`~ramaseries.numeric.PrecisionContext`.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .numeric import Bracket, DomainError, PrecisionContext, const_pi, make_context


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials

class _BernoulliTable:
    """Lazily grown table of Bernoulli numbers (B_1 = -1/2).

    Entries are filled once under a lock; reads of existing entries are
    lock-free because the list only ever grows.
    """

    def __init__(self, prefill: int = 64):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()
        self.ensure(prefill)

    def ensure(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            vals = self._values
            for m in range(len(vals), n + 1):
                if m > 1 and m % 2 == 1:
                    vals.append(Fraction(0))
                    continue
                acc = sum(comb(m + 1, k) * vals[k] for k in range(m) if vals[k])
                vals.append(-acc / (m + 1))

    def __getitem__(self, n: int) -> Fraction:
        self.ensure(n)
        return self._values[n]


_BERNOULLI = _BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    """B_n as an exact fraction, with B_1 = -1/2."""
    if n < 0:
        raise DomainError("Bernoulli numbers are defined for n >= 0")
    return _BERNOULLI[n]


def bernoulli_poly(n: int, x, ctx: PrecisionContext | None = None):
    """B_n(x) = sum_k C(n,k) B_k x^(n-k).

    Exact for int/Fraction x, otherwise an mpf at the context precision.
    """
    if n < 0:
        raise DomainError("Bernoulli polynomials are defined for n >= 0")
    coeffs = [comb(n, k) * bernoulli_number(k) for k in range(n + 1)]
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        acc = Fraction(0)
        for c in coeffs:
            acc = acc * x + c
        return acc
    ctx = ctx or make_context()
    x = ctx.mpf(x)
    acc = ctx.mpf(0)
    for c in coeffs:
        acc = acc * x + ctx.mpf(c)
    return acc


def zeta_nonpositive(m: int) -> Fraction:
    """zeta(-m) for m >= 0 as an exact rational."""
    if m < 0:
        raise DomainError("expected m >= 0")
    if m == 0:
        return Fraction(-1, 2)
    return -bernoulli_number(m + 1) / (m + 1)


# ---------------------------------------------------------------------------
# golden section

def golden(ctx: PrecisionContext | None = None):
    """(alpha, beta) = ((1+sqrt5)/2, (1-sqrt5)/2)."""
    ctx = ctx or make_context()
    return _golden(ctx)


@lru_cache(maxsize=None)
def _golden(ctx: PrecisionContext):
    s5 = ctx.sqrt(5)
    return (1 + s5) / 2, (1 - s5) / 2


# ---------------------------------------------------------------------------
# inverse tangents

def arctanh(z, ctx: PrecisionContext | None = None):
    """Real inverse hyperbolic tangent, 1/2 ln((1+z)/(1-z)) for |z| < 1."""
    ctx = ctx or make_context()
    z = ctx.mpf(z)
    if not abs(z) < 1:
        raise DomainError("arctanh requires |z| < 1")
    if z == 0:
        return z
    return ctx.ln((1 + z) / (1 - z)) / 2


def arctan(x, ctx: PrecisionContext | None = None):
    ctx = ctx or make_context()
    return ctx.atan(x)


# ---------------------------------------------------------------------------
# zeta and eta

def _cvz_terms(wp: int) -> int:
    # 2/(3+sqrt8)^n < 2^-(wp+8); log2(3+sqrt8) = 2.5431...
    return int((wp + 9) / 2.5431) + 1


@lru_cache(maxsize=None)
def _eta_cvz(n: int, ctx: PrecisionContext):
    """Alternating sum sum_{k>=0} (-1)^k/(k+1)^n by the Cohen-Villegas-Zagier
    acceleration.  Returns (value, error bound)."""
    mp = ctx.mp
    m = _cvz_terms(ctx.wp)
    d = (3 + mp.sqrt(8)) ** m
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    s = mp.mpf(0)
    for k in range(m):
        c = b - c
        s += c / mp.mpf(k + 1) ** n
        b = b * (k + m) * (k - m) / ((k + mp.mpf(1) / 2) * (k + 1))
    value = s / d
    # truncation bound 2/(3+sqrt8)^m plus accumulated rounding
    err = 2 / (3 + mp.sqrt(8)) ** m + mp.ldexp(m * m + 16, -ctx.wp)
    return value, err


def eta(n: int, ctx: PrecisionContext | None = None):
    """Dirichlet eta at a positive integer."""
    ctx = ctx or make_context()
    if n < 1:
        raise DomainError("eta is implemented for integers n >= 1")
    if n == 1:
        return ctx.ln(2)
    return _eta_cvz(n, ctx)[0]


def eta_bracket(n: int, ctx: PrecisionContext | None = None) -> Bracket:
    """Certified enclosure of eta(n), n >= 2."""
    ctx = ctx or make_context()
    if n < 2:
        raise DomainError("eta_bracket requires n >= 2")
    value, err = _eta_cvz(n, ctx)
    return Bracket.around(value, err)


def zeta(n: int, ctx: PrecisionContext | None = None):
    """Riemann zeta at an integer n >= 2.

    Even n uses the Bernoulli formula; odd n goes through eta.
    """
    ctx = ctx or make_context()
    if n < 2:
        raise DomainError("zeta is implemented for integers n >= 2")
    return _zeta(n, ctx)


@lru_cache(maxsize=None)
def _zeta(n: int, ctx: PrecisionContext):
    if n % 2 == 0:
        m = n // 2
        sign = 1 if m % 2 == 1 else -1
        b = bernoulli_number(n)
        two_pi = 2 * const_pi(ctx)
        return sign * ctx.mpf(b) * two_pi ** n / (2 * factorial(n))
    return eta(n, ctx) / (1 - ctx.mp.ldexp(1, 1 - n))


def zeta_bracket(n: int, ctx: PrecisionContext | None = None) -> Bracket:
    """Certified enclosure of zeta(n), n >= 2 (odd n via eta)."""
    ctx = ctx or make_context()
    if n < 2:
        raise DomainError("zeta_bracket requires n >= 2")
    if n % 2 == 0:
        v = zeta(n, ctx)
        return Bracket.around(v, abs(v) * ctx.mp.ldexp(1, -ctx.wp + 8))
    e = eta_bracket(n, ctx)
    factor = Fraction(2 ** (n - 1), 2 ** (n - 1) - 1)
    return e.scale(factor)


def _zeta_any(m: int, ctx: PrecisionContext):
    """zeta at any integer except 1 (mpf)."""
    if m >= 2:
        return zeta(m, ctx)
    if m == 1:
        raise DomainError("zeta has a pole at 1")
    return ctx.mpf(zeta_nonpositive(-m))


# ---------------------------------------------------------------------------
# polylogarithm

_DIRECT_RADIUS = 0.75


def _is_real(z) -> bool:
    return not hasattr(z, "_mpc_")


def _coerce(z, ctx: PrecisionContext):
    if isinstance(z, complex) or hasattr(z, "_mpc_"):
        z = ctx.mp.mpc(z)
        return ctx.mpf(z.real) if z.imag == 0 else z
    return ctx.mpf(z)


def _polylog_direct(n: int, z, ctx: PrecisionContext):
    """Defining series with a geometric tail, for |z| <= 0.75."""
    mp = ctx.mp
    r = abs(z)
    tol = mp.ldexp(1, -ctx.wp - 4)
    total = 0
    power = z
    k = 1
    while True:
        term = power / mp.mpf(k) ** n
        total += term
        # remaining tail <= |z|^(k+1) / (1 - |z|)
        if abs(power) * r < tol * (1 - r):
            break
        k += 1
        power *= z
    return total


def _polylog_logseries(n: int, mu, ctx: PrecisionContext):
    """Li_n(e^mu) for 0 < |mu| < 2pi via the expansion in powers of mu.

    Li_n(e^mu) = mu^(n-1)/(n-1)! (H_(n-1) - ln(-mu)) + sum_{k != n-1} zeta(n-k) mu^k/k!
    """
    mp = ctx.mp
    two_pi = 2 * const_pi(ctx)
    r = abs(mu) / two_pi
    if not r < 1:
        raise DomainError("logarithmic expansion requires |ln z| < 2 pi")
    harmonic = sum((Fraction(1, j) for j in range(1, n)), Fraction(0))
    total = mu ** (n - 1) / factorial(n - 1) * (ctx.mpf(harmonic) - mp.log(-mu))
    tol = mp.ldexp(1, -ctx.wp - 8)
    scale = max(abs(mu) ** n, mp.mpf(1))
    power = mp.mpf(1)
    k = 0
    while True:
        if k != n - 1:
            m = n - k
            if m <= 0 and m % 2 == 0 and m != 0:
                pass  # zeta at negative even integers vanishes
            else:
                total += _zeta_any(m, ctx) * power / factorial(k)
        if k > n + 2:
            # |zeta(n-k) mu^k / k!| <= 2 |mu|^n r^(k-n), geometric beyond this point
            if 4 * scale * r ** (k - n) < tol * (1 - r):
                break
        k += 1
        power *= mu
    return total


def polylog(n: int, z, ctx: PrecisionContext | None = None):
    """Li_n(z) for integer n >= 0 and |z| <= 1 (real or complex).

    |z| <= 0.75 sums the defining series; closer to the unit circle the
    expansion in powers of ln z is used.  Li_1(z) = -ln(1-z).
    """
    ctx = ctx or make_context()
    if n < 0:
        raise DomainError("polylog order must be >= 0")
    z = _coerce(z, ctx)
    mp = ctx.mp
    if abs(z) > 1:
        raise DomainError("polylog is only implemented on the closed unit disk")
    if z == 0:
        return z
    if n == 0:
        return z / (1 - z)
    if z == 1:
        if n == 1:
            raise DomainError("Li_1 diverges at z = 1")
        return zeta(n, ctx)
    if z == -1:
        return -eta(n, ctx)
    if n == 1:
        w = 1 - z
        return -ctx.ln(w) if _is_real(w) else -mp.log(w)
    if abs(z) <= _DIRECT_RADIUS:
        return _polylog_direct(n, z, ctx)
    if _is_real(z):
        if z > 0:
            return _polylog_logseries(n, ctx.ln(z), ctx)
        # duplication: Li_n(-x) = 2^(1-n) Li_n(x^2) - Li_n(x)
        x = -z
        return mp.ldexp(polylog(n, x * x, ctx), 1 - n) - polylog(n, x, ctx)
    return _polylog_logseries(n, mp.log(z), ctx)


def polylog_unit(n: int, x, ctx: PrecisionContext | None = None):
    """Li_n(e^{ix}) for 0 < x < 2 pi, as an mpc."""
    ctx = ctx or make_context()
    mp = ctx.mp
    pi = const_pi(ctx)
    x = ctx.mpf(x)
    if not 0 < x < 2 * pi:
        raise DomainError("x must lie in (0, 2 pi)")
    if x > pi:
        return mp.conj(polylog_unit(n, 2 * pi - x, ctx))
    if x == pi:
        if n == 0:
            return mp.mpc(-0.5, 0)
        return mp.mpc(-eta(n, ctx), 0)
    if n == 1:
        return mp.mpc(-ctx.ln(2 * ctx.sin(x / 2)), (pi - x) / 2)
    if n == 0:
        w = mp.expj(x)
        return w / (1 - w)
    return _polylog_logseries(n, mp.mpc(0, x), ctx)


# ---------------------------------------------------------------------------
# Clausen and Glaisher functions
#
# n even: Cl_n = sum sin(kx)/k^n, Gl_n = sum cos(kx)/k^n
# n odd:  Cl_n = sum cos(kx)/k^n, Gl_n = sum sin(kx)/k^n


def _check_angle(x, ctx: PrecisionContext):
    x = ctx.mpf(x)
    if not 0 < x < 2 * const_pi(ctx):
        raise DomainError("Clausen functions require 0 < x < 2 pi")
    return x


def clausen_cl(n: int, x, ctx: PrecisionContext | None = None):
    ctx = ctx or make_context()
    if n < 1:
        raise DomainError("Clausen order must be >= 1")
    x = _check_angle(x, ctx)
    li = polylog_unit(n, x, ctx)
    return li.imag if n % 2 == 0 else li.real


def clausen_gl(n: int, x, ctx: PrecisionContext | None = None):
    ctx = ctx or make_context()
    if n < 1:
        raise DomainError("Glaisher order must be >= 1")
    x = _check_angle(x, ctx)
    if n == 1:
        return (const_pi(ctx) - x) / 2
    li = polylog_unit(n, x, ctx)
    return li.real if n % 2 == 0 else li.imag


def gl_bernoulli(n: int, x, ctx: PrecisionContext | None = None):
    """Gl_n(x) = (-1)^(1 + n//2) 2^(n-1) pi^n B_n(x/2pi) / n!."""
    ctx = ctx or make_context()
    if n < 1:
        raise DomainError("Glaisher order must be >= 1")
    x = _check_angle(x, ctx)
    pi = const_pi(ctx)
    sign = -1 if (n // 2) % 2 == 0 else 1
    u = x / (2 * pi)
    return sign * ctx.mp.ldexp(pi ** n, n - 1) * bernoulli_poly(n, u, ctx) / factorial(n)


def gl_bernoulli_pi_multiple(n: int, q: Fraction, ctx: PrecisionContext | None = None):
    """gl_bernoulli at x = q*pi with the Bernoulli polynomial evaluated exactly."""
    ctx = ctx or make_context()
    q = Fraction(q)
    if not 0 < q < 2:
        raise DomainError("x must lie in (0, 2 pi)")
    sign = -1 if (n // 2) % 2 == 0 else 1
    b = bernoulli_poly(n, q / 2)
    return sign * ctx.mp.ldexp(const_pi(ctx) ** n, n - 1) * ctx.mpf(b) / factorial(n)


# ---------------------------------------------------------------------------
# special polylog values

class SpecialValueId(Enum):
    LI2_MINUS1 = "LI2_MINUS1"
    LI2_MINUS_ALPHA = "LI2_MINUS_ALPHA"
    LI2_MINUS_BETA = "LI2_MINUS_BETA"
    LI2_BETA_SQ = "LI2_BETA_SQ"
    LI2_HALF = "LI2_HALF"
    LI3_HALF = "LI3_HALF"
    LI3_INV_ALPHA_SQ = "LI3_INV_ALPHA_SQ"
    CAMPBELL_ALPHA3 = "CAMPBELL_ALPHA3"


def special_value(vid: SpecialValueId | str, ctx: PrecisionContext | None = None):
    """Closed-form value of one of the tabulated polylog constants."""
    ctx = ctx or make_context()
    try:
        vid = SpecialValueId(vid) if isinstance(vid, str) else vid
    except ValueError:
        raise KeyError(f"unknown special value {vid!r}") from None
    pi = const_pi(ctx)
    alpha, _ = golden(ctx)
    la = ctx.ln(alpha)
    l2 = ctx.ln(2)
    if vid is SpecialValueId.LI2_MINUS1:
        return -pi ** 2 / 12
    if vid is SpecialValueId.LI2_MINUS_ALPHA:
        return -pi ** 2 / 10 - la ** 2
    if vid is SpecialValueId.LI2_MINUS_BETA:
        return pi ** 2 / 10 - la ** 2
    if vid is SpecialValueId.LI2_BETA_SQ:
        return pi ** 2 / 15 - la ** 2
    if vid is SpecialValueId.LI2_HALF:
        return (zeta(2, ctx) - l2 ** 2) / 2
    if vid is SpecialValueId.LI3_HALF:
        return Fraction(7, 8) * zeta(3, ctx) - l2 * zeta(2, ctx) / 2 + l2 ** 3 / 6
    if vid is SpecialValueId.LI3_INV_ALPHA_SQ:
        return Fraction(4, 5) * zeta(3, ctx) + Fraction(2, 3) * la ** 3 - Fraction(2, 15) * pi ** 2 * la
    if vid is SpecialValueId.CAMPBELL_ALPHA3:
        return pi ** 2 / 12 - Fraction(3, 2) * la ** 2
    raise KeyError(vid)  # pragma: no cover


def special_value_polylog(vid: SpecialValueId | str, ctx: PrecisionContext | None = None):
    """The same constants computed from polylog evaluations, for cross-checks."""
    ctx = ctx or make_context()
    vid = SpecialValueId(vid) if isinstance(vid, str) else vid
    alpha, beta = golden(ctx)
    if vid is SpecialValueId.LI2_MINUS1:
        return polylog(2, -1, ctx)
    if vid is SpecialValueId.LI2_MINUS_ALPHA:
        # inversion: Li2(-x) + Li2(-1/x) = -pi^2/6 - ln^2(x)/2, with -1/alpha = beta
        return -zeta(2, ctx) - ctx.ln(alpha) ** 2 / 2 - polylog(2, beta, ctx)
    if vid is SpecialValueId.LI2_MINUS_BETA:
        return polylog(2, -beta, ctx)
    if vid is SpecialValueId.LI2_BETA_SQ:
        return polylog(2, beta ** 2, ctx)
    if vid is SpecialValueId.LI2_HALF:
        return polylog(2, ctx.mpf(0.5), ctx)
    if vid is SpecialValueId.LI3_HALF:
        return polylog(3, ctx.mpf(0.5), ctx)
    if vid is SpecialValueId.LI3_INV_ALPHA_SQ:
        return polylog(3, 1 / alpha ** 2, ctx)
    if vid is SpecialValueId.CAMPBELL_ALPHA3:
        return polylog(2, 1 / alpha ** 3, ctx) - polylog(2, beta ** 3, ctx)
    raise KeyError(vid)  # pragma: no cover
