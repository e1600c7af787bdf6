"""Right-hand sides of the binomial-weighted series

    sum_k C(2k, m) z^(2k) / ((2k-1)(2k)(2k+1))   and   sum_k C(2k, m) z^(2k) / ((2k-1) k^2 (2k+1))

together with their golden-section specializations, transcribed as printed.
"""

from __future__ import annotations

from fractions import Fraction

from ..fiblucas import fib, lucas
from ..numeric import DomainError, make_context
from ..special import golden


def _check_m(m: int, low: int = 2) -> None:
    if not isinstance(m, int) or m < low:
        raise DomainError(f"m must be an integer >= {low}, got {m!r}")


def _check_z(z) -> None:
    if not 0 < abs(z) < 1:
        raise DomainError("requires 0 < |z| < 1")


def binom_lemma(m: int, z, ctx=None):
    """sum C(2k,m) z^(2k) / ((2k-1)(2k)(2k+1)) for m >= 2 and 0 < |z| < 1."""
    ctx = ctx or make_context()
    _check_m(m)
    z = ctx.mpf(z)
    _check_z(z)
    sgn = -1 if m % 2 else 1  # (-1)^m
    u, v = z / (1 + z), z / (1 - z)
    s1 = sum((Fraction(1, m - j) * (-sgn * u ** (m - j) + (-1) ** j * v ** (m - j)) for j in range(m)), 0) / (4 * z)
    s2 = (-sgn * (1 + z / 2) * u ** m - (1 - z / 2) * v ** m) / (2 * m)
    s3 = (sgn * (1 + z) * u ** m + (1 - z) * v ** m) / (4 * (m - 1))
    return s1 + s2 + s3 + sgn / (4 * z) * ctx.ln((1 + z) / (1 - z))


def binom_k2(m: int, z, ctx=None):
    """sum C(2k,m) z^(2k) / ((2k-1) k^2 (2k+1)) for m >= 2 and 0 < |z| < 1."""
    ctx = ctx or make_context()
    _check_m(m)
    z = ctx.mpf(z)
    _check_z(z)
    sgn = -1 if m % 2 else 1
    u, v = z / (1 + z), z / (1 - z)
    t = -2 * sgn * ctx.ln(1 - z * z) / m + sgn / z * ctx.ln((1 - z) / (1 + z))
    t += (sgn * (1 + z) * u ** m + (1 - z) * v ** m) / (m - 1)
    t -= (sgn * z * u ** m - z * v ** m) / m
    t += Fraction(2, m) * sum((Fraction(1, m - j) * (sgn * u ** (m - j) + (-1) ** j * v ** (m - j)) for j in range(1, m)), 0)
    t += sum((Fraction(1, m - j) * (sgn / z * u ** (m - j) - (-1) ** j / z * v ** (m - j)) for j in range(m)), 0)
    return t


def _half_ranges(m: int):
    return (m - 1) // 2, m // 2  # floor((m-1)/2), ceil((m-1)/2)


def binom_s5a(m: int, ctx=None):
    """sum C(2k,m) / (5^k (2k-1)(2k)(2k+1))."""
    ctx = ctx or make_context()
    _check_m(m)
    fl, ce = _half_ranges(m)
    alpha, _ = golden(ctx)
    r = Fraction(5, 4) * sum((Fraction(fib(m - 2 * j), (m - 2 * j) * 2 ** (m - 2 * j)) for j in range(fl + 1)), Fraction(0))
    r -= Fraction(5, 4) * sum((Fraction(fib(m - 2 * j + 1), (m - 2 * j + 1) * 2 ** (m - 2 * j + 1)) for j in range(1, ce + 1)), Fraction(0))
    r += -Fraction(lucas(m), m * 2 ** (m + 1)) + Fraction(fib(m), m * 2 ** (m + 2)) + Fraction(fib(m - 1), (m - 1) * 2 ** (m + 1))
    return ctx.mpf(r) + (-1) ** m * ctx.sqrt(5) * ctx.ln(alpha) / 2


def binom_s5b(m: int, ctx=None):
    """sum 4^k C(2k,m) / (5^k (2k-1)(2k)(2k+1))."""
    ctx = ctx or make_context()
    _check_m(m)
    fl, ce = _half_ranges(m)
    alpha, _ = golden(ctx)
    r = Fraction(5, 8) * sum((Fraction(fib(3 * (m - 2 * j)) * 2 ** (m - 2 * j), m - 2 * j) for j in range(fl + 1)), Fraction(0))
    r -= Fraction(5, 8) * sum((Fraction(fib(3 * (m - 2 * j + 1)) * 2 ** (m - 2 * j + 1), m - 2 * j + 1) for j in range(1, ce + 1)), Fraction(0))
    r += (-Fraction(lucas(3 * m) * 2 ** (m - 1), m) + Fraction(fib(3 * m) * 2 ** (m - 1), m)
          + Fraction(fib(3 * (m - 1)) * 2 ** (m - 2), m - 1))
    return ctx.mpf(r) + (-1) ** m * 3 * ctx.sqrt(5) * ctx.ln(alpha) / 4


def b59_coefficient(m: int, j: int, ctx=None):
    """The four-way parity table A(m, j) of the z = sqrt5/3 specialization."""
    ctx = ctx or make_context()
    d = m - j
    if m % 2 == 0 and j % 2 == 1:
        return -ctx.mp.power(5, ctx.mpf(d) / 2) / 2 ** d * lucas(2 * d)
    if m % 2 == 1 and j % 2 == 0:
        return ctx.mp.power(5, ctx.mpf(d) / 2) / 2 ** d * lucas(2 * d)
    if m % 2 == 0 and j % 2 == 0:
        return ctx.mp.power(5, ctx.mpf(d + 1) / 2) / 2 ** d * fib(2 * d)
    return -ctx.mp.power(5, ctx.mpf(d + 1) / 2) / 2 ** d * fib(2 * d)


def binom_b59(m: int, ctx=None):
    """sum 5^k C(2k,m) / (9^k (2k-1)(2k)(2k+1)), as printed."""
    ctx = ctx or make_context()
    _check_m(m)
    r = 3 / (4 * ctx.sqrt(5)) * sum((b59_coefficient(m, j, ctx) / (m - j) for j in range(m)), 0)
    if m % 2 == 0:
        p5 = 5 ** (m // 2)
        r += Fraction(p5, m * 2 ** (m + 1)) * (-Fraction(5, 2) * lucas(2 * m) + lucas(2 * m - 1))
        r += Fraction(p5 * lucas(2 * m - 2), 3 * (m - 1) * 2 ** (m + 1))
    else:
        p5 = 5 ** ((m + 1) // 2)
        r += Fraction(p5, m * 2 ** (m + 1)) * (-Fraction(5, 2) * fib(2 * m) + fib(2 * m - 1))
        r += Fraction(p5 * fib(2 * m - 2), 3 * (m - 1) * 2 ** (m + 1))
    return r


def binom_k2_s5(m: int, ctx=None):
    """sum C(2k,m) / (5^k (2k-1) k^2 (2k+1))."""
    ctx = ctx or make_context()
    _check_m(m)
    fl, ce = _half_ranges(m)
    alpha, _ = golden(ctx)
    sgn = -1 if m % 2 else 1
    r = Fraction(fib(m - 1), (m - 1) * 2 ** (m - 1)) + Fraction(fib(m), m * 2 ** m)
    r += Fraction(2, m) * sum((Fraction(lucas(m - 2 * j), (m - 2 * j) * 2 ** (m - 2 * j)) for j in range(1, fl + 1)), Fraction(0))
    r -= Fraction(2, m) * sum((Fraction(lucas(m - 2 * j + 1), (m - 2 * j + 1) * 2 ** (m - 2 * j + 1)) for j in range(1, ce + 1)), Fraction(0))
    r -= 5 * sum((Fraction(fib(m - 2 * j), (m - 2 * j) * 2 ** (m - 2 * j)) for j in range(fl + 1)), Fraction(0))
    r += 5 * sum((Fraction(fib(m - 2 * j + 1), (m - 2 * j + 1) * 2 ** (m - 2 * j + 1)) for j in range(1, ce + 1)), Fraction(0))
    return (ctx.mpf(r) + Fraction(2 * sgn, m) * ctx.ln(ctx.mpf(Fraction(5, 4)))
            - sgn * 2 * ctx.sqrt(5) * ctx.ln(alpha))


def _check_n_even(n: int) -> None:
    if not isinstance(n, int) or n <= 0 or n % 2:
        raise DomainError("n must be a positive even integer")


def binom_fl_even(n: int, m: int, ctx=None):
    """sum F_n^(2k) 5^k C(2k,2m) / (L_n^(2k) (2k-1)(2k)(2k+1)), n positive even, m >= 1."""
    ctx = ctx or make_context()
    _check_n_even(n)
    _check_m(m, 1)
    fn, ln_ = fib(n), lucas(n)
    alpha, _ = golden(ctx)
    c = Fraction(ln_, 4 * fn)
    r = c * sum((Fraction(5 ** (m - j) * fn ** (2 * m - 2 * j) * fib(n * (2 * m - 2 * j)),
                          (2 * m - 2 * j) * 2 ** (2 * m - 2 * j)) for j in range(m)), Fraction(0))
    r -= c * sum((Fraction(5 ** (m - j) * fn ** (2 * m - 2 * j + 1) * lucas(n * (2 * m - 2 * j + 1)),
                           (2 * m - 2 * j + 1) * 2 ** (2 * m - 2 * j + 1)) for j in range(1, m + 1)), Fraction(0))
    r -= Fraction(5 ** m * fn ** (2 * m) * lucas(2 * n * m), m * 2 ** (2 * m + 2))
    r += Fraction(5 ** (m + 1) * fn ** (2 * m + 1) * fib(2 * n * m), ln_ * m * 2 ** (2 * m + 3))
    r += Fraction(5 ** m * fn ** (2 * m) * lucas(n * (2 * m - 1)), ln_ * (2 * m - 1) * 2 ** (2 * m + 1))
    return ctx.mpf(r) + n * ln_ / (2 * fn * ctx.sqrt(5)) * ctx.ln(alpha)


def binom_fl_odd(n: int, m: int, ctx=None):
    """sum F_n^(2k) 5^k C(2k,2m+1) / (L_n^(2k) (2k-1)(2k)(2k+1)), n positive even, m >= 1."""
    ctx = ctx or make_context()
    _check_n_even(n)
    _check_m(m, 1)
    fn, ln_ = fib(n), lucas(n)
    alpha, _ = golden(ctx)
    c = Fraction(ln_, 4 * fn)
    r = c * sum((Fraction(5 ** (m - j) * fn ** (2 * m - 2 * j + 1) * lucas(n * (2 * m - 2 * j + 1)),
                          (2 * m - 2 * j + 1) * 2 ** (2 * m - 2 * j + 1)) for j in range(m + 1)), Fraction(0))
    r -= c * sum((Fraction(5 ** (m - j + 1) * fn ** (2 * m - 2 * j + 2) * fib(n * (2 * m - 2 * j + 2)),
                           (2 * m - 2 * j + 2) * 2 ** (2 * m - 2 * j + 2)) for j in range(1, m + 1)), Fraction(0))
    r -= Fraction(5 ** (m + 1) * fn ** (2 * m + 1) * fib(n * (2 * m + 1)), (2 * m + 1) * 2 ** (2 * m + 2))
    r += Fraction(5 ** (m + 1) * fn ** (2 * m + 2) * lucas(n * (2 * m + 1)), ln_ * (2 * m + 1) * 2 ** (2 * m + 3))
    r += Fraction(5 ** (m + 1) * fn ** (2 * m + 1) * fib(2 * m * n), ln_ * m * 2 ** (2 * m + 3))
    return ctx.mpf(r) - n * ln_ / (2 * fn * ctx.sqrt(5)) * ctx.ln(alpha)
