"""Exact Fibonacci and Lucas numbers for all integer indices."""

from __future__ import annotations

from dataclasses import dataclass

from .numeric import PrecisionContext, make_context
from .special import golden

__all__ = ["fib", "lucas", "fib_lucas", "golden", "check_basic_identities", "hoggatt", "HoggattResiduals"]

INDEX_CAP = 10**6


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) for n >= 0 by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # F_2k = F_k (2F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def _check(n: int) -> None:
    if not isinstance(n, int):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if abs(n) > INDEX_CAP:
        raise ValueError(f"|n| <= {INDEX_CAP} required, got {n}")


def fib_lucas(n: int) -> tuple[int, int]:
    """(F_n, L_n) for any integer n."""
    _check(n)
    m = abs(n)
    f, f1 = _fib_pair(m)
    l = 2 * f1 - f
    if n < 0:
        # F_{-m} = (-1)^(m-1) F_m, L_{-m} = (-1)^m L_m
        if m % 2 == 0:
            f = -f
        else:
            l = -l
    return f, l


def fib(n: int) -> int:
    return fib_lucas(n)[0]


def lucas(n: int) -> int:
    return fib_lucas(n)[1]


def check_basic_identities(n: int) -> list[int]:
    """Residuals (all exactly 0) of the identities
    L_n^2 = 5F_n^2 + 4(-1)^n, 5F_n^2 = L_2n + 2(-1)^(n+1),
    L_n^2 = L_2n + 2(-1)^n and, for n != 0, L_n = F_2n / F_n."""
    f, l = fib_lucas(n)
    l2n = lucas(2 * n)
    sign = -1 if n % 2 else 1
    res = [
        l * l - (5 * f * f + 4 * sign),
        5 * f * f - (l2n - 2 * sign),
        l * l - (l2n + 2 * sign),
    ]
    if n != 0:
        f2n = fib(2 * n)
        q, r = divmod(f2n, f)
        res.append(r if r else l - q)
    return res


@dataclass(frozen=True)
class HoggattResiduals:
    """Absolute residuals of the four golden-section shift identities."""

    fib_alpha: object   # F_{p+q} - F_p alpha^q - beta^p F_q
    fib_beta: object    # F_{p+q} - F_p beta^q - alpha^p F_q
    lucas_alpha: object  # L_{p+q} - L_p alpha^q + beta^p F_q sqrt5
    lucas_beta: object   # L_{p+q} - L_p beta^q - alpha^p F_q sqrt5

    def as_list(self) -> list:
        return [self.fib_alpha, self.fib_beta, self.lucas_alpha, self.lucas_beta]

    def max(self):
        return max(self.as_list())


def hoggatt(p: int, q: int, ctx: PrecisionContext | None = None) -> HoggattResiduals:
    ctx = ctx or make_context()
    alpha, beta = golden(ctx)
    s5 = ctx.sqrt(5)
    fp, lp = fib_lucas(p)
    fq, _ = fib_lucas(q)
    fpq, lpq = fib_lucas(p + q)
    mp = ctx.mp
    ap, bp = mp.power(alpha, p), mp.power(beta, p)
    aq, bq = mp.power(alpha, q), mp.power(beta, q)
    return HoggattResiduals(
        abs(fpq - fp * aq - bp * fq),
        abs(fpq - fp * bq - ap * fq),
        abs(lpq - lp * aq + bp * fq * s5),
        abs(lpq - lp * bq - ap * fq * s5),
    )


def binet_fib(n: int, ctx: PrecisionContext | None = None):
    """(alpha^n - beta^n)/sqrt5 in floating point."""
    ctx = ctx or make_context()
    alpha, beta = golden(ctx)
    return (ctx.mp.power(alpha, n) - ctx.mp.power(beta, n)) / ctx.sqrt(5)


def binet_lucas(n: int, ctx: PrecisionContext | None = None):
    ctx = ctx or make_context()
    alpha, beta = golden(ctx)
    return ctx.mp.power(alpha, n) + ctx.mp.power(beta, n)
