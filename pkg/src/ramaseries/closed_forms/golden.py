"""Right-hand sides involving the golden section, Fibonacci and Lucas numbers.

Every function evaluates a closed form exactly as it is printed; none of them
is simplified or corrected.  Parameters outside a formula's stated domain raise
DomainError.
"""

from __future__ import annotations

from fractions import Fraction
from types import SimpleNamespace

from ..fiblucas import fib, lucas
from ..numeric import DomainError, PrecisionContext, const_pi, make_context
from ..special import arctan, arctanh, golden, polylog, zeta


def _k(ctx: PrecisionContext) -> SimpleNamespace:
    alpha, beta = golden(ctx)
    return SimpleNamespace(
        pi=const_pi(ctx), a=alpha, b=beta, la=ctx.ln(alpha), s5=ctx.sqrt(5),
        l2=ctx.ln(2), l3=ctx.ln(3), l5=ctx.ln(5), mp=ctx.mp,
    )


def _li2(x, ctx):
    return polylog(2, x, ctx)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


# ---------------------------------------------------------------------------
# the phi constants and F(z,1), F(z,p) at z = 1/sqrt2, 1/sqrt5, 2/sqrt5, sqrt5/3

def rama_phi2(ctx=None):
    """sum 1/((2k-1)(2k)(2k+1)) = ln2 - 1/2 (phi(2) = 2 ln 2)."""
    ctx = ctx or make_context()
    return ctx.ln(2) - ctx.mpf(0.5)


def rama_phi4(ctx=None):
    """phi(4) = 1 + sum 2/((4k-1)(4k)(4k+1)) = (3/2) ln 2."""
    ctx = ctx or make_context()
    return 3 * ctx.ln(2) / 2


def rama_phi2_alt(ctx=None):
    """tilde-phi(2) = 1 + 2 sum (-1)^k/((2k)^3 - 2k) = ln 2."""
    ctx = ctx or make_context()
    return ctx.ln(2)


def rama_phi3_alt(ctx=None):
    """tilde-phi(3) = 1 + 2 sum (-1)^k/((3k)^3 - 3k) = (4/3) ln 2."""
    ctx = ctx or make_context()
    return 4 * ctx.ln(2) / 3


def particular(i: int, ctx=None):
    """The six listed values of F(1,p) and F(i,p) for p = 1, 2, 3."""
    ctx = ctx or make_context()
    k = _k(ctx)
    half = ctx.mpf(0.5)
    forms = {
        1: lambda: k.l2 - half,
        2: lambda: (k.l2 - 1) / 2,
        3: lambda: half - k.pi ** 2 / 24,
        4: lambda: half - k.pi / 4 + k.pi ** 2 / 48,
        5: lambda: k.l2 - half - zeta(3, ctx) / 8,
        6: lambda: (k.l2 - 1) / 2 + Fraction(3, 32) * zeta(3, ctx),
    }
    _require(i in forms, "particular case index must be 1..6")
    return forms[i]()


def cor3(i: int, ctx=None):
    """sum 1/(2^(k+i) (2k-1) k^i (2k+1)) for i = 1, 2, 3."""
    ctx = ctx or make_context()
    k = _k(ctx)
    s2 = ctx.sqrt(2)
    lr = ctx.ln(1 + s2)
    if i == 1:
        return 3 / (2 * s2) * lr - (k.l2 + 1) / 2
    if i == 2:
        return ctx.mpf(0.5) + k.l2 ** 2 / 8 - k.pi ** 2 / 48 - lr / (2 * s2)
    if i == 3:
        return (3 / (2 * s2) * lr + k.pi ** 2 * k.l2 / 96 - (k.l2 + 1) / 2
                - k.l2 ** 3 / 48 - Fraction(7, 64) * zeta(3, ctx))
    raise DomainError("COR3 index must be 1..3")


def sqrt5(i: int, ctx=None):
    """F(z,1) at z = 1/sqrt5, 2/sqrt5 and sqrt5/3."""
    ctx = ctx or make_context()
    k = _k(ctx)
    half = ctx.mpf(0.5)
    if i == 1:
        return ctx.ln(ctx.mpf(Fraction(4, 5))) / 2 + 3 / k.s5 * k.la - half
    if i == 2:
        return -k.l5 / 2 + 27 / (4 * k.s5) * k.la - half
    if i == 3:
        return ctx.ln(ctx.mpf(Fraction(2, 3))) + 14 / (3 * k.s5) * k.la - half
    raise DomainError("SQRT5 index must be 1..3")


# ---------------------------------------------------------------------------
# Fibonacci/Lucas generalizations of F(z,1)

def fl_even(n: int, ctx=None):
    """sum 5^k F_n^(2k) / (L_n^(2k) (2k-1)(2k)(2k+1)), n positive even."""
    ctx = ctx or make_context()
    _require(n > 0 and n % 2 == 0, "n must be a positive even integer")
    k = _k(ctx)
    return k.l2 - ctx.ln(lucas(n)) + n / k.s5 * Fraction(lucas(2 * n), fib(2 * n)) * k.la - ctx.mpf(0.5)


def fl_odd(n: int, ctx=None):
    """sum L_n^(2k) / (5^k F_n^(2k) (2k-1)(2k)(2k+1)), n positive odd."""
    ctx = ctx or make_context()
    _require(n > 0 and n % 2 == 1, "n must be a positive odd integer")
    k = _k(ctx)
    return (k.l2 - k.l5 / 2 - ctx.ln(fib(n))
            + n / k.s5 * Fraction(lucas(2 * n), fib(2 * n)) * k.la - ctx.mpf(0.5))


def _weighted_parts(r, ctx):
    k = _k(ctx)
    lr = lucas(r)
    ar, br = k.mp.power(k.a, r), k.mp.power(k.b, r)
    g = ctx.ln((lr + ar) / (lr + br) * ar ** 2)
    h = ctx.ln(2 * lr * lr + 1)
    tail = ctx.ln((br * lr + 1) / (ar * lr + 1))
    return k, lr, g, h, tail


def fl_weighted_l(r: int, s: int, ctx=None):
    """sum L_(2rk+s) / (L_r^(2k) (2k-1)(2k)(2k+1)), r even positive."""
    ctx = ctx or make_context()
    _require(r > 0 and r % 2 == 0, "r must be a positive even integer")
    k, lr, g, h, tail = _weighted_parts(r, ctx)
    c = ctx.mpf(Fraction(lr * lr - 1, 8 * lr))
    return (fib(s) * k.s5 / 4 * tail + Fraction(lucas(s), 4) * ctx.ln(ctx.mpf(Fraction(2 * lr * lr + 1, lr ** 4)))
            - Fraction(lucas(s), 2) + lr * lr * fib(s) * k.s5 / 8 * g + Fraction(lr * lr * lucas(s), 8) * h
            - c * fib(r + s) * k.s5 * g - c * lucas(r + s) * h)


def fl_weighted_f(r: int, s: int, ctx=None):
    """sum F_(2rk+s) / (L_r^(2k) (2k-1)(2k)(2k+1)), r even positive."""
    ctx = ctx or make_context()
    _require(r > 0 and r % 2 == 0, "r must be a positive even integer")
    k, lr, g, h, tail = _weighted_parts(r, ctx)
    c = ctx.mpf(Fraction(lr * lr - 1, 8 * lr))
    return (lucas(s) / k.s5 / 4 * tail + Fraction(fib(s), 4) * ctx.ln(ctx.mpf(Fraction(2 * lr * lr + 1, lr ** 4)))
            - Fraction(fib(s), 2) + lr * lr * lucas(s) / k.s5 / 8 * g + Fraction(lr * lr * fib(s), 8) * h
            - c * lucas(r + s) / k.s5 * g - c * fib(r + s) * h)


def fl_shift_l(s: int, ctx=None):
    """sum L_(2k+s) / (4^k (2k-1)(2k)(2k+1)) for any integer s."""
    ctx = ctx or make_context()
    k = _k(ctx)
    return (-lucas(s) * k.l2 + Fraction(5, 16) * lucas(s + 1) * k.l5
            + k.s5 / 8 * (15 * fib(s - 1) - fib(s)) * k.la - Fraction(lucas(s), 2))


def fl_shift_f(s: int, ctx=None):
    """sum F_(2k+s) / (4^k (2k-1)(2k)(2k+1)) for any integer s."""
    ctx = ctx or make_context()
    k = _k(ctx)
    return (-fib(s) * k.l2 + Fraction(5, 16) * fib(s + 1) * k.l5
            + 1 / (8 * k.s5) * (15 * lucas(s - 1) - lucas(s)) * k.la - Fraction(fib(s), 2))


# ---------------------------------------------------------------------------
# powers of 1/alpha

def alpha_series(i: int, ctx=None):
    """Closed forms of the seven series in 1/alpha^k and 1/alpha^(2k)."""
    ctx = ctx or make_context()
    k = _k(ctx)
    a, la, pi = k.a, k.la, k.pi
    half = ctx.mpf(0.5)
    sa = ctx.sqrt(a)
    q = arctanh(1 / sa, ctx)
    forms = {
        1: lambda: half - 3 * la / 4,
        2: lambda: (3 * k.s5 * la / 2 - la - 1) / 2,
        3: lambda: half - pi ** 2 / 60 - 3 * la / 4 + la ** 2 / 4,
        4: lambda: half - q / (2 * a * sa),
        5: lambda: a * sa / 2 * q - half - la,
        6: lambda: half - pi ** 2 / 40 - q / (2 * a * sa) + la ** 2 / 4,
        7: lambda: (pi ** 2 / 60 + 1 + 3 / (4 * a ** 3)) * la - la ** 3 / 12 - zeta(3, ctx) / 10 - half,
    }
    _require(i in forms, "ALPHA index must be 1..7")
    return forms[i]()


# ---------------------------------------------------------------------------
# two-term dilogarithm identities

def dilog_two(i: int, r: int | None = None, ctx=None):
    """Right-hand sides of the golden-section two-term dilogarithm relations.

    i = 23 takes r >= 0 even; i = 24 takes r >= 1 odd.
    """
    ctx = ctx or make_context()
    k = _k(ctx)
    pi, la, l2, l3, l5 = k.pi, k.la, k.l2, k.l3, k.l5
    if i == 21:
        return pi ** 2 / 12 + 2 * la ** 2 - l2 ** 2
    if i == 22:
        return (pi ** 2 / 12 + 6 * la ** 2 - 2 * l2 ** 2 + 2 * l2 * l5 - l5 ** 2
                - _li2(ctx.mpf(Fraction(-1, 4)), ctx))
    if i == 23:
        _require(r is not None and r >= 0 and r % 2 == 0, "r must be a non-negative even integer")
        return pi ** 2 / 6 + r * r * la ** 2 - ctx.ln(lucas(r)) ** 2
    if i == 24:
        _require(r is not None and r >= 1 and r % 2 == 1, "r must be a positive odd integer")
        lf = ctx.ln(fib(r))
        return pi ** 2 / 6 + r * r * la ** 2 - l5 ** 2 / 4 - l5 * lf - lf ** 2
    if i == 25:
        return (pi ** 2 / 6 + 2 * la ** 2 - l5 ** 2 / 2 + 2 * l2 * l5 - 4 * l2 ** 2
                - _li2(ctx.mpf(Fraction(1, 5)), ctx))
    if i == 26:
        return (la ** 2 - l5 ** 2 / 4 + l3 * l5 - l3 ** 2 + 3 * _li2(ctx.mpf(Fraction(1, 5)), ctx) / 2
                - _li2(ctx.mpf(Fraction(1, 25)), ctx) / 2)
    raise DomainError("two-term dilogarithm index must be 21..26")


def dilog_two_args(i: int, r: int | None = None, ctx=None):
    """The two dilogarithm arguments (x, y) on the left of relation i."""
    ctx = ctx or make_context()
    k = _k(ctx)
    a, b, mp = k.a, k.b, k.mp
    if i == 21:
        return a / 2, b / 2
    if i == 22:
        return a ** 3 / 5, b ** 3 / 5
    if i == 23:
        _require(r is not None and r >= 0 and r % 2 == 0, "r must be a non-negative even integer")
        return mp.power(a, r) / lucas(r), mp.power(b, r) / lucas(r)
    if i == 24:
        _require(r is not None and r >= 1 and r % 2 == 1, "r must be a positive odd integer")
        d = k.s5 * fib(r)
        return mp.power(a, r) / d, -mp.power(b, r) / d
    if i == 25:
        return a ** 2 / 4, b ** 2 / 4
    if i == 26:
        return a / 3, b / 3
    raise DomainError("two-term dilogarithm index must be 21..26")


def refl_args(i: int, p: int, q: int, ctx=None):
    """Arguments (x, 1 - x) of the four Fibonacci/Lucas reflection identities."""
    ctx = ctx or make_context()
    k = _k(ctx)
    mp = k.mp
    ap, bp, aq, bq = mp.power(k.a, p), mp.power(k.b, p), mp.power(k.a, q), mp.power(k.b, q)
    if i in (1, 2):
        _require(p + q != 0, "p + q must be non-zero")
        fpq = fib(p + q)
        if i == 1:
            return fib(p) * aq / fpq, fib(q) * bp / fpq
        return fib(q) * ap / fpq, fib(p) * bq / fpq
    lpq = lucas(p + q)
    _require(lpq != 0, "L_(p+q) must be non-zero")
    if i == 3:
        return lucas(p) * aq / lpq, -fib(q) * k.s5 * bp / lpq
    if i == 4:
        return lucas(p) * bq / lpq, fib(q) * k.s5 * ap / lpq
    raise DomainError("reflection index must be 1..4")


def refl_domain(i: int, p: int, q: int, ctx=None) -> bool:
    """True when both reflection arguments lie in (0, 1), so the logarithms
    are real and both dilogarithm series converge geometrically."""
    try:
        x, y = refl_args(i, p, q, ctx)
    except DomainError:
        return False
    return bool(0 < x < 1 and 0 < y < 1)


def dilog_refl(i: int, p: int, q: int, ctx=None):
    """pi^2/6 - ln(x) ln(y) for the reflection pair (x, y)."""
    ctx = ctx or make_context()
    _require(refl_domain(i, p, q, ctx), f"reflection identity {i} needs both arguments in (0,1) at (p,q)=({p},{q})")
    x, y = refl_args(i, p, q, ctx)
    return const_pi(ctx) ** 2 / 6 - ctx.ln(x) * ctx.ln(y)


# ---------------------------------------------------------------------------
# Lucas-number restatements

def lucas_restate(i: int, r: int | None = None, ctx=None):
    ctx = ctx or make_context()
    if i == 1:
        return dilog_two(21, ctx=ctx)
    if i == 2:
        # the trailing printed series sum (-1)^k/(4^k k^2) is Li2(-1/4)
        return dilog_two(22, ctx=ctx)
    if i == 3:
        return dilog_two(23, r, ctx=ctx)
    if i == 4:
        return dilog_two(24, r, ctx=ctx)
    if i == 5:
        return dilog_two(25, ctx=ctx)
    if i == 6:
        return dilog_two(26, ctx=ctx)
    raise DomainError("LUCAS.RESTATE index must be 1..6")


def fibluc_id1(p: int, q: int, ctx=None):
    """sum (F_p^k L_qk + F_q^k L_pk) / (F_(p+q)^k k^2), p and q even."""
    ctx = ctx or make_context()
    _require(p > 0 and q > 0 and p % 2 == 0 and q % 2 == 0, "p and q must be positive even integers")
    x1, y1 = refl_args(1, p, q, ctx)
    x2, y2 = refl_args(2, p, q, ctx)
    return const_pi(ctx) ** 2 / 3 - ctx.ln(x1) * ctx.ln(y1) - ctx.ln(x2) * ctx.ln(y2)


def fibluc_id2(p: int, q: int, ctx=None):
    """Three Lucas/Fibonacci series, p odd and q even."""
    ctx = ctx or make_context()
    _require(p > 0 and q > 0 and p % 2 == 1 and q % 2 == 0, "p must be a positive odd and q a positive even integer")
    x3, y3 = refl_args(3, p, q, ctx)
    x4, y4 = refl_args(4, p, q, ctx)
    return const_pi(ctx) ** 2 / 3 - ctx.ln(x3) * ctx.ln(y3) - ctx.ln(x4) * ctx.ln(y4)


def fibluc_id1_s22(ctx=None):
    """sum L_2k / (3^k k^2) = pi^2/6 + 4 ln^2 alpha - ln^2 3."""
    ctx = ctx or make_context()
    k = _k(ctx)
    return k.pi ** 2 / 6 + 4 * k.la ** 2 - k.l3 ** 2


def fibluc_id2_s12(ctx=None):
    """The (p, q) = (1, 2) case: pi^2/3 + 4 ln^2 alpha + 2 ln2 ln5 - 8 ln^2 2."""
    ctx = ctx or make_context()
    k = _k(ctx)
    return k.pi ** 2 / 3 + 4 * k.la ** 2 + 2 * k.l2 * k.l5 - 8 * k.l2 ** 2


# ---------------------------------------------------------------------------
# Lucas-weighted F(z,2) series

def ram3(i: int, r: int | None = None, ctx=None):
    ctx = ctx or make_context()
    k = _k(ctx)
    a, pi, la, l2, l5, s5, mp = k.a, k.pi, k.la, k.l2, k.l5, k.s5, k.mp
    sa = ctx.sqrt(a)
    if i == 31:
        return (1 - pi ** 2 / 48 + l2 ** 2 / 4 - la ** 2 / 2
                - arctanh(ctx.sqrt(a / 2), ctx) / (2 * a ** 2 * ctx.sqrt(2 * a))
                - a ** 2 * sa / (2 * ctx.sqrt(2)) * arctan(ctx.sqrt(1 / (2 * a)), ctx))
    if i == 32:
        return (1 - pi ** 2 / 48 + l2 ** 2 / 2 - 3 * la ** 2 / 2 - l2 * l5 / 2 + l5 ** 2 / 4
                + _li2(ctx.mpf(Fraction(-1, 4)), ctx) / 4
                - arctanh(a * sa / s5, ctx) / (a ** 3 * ctx.sqrt(5 * a))
                - a ** 3 * sa / s5 * arctan(1 / (a * ctx.sqrt(5 * a)), ctx))
    if i == 33:
        _require(r is not None and r >= 0 and r % 2 == 0, "r must be a non-negative even integer")
        lr = lucas(r)
        ar = mp.power(a, r)
        return (1 - pi ** 2 / 24 - r * r * la ** 2 / 4 + ctx.ln(lr) ** 2 / 4
                - ctx.sqrt(1 / (ar ** 3 * lr)) * arctanh(ctx.sqrt(ar / lr), ctx) / 2
                - ctx.sqrt(ar ** 3 / lr) * arctanh(ctx.sqrt(1 / (ar * lr)), ctx) / 2)
    if i == 34:
        r5 = ctx.sqrt(s5)
        return (1 - pi ** 2 / 24 + l5 ** 2 / 16 - la ** 2 / 4
                - 1 / (2 * r5) * (arctanh(ctx.sqrt(a / s5), ctx) / (a * sa)
                                  + a * sa * arctanh(ctx.sqrt(1 / (s5 * a)), ctx)))
    if i == 35:
        return (1 - pi ** 2 / 24 - la ** 2 / 2 - 9 * s5 / 8 * la + Fraction(5, 16) * l5
                + l5 ** 2 / 8 - l2 * l5 / 2 + l2 ** 2 + _li2(ctx.mpf(Fraction(1, 5)), ctx) / 4)
    raise DomainError("RAM index must be 31..35")


def ram61_radicands(p: int, q: int, ctx=None):
    """The four arctanh radicands F_p a^q/F_(p+q), F_q b^p/F_(p+q),
    F_q a^p/F_(p+q), F_p b^q/F_(p+q)."""
    x1, y1 = refl_args(1, p, q, ctx)
    x2, y2 = refl_args(2, p, q, ctx)
    return x1, y1, x2, y2


def ram61_domain(p: int, q: int, ctx=None) -> bool:
    if not (p > 0 and q > 0 and p % 2 == 0 and q % 2 == 0):
        return False
    return all(0 < v < 1 for v in ram61_radicands(p, q, ctx))


def ram61(p: int, q: int, ctx=None):
    """sum (F_p^k L_qk + F_q^k L_pk) / (F_(p+q)^k (2k-1)(2k)^2(2k+1)), as printed."""
    ctx = ctx or make_context()
    _require(ram61_domain(p, q, ctx), f"(p,q)=({p},{q}) outside the even, positive-radicand domain")
    x1, y1, x2, y2 = ram61_radicands(p, q, ctx)
    k = _k(ctx)
    mp, a, b = k.mp, k.a, k.b
    fpq, fp, fq = fib(p + q), fib(p), fib(q)
    ln, sq = ctx.ln, ctx.sqrt
    t = 2 - k.pi ** 2 / 12 - ln(x1) * ln(y1) / 4 - ln(x2) * ln(y2) / 4
    t -= fq * mp.power(b, p) / sq(fpq * fp * mp.power(a, q)) * arctanh(sq(x1), ctx) / 2
    t -= fp * mp.power(a, q) / sq(fpq * fq * mp.power(b, p)) * arctanh(sq(y1), ctx) / 2
    t -= fp * mp.power(b, q) / sq(fpq * fq * mp.power(a, p)) * arctanh(sq(x2), ctx) / 2
    t -= fq * mp.power(a, p) / sq(fpq * fp * mp.power(b, q)) * arctanh(sq(y2), ctx) / 2
    return t


def hoggatt_args_check(p: int, q: int, ctx=None):
    """x + y for the four reflection pairs (each equals 1)."""
    return [sum(refl_args(i, p, q, ctx)) for i in (1, 2, 3, 4)]


# Lewin-type constants with the polylog side computed directly
def li2_minus_alpha_inversion(ctx=None):
    """Li2(-alpha) = -zeta(2) - ln^2(alpha)/2 - Li2(beta) split into its
    elementary part and the convergent series Li2(beta)."""
    ctx = ctx or make_context()
    k = _k(ctx)
    return -zeta(2, ctx) - k.la ** 2 / 2
