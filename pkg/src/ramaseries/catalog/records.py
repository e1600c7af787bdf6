"""The identity registry: left-hand series, tail strategies and right-hand sides."""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Optional

from ..closed_forms import PiMultiple, catalog_rhs
from ..closed_forms.golden import dilog_two_args, ram61_domain, refl_args, refl_domain
from ..errors import UnknownIdentity
from ..fiblucas import fib, lucas
from ..numeric import PrecisionContext, make_context
from ..oracle import (AlternatingLeibniz, Geometric, IntegralMonotone, SeriesPart, TermGenerator,
                      exact_terms, partial_fraction, ratio_bound, real_terms, telescoping_constants)
from ..special import golden, zeta
from .params import ParamSpec, RealParam, numeric, parse_params

GEOMETRIC_WIDTH = Fraction(1, 10**40)
ALTERNATING_WIDTH = Fraction(1, 10**12)
ABSOLUTE_WIDTH = Fraction(1, 10**6)
ALPHA_FLOAT = (1 + 5 ** 0.5) / 2
# fixed precision for domain checks, independent of the working precision
_DOMAIN_CTX = make_context(128)


_PROMOTED = "promoted from AS_PRINTED after verification"


class Status(str, Enum):
    MUST_PASS = "MUST_PASS"
    AS_PRINTED = "AS_PRINTED"


@dataclass(frozen=True)
class Lhs:
    """constant + offset(ctx) + sum of coefficient * series."""

    parts: tuple
    constant: Fraction = Fraction(0)
    offset: Optional[Callable] = None  # ctx -> mpf, an irrational additive constant


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs_text: str
    anchor: str
    lhs: Callable[[dict], Lhs]
    schema: tuple = ()
    defaults: tuple = ({},)
    status: Status = Status.MUST_PASS
    width: object = GEOMETRIC_WIDTH  # Fraction or params -> Fraction
    joint: Optional[Callable[[dict], Optional[str]]] = None
    rhs_id: Optional[str] = None
    note: str = ""

    def parse(self, raw) -> dict:
        return parse_params(self.schema, raw, self.joint)

    def target_width(self, params: dict) -> Fraction:
        return Fraction(self.width(params) if callable(self.width) else self.width)

    def rhs(self, params: dict, ctx: PrecisionContext):
        return catalog_rhs(self.rhs_id or self.id, numeric(params, ctx), ctx)

    def summary(self) -> dict:
        return {
            "id": self.id,
            "lhs": self.lhs_text,
            "anchor": self.anchor,
            "status": self.status.value,
            "params": [s.name for s in self.schema],
            "defaults": [dict(d) for d in self.defaults],
        }


_REGISTRY: dict[str, IdentityRecord] = {}


def _add(rec: IdentityRecord) -> None:
    if rec.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {rec.id}")
    _REGISTRY[rec.id] = rec


def get(identity: str) -> IdentityRecord:
    try:
        return _REGISTRY[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


def list_identities(pattern: Optional[str] = None) -> list[IdentityRecord]:
    ids = sorted(_REGISTRY)
    if pattern:
        ids = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
    return [_REGISTRY[i] for i in ids]


# ---------------------------------------------------------------------------
# term helpers

def _den(k: int, p: int) -> int:
    """(2k-1)(2k)^p(2k+1)."""
    return (4 * k * k - 1) * (2 * k) ** p


def _single(gen: TermGenerator, tail, coefficient=1, constant=0, offset=None) -> Lhs:
    return Lhs((SeriesPart(Fraction(coefficient), gen, tail),), Fraction(constant), offset)


def _midpoint_ratio(asymptotic: float) -> Fraction:
    """A declared geometric ratio halfway between the asymptotic term ratio and 1."""
    if not 0 <= asymptotic < 1:
        raise ValueError("asymptotic ratio must lie in [0, 1)")
    return min(ratio_bound((1 + asymptotic) / 2), Fraction(1) - Fraction(1, 2**30))


def _per_ctx(fn: Callable) -> Callable:
    """Cache a ctx -> value function (contexts are hashable)."""
    return lru_cache(maxsize=16)(fn)


def _power_series(base: Callable, denom: Callable[[int], int], ratio: Fraction, description: str,
                  start: int = 1, weight: Callable[[int], int] = lambda k: 1) -> tuple:
    """weight(k) * base^k / denom(k) with an irrational base given per ctx."""
    cached = _per_ctx(base)

    def term(k, ctx):
        return weight(k) * ctx.mp.power(cached(ctx), k) / denom(k)

    return real_terms(term, description, start), Geometric(ratio, start)


def _rational_power_series(w: Fraction, denom: Callable[[int], int], description: str,
                           start: int = 1, weight: Callable[[int], int] = lambda k: 1, n0: Optional[int] = None,
                           ratio: Optional[Fraction] = None):
    """weight(k) * w^k / denom(k) for rational w; exact terms unless |w| is close to 1."""
    w = Fraction(w)
    ratio = abs(w) if ratio is None else ratio
    tail = Geometric(ratio, n0 or start)
    if abs(w) <= Fraction(9, 10):
        gen = exact_terms(lambda k: (weight(k) * w.numerator ** k, w.denominator ** k * denom(k)), description, start)
    else:
        wf = _per_ctx(lambda ctx: ctx.mpf(w))
        gen = real_terms(lambda k, ctx: weight(k) * ctx.mp.power(wf(ctx), k) / denom(k), description, start)
    return gen, tail


def _z2_series(z: RealParam, denom, description, start=1, weight=lambda k: 1, n0=None, ratio=None):
    """weight(k) * z^(2k) / denom(k); exact when z^2 is rational."""
    if z.square is not None:
        return _rational_power_series(z.square, denom, description, start, weight, n0, ratio)
    sq = lambda ctx: z.value(ctx) ** 2
    r = ratio if ratio is not None else ratio_bound(z.approx() ** 2)
    gen, _ = _power_series(sq, denom, r, description, start, weight)
    return gen, Geometric(r, n0 or start)


# ---------------------------------------------------------------------------
# parameter schemas

def _int(name, doc="", check=None):
    return ParamSpec(name, "int", doc, check)


P_ANY = _int("p", "integer p >= 0", lambda v: v >= 0)
P_UPTO = lambda hi: _int("p", f"integer 0 <= p <= {hi}", lambda v: 0 <= v <= hi)
Z_UNIT = ParamSpec("z", "real", "real z with 0 < |z| < 1", lambda v: 0 < abs(v.approx()) < 1)
Z_POS = ParamSpec("z", "real", "real z with 0 < z < 1", lambda v: 0 < v.approx() < 1)
X_ANGLE = ParamSpec("x", "angle", "x = q*pi with rational 0 < q < 2", lambda v: 0 < v.q < 2)
M2 = _int("m", "integer m >= 2", lambda v: 2 <= v <= 40)


def _grid(**axes) -> tuple:
    out = [{}]
    for name, values in axes.items():
        out = [dict(d, **{name: v}) for d in out for v in values]
    return tuple(out)


# ---------------------------------------------------------------------------
# the phi and phi-tilde constants

_add(IdentityRecord(
    "RAMA.PHI2", "sum 1/((2k-1)(2k)(2k+1))", "phi(2) = 2 ln 2",
    lambda _: _single(exact_terms(lambda k: (1, _den(k, 1)), "1/((2k-1)(2k)(2k+1))"),
                      IntegralMonotone(3, Fraction(1, 6), nonnegative=True)),
    width=ABSOLUTE_WIDTH))
_add(IdentityRecord(
    "RAMA.PHI4", "1 + sum 2/((4k-1)(4k)(4k+1))", "phi(4) = (3/2) ln 2",
    lambda _: _single(exact_terms(lambda k: (2, (16 * k * k - 1) * 4 * k), "2/((4k-1)(4k)(4k+1))"),
                      IntegralMonotone(3, Fraction(1, 30), nonnegative=True), constant=1),
    width=ABSOLUTE_WIDTH))
_add(IdentityRecord(
    "RAMA.PHI2ALT", "1 + 2 sum (-1)^k/((2k)^3 - 2k)", "alternating phi(2) = ln 2",
    lambda _: _single(exact_terms(lambda k: ((-1) ** k, 8 * k ** 3 - 2 * k), "(-1)^k/((2k)^3-2k)"),
                      AlternatingLeibniz(), coefficient=2, constant=1),
    width=ABSOLUTE_WIDTH))
_add(IdentityRecord(
    "RAMA.PHI3ALT", "1 + 2 sum (-1)^k/((3k)^3 - 3k)", "alternating phi(3) = (4/3) ln 2",
    lambda _: _single(exact_terms(lambda k: ((-1) ** k, 27 * k ** 3 - 3 * k), "(-1)^k/((3k)^3-3k)"),
                      AlternatingLeibniz(), coefficient=2, constant=1),
    width=ABSOLUTE_WIDTH))


# ---------------------------------------------------------------------------
# F(1,p), F(i,p) and the listed particular cases

def _f1_lhs(p: int) -> Lhs:
    # (2k-1)(2k+1) >= 3k^2
    return _single(exact_terms(lambda k: (1, _den(k, p)), f"1/((2k-1)(2k)^{p}(2k+1))"),
                   IntegralMonotone(p + 2, Fraction(1, 3 * 2**p), nonnegative=True))


def _fi_lhs(p: int) -> Lhs:
    return _single(exact_terms(lambda k: ((-1) ** k, _den(k, p)), f"(-1)^k/((2k-1)(2k)^{p}(2k+1))"),
                   AlternatingLeibniz())


def _f1_width(p: int) -> Fraction:
    return ABSOLUTE_WIDTH if p <= 1 else ALTERNATING_WIDTH


for _p in range(7):
    _add(IdentityRecord(
        f"COR1.{_p}", f"sum 1/((2k-1)(2k)^{_p}(2k+1))", "F(1,p) in zeta values",
        (lambda p: lambda _: _f1_lhs(p))(_p), width=_f1_width(_p)))
    _add(IdentityRecord(
        f"COR2.{_p}", f"sum (-1)^k/((2k-1)(2k)^{_p}(2k+1))", "F(i,p) in eta values, checked against the zeta-only form",
        (lambda p: lambda _: _fi_lhs(p))(_p), width=ALTERNATING_WIDTH))

for _i, (_alt, _p) in enumerate([(False, 1), (True, 1), (False, 2), (True, 2), (False, 3), (True, 3)], 1):
    _add(IdentityRecord(
        f"PARTICULAR.{_i}",
        f"sum {'(-1)^k' if _alt else '1'}/((2k-1)(2k)^{_p}(2k+1))", "listed particular values of F(1,p), F(i,p)",
        (lambda alt, p: lambda _: _fi_lhs(p) if alt else _f1_lhs(p))(_alt, _p),
        width=ALTERNATING_WIDTH if _alt else _f1_width(_p)))

for _i in (1, 2, 3):
    _add(IdentityRecord(
        f"COR3.{_i}", f"sum 1/(2^(k+{_i}) (2k-1) k^{_i} (2k+1))", "F(1/sqrt2, p), p = 1..3",
        (lambda i: lambda _: _single(
            exact_terms(lambda k: (1, 2 ** (k + i) * (4 * k * k - 1) * k ** i), f"1/(2^(k+{i})(2k-1)k^{i}(2k+1))"),
            Geometric(Fraction(1, 2))))(_i)))

for _i, _w in ((1, Fraction(1, 5)), (2, Fraction(4, 5)), (3, Fraction(5, 9))):
    _add(IdentityRecord(
        f"SQRT5.{_i}", f"sum ({_w})^k/((2k-1)(2k)(2k+1))", "F(z,1) at z = 1/sqrt5, 2/sqrt5, sqrt5/3",
        (lambda w: lambda _: _single(*_rational_power_series(w, lambda k: _den(k, 1), f"({w})^k/T(k)")))(_w)))


# ---------------------------------------------------------------------------
# F(z,p) on the open disk and its z^k form

_add(IdentityRecord(
    "THM1", "sum z^(2k)/((2k-1)(2k)^p(2k+1))", "closed form of F(z,p) for |z| < 1",
    lambda a: _single(*_z2_series(a["z"], lambda k, p=a["p"]: _den(k, p), "z^(2k)/((2k-1)(2k)^p(2k+1))")),
    schema=(Z_UNIT, P_UPTO(40)),
    defaults=_grid(z=["0.1", "0.3", "0.5", "0.7", "0.9"], p=list(range(7)))))


def _g_lhs(a) -> Lhs:
    z, p = a["z"], a["p"]
    den = lambda k: (4 * k * k - 1) * k ** p
    exact = z.exact()
    if exact is not None:
        return _single(*_rational_power_series(exact, den, "z^k/((2k-1)k^p(2k+1))"))
    gen, tail = _power_series(lambda ctx: z.value(ctx), den, ratio_bound(z.approx()), "z^k/((2k-1)k^p(2k+1))")
    return _single(gen, tail)


_add(IdentityRecord(
    "THM1.G", "sum z^k/((2k-1)k^p(2k+1))", "polylog form of F(sqrt z, p) scaled by 2^p",
    _g_lhs, schema=(Z_POS, P_UPTO(40)),
    defaults=_grid(z=["0.04", "0.25", "0.49"], p=list(range(6)))))


# ---------------------------------------------------------------------------
# the unit circle: cos(kx), sin(kx)

def _trig_lhs(x: PiMultiple, power: int, kind: str) -> Lhs:
    period = 2 * x.q.denominator

    @_per_ctx
    def table(ctx):
        f = ctx.cos if kind == "cos" else ctx.sin
        return [f(j * x.radians(ctx)) for j in range(period)]

    gen = TermGenerator(lambda k, ctx: table(ctx)[k % period] / _den(k, power),
                        f"{kind}(kx)/((2k-1)(2k)^{power}(2k+1))", "real",
                        magnitude=lambda k, ctx: ctx.mpf(Fraction(1, _den(k, power))))
    return _single(gen, IntegralMonotone(power + 2, Fraction(1, 3 * 2**power)))


def _trig_width(power: int) -> Fraction:
    return ABSOLUTE_WIDTH if power <= 1 else ALTERNATING_WIDTH


_TRIG_X = ["pi/3", "pi/2", "2*pi/3", "pi"]
_add(IdentityRecord(
    "TRIG.COS", "sum cos(kx)/((2k-1)(2k)^p(2k+1))", "Clausen/Glaisher closed form, 0 < x < 2 pi",
    lambda a: _trig_lhs(a["x"], a["p"], "cos"), schema=(X_ANGLE, P_UPTO(30)),
    defaults=_grid(x=_TRIG_X, p=[1, 2, 3]), width=lambda a: _trig_width(a["p"])))
_add(IdentityRecord(
    "TRIG.SIN", "sum sin(kx)/((2k-1)(2k)^p(2k+1))", "Clausen/Glaisher closed form, 0 < x < 2 pi",
    lambda a: _trig_lhs(a["x"], a["p"], "sin"), schema=(X_ANGLE, P_UPTO(30)),
    defaults=_grid(x=_TRIG_X, p=[1, 2, 3]), width=lambda a: _trig_width(a["p"])))


def _bern_power(a) -> int:
    return 2 * a["p"] if a["form"] == "cos-even" else 2 * a["p"] + 1


_add(IdentityRecord(
    "TRIG.BERN", "cos-even: sum cos(kx)/((2k-1)(2k)^(2p)(2k+1)); sin-odd: sum sin(kx)/((2k-1)(2k)^(2p+1)(2k+1))",
    "Bernoulli-polynomial closed form",
    lambda a: _trig_lhs(a["x"], _bern_power(a), "cos" if a["form"] == "cos-even" else "sin"),
    schema=(X_ANGLE, P_UPTO(15), ParamSpec("form", "choice", "cos-even or sin-odd", choices=("cos-even", "sin-odd"))),
    defaults=_grid(x=_TRIG_X, p=[1, 2], form=["cos-even", "sin-odd"]),
    width=lambda a: _trig_width(_bern_power(a))))


# residue classes mod 4 and mod 6

def _mod4_a(a) -> Lhs:
    e = 2 * a["p"] + 1
    return _single(exact_terms(lambda k: ((-1) ** (k - 1), (16 * k * k - 1) * (4 * k) ** e),
                               "(-1)^(k-1)/((4k-1)(4k)^(2p+1)(4k+1))"), AlternatingLeibniz())


def _mod4_b(a) -> Lhs:
    e = 2 * a["p"] + 1
    return _single(exact_terms(lambda k: ((-1) ** (k - 1), (4 * k - 3) * (4 * k - 2) ** e * (4 * k - 1)),
                               "(-1)^(k-1)/((4k-3)(4k-2)^(2p+1)(4k-1))"), AlternatingLeibniz())


def _mod6_a(a) -> Lhs:
    e = 2 * a["p"] + 1

    def term(k):
        s1 = Fraction(1, (6 * k - 1) * (6 * k) ** e * (6 * k + 1))
        s2 = Fraction(1, (6 * k + 1) * (6 * k + 2) ** e * (6 * k + 3))
        s3 = Fraction(1, (6 * k + 3) * (6 * k + 4) ** e * (6 * k + 5))
        return s1 - (s2 + s3) / 2

    # each of the three terms is at most 1/((6k-1)(6k)^(2p+1)(6k+1)) <= 1/(210 * 36^p k^(2p+3))
    return _single(exact_terms(term, "S1_k - (S2_k + S3_k)/2"),
                   IntegralMonotone(e + 2, Fraction(2, 210 * 36 ** a["p"])))


def _mod6_b(a) -> Lhs:
    e = 2 * a["p"] + 1

    def term(k):
        return (Fraction(1, (6 * k + 1) * (6 * k + 2) ** e * (6 * k + 3))
                - Fraction(1, (6 * k + 3) * (6 * k + 4) ** e * (6 * k + 5)))

    # positive terms, each below 1/(6k)^(2p+3) for k >= 1
    return _single(exact_terms(term, "A_k - B_k, k >= 0", start=0),
                   IntegralMonotone(e + 2, Fraction(1, 216 * 36 ** a["p"]), nonnegative=True))


for _id, _fn, _text in (
        ("MOD4.A", _mod4_a, "sum (-1)^(k-1)/((4k-1)(4k)^(2p+1)(4k+1))"),
        ("MOD4.B", _mod4_b, "sum (-1)^(k-1)/((4k-3)(4k-2)^(2p+1)(4k-1))"),
        ("MOD6.A", _mod6_a, "S1 - (S2 + S3)/2 over residues mod 6, k >= 1"),
        ("MOD6.B", _mod6_b, "sum_{k>=0} 1/((6k+1)(6k+2)^(2p+1)(6k+3)) - 1/((6k+3)(6k+4)^(2p+1)(6k+5))")):
    _add(IdentityRecord(_id, _text, "cosine/sine series at x = pi/2 and x = 2 pi/3", _fn,
                        schema=(P_UPTO(20),), defaults=_grid(p=[0, 1, 2]), width=ALTERNATING_WIDTH,
                        note=_PROMOTED if _id.startswith("MOD6") else ""))


# ---------------------------------------------------------------------------
# Fibonacci and Lucas weights

def _fl_even(a) -> Lhs:
    n = a["n"]
    return _single(*_rational_power_series(Fraction(5 * fib(n) ** 2, lucas(n) ** 2), lambda k: _den(k, 1),
                                           "5^k F_n^(2k)/(L_n^(2k) T(k))"))


def _fl_odd(a) -> Lhs:
    n = a["n"]
    return _single(*_rational_power_series(Fraction(lucas(n) ** 2, 5 * fib(n) ** 2), lambda k: _den(k, 1),
                                           "L_n^(2k)/(5^k F_n^(2k) T(k))"))


_add(IdentityRecord(
    "FL.EVEN", "sum 5^k F_n^(2k)/(L_n^(2k) (2k-1)(2k)(2k+1))", "F(z,1) at z = sqrt5 F_n/L_n, n even",
    _fl_even, schema=(_int("n", "positive even n", lambda v: 0 < v <= 200 and v % 2 == 0),),
    defaults=_grid(n=[2, 4, 6, 8])))
_add(IdentityRecord(
    "FL.ODD", "sum L_n^(2k)/(5^k F_n^(2k) (2k-1)(2k)(2k+1))", "F(z,1) at z = L_n/(sqrt5 F_n), n odd",
    _fl_odd, schema=(_int("n", "positive odd n", lambda v: 0 < v <= 200 and v % 2 == 1),),
    defaults=_grid(n=[1, 3, 5])))

R_EVEN = _int("r", "positive even r", lambda v: 0 < v <= 40 and v % 2 == 0)
S_ANY = _int("s", "integer s", lambda v: abs(v) <= 1000)


def _weighted(seq):
    def build(a) -> Lhs:
        r, s = a["r"], a["s"]
        lr2 = lucas(r) ** 2
        gen = exact_terms(lambda k: (seq(2 * r * k + s), lr2 ** k * _den(k, 1)), f"seq(2rk+s)/(L_r^(2k) T(k))")
        return _single(gen, Geometric(_midpoint_ratio(ALPHA_FLOAT ** (2 * r) / lr2)))
    return build


_add(IdentityRecord(
    "FL.WEIGHTED.L", "sum L_(2rk+s)/(L_r^(2k) (2k-1)(2k)(2k+1))", "Lucas-weighted F(z,1), r even",
    _weighted(lucas), schema=(R_EVEN, S_ANY), defaults=({"r": 2, "s": 0}, {"r": 2, "s": 1}, {"r": 4, "s": 3})))
_add(IdentityRecord(
    "FL.WEIGHTED.F", "sum F_(2rk+s)/(L_r^(2k) (2k-1)(2k)(2k+1))", "Fibonacci-weighted F(z,1), r even",
    _weighted(fib), schema=(R_EVEN, S_ANY), defaults=({"r": 2, "s": 0}, {"r": 2, "s": 1}, {"r": 4, "s": 3})))


def _shift(seq):
    def build(a) -> Lhs:
        s = a["s"]
        gen = exact_terms(lambda k: (seq(2 * k + s), 4 ** k * _den(k, 1)), "seq(2k+s)/(4^k T(k))")
        return _single(gen, Geometric(_midpoint_ratio(ALPHA_FLOAT ** 2 / 4)))
    return build


_add(IdentityRecord(
    "FL.SHIFT.L", "sum L_(2k+s)/(4^k (2k-1)(2k)(2k+1))", "shifted Lucas weights at z = 1/2",
    _shift(lucas), schema=(_int("s", "integer s", lambda v: abs(v) <= 100),), defaults=_grid(s=[-1, 0, 1, 2])))
_add(IdentityRecord(
    "FL.SHIFT.F", "sum F_(2k+s)/(4^k (2k-1)(2k)(2k+1))", "shifted Fibonacci weights at z = 1/2",
    _shift(fib), schema=(_int("s", "integer s", lambda v: abs(v) <= 100),), defaults=_grid(s=[-1, 0, 1, 2])))


# ---------------------------------------------------------------------------
# polylogarithm constants

def _alpha(ctx):
    return golden(ctx)[0]


def _beta(ctx):
    return golden(ctx)[1]


def _polylog_part(base: Callable, order: int, ratio: float, coefficient=1) -> SeriesPart:
    gen, tail = _power_series(base, lambda k: k ** order, ratio_bound(ratio), f"x^k/k^{order}")
    return SeriesPart(Fraction(coefficient), gen, tail)


_INV_A = 1 / ALPHA_FLOAT


def _li2_minus_alpha_offset(ctx):
    # inversion: Li2(-alpha) = -zeta(2) - ln^2(alpha)/2 - Li2(beta)
    return -zeta(2, ctx) - ctx.ln(_alpha(ctx)) ** 2 / 2


_add(IdentityRecord(
    "SPECIAL.LI2.1", "Li2(-1) = sum (-1)^k/k^2", "dilogarithm at -1",
    lambda _: _single(exact_terms(lambda k: ((-1) ** k, k * k), "(-1)^k/k^2"), AlternatingLeibniz()),
    width=ALTERNATING_WIDTH))
_add(IdentityRecord(
    "SPECIAL.LI2.2", "Li2(-alpha) = -zeta(2) - ln^2(alpha)/2 - sum beta^k/k^2", "dilogarithm at -alpha",
    lambda _: Lhs((_polylog_part(_beta, 2, _INV_A, -1),), offset=_li2_minus_alpha_offset),
    note="series diverges at -alpha; summed through the inversion formula"))
_add(IdentityRecord(
    "SPECIAL.LI2.3", "Li2(-beta) = sum alpha^(-k)/k^2", "dilogarithm at 1/alpha",
    lambda _: Lhs((_polylog_part(lambda ctx: -_beta(ctx), 2, _INV_A),))))
_add(IdentityRecord(
    "SPECIAL.LI2.4", "Li2(beta^2) = sum beta^(2k)/k^2", "dilogarithm at 1/alpha^2",
    lambda _: Lhs((_polylog_part(lambda ctx: _beta(ctx) ** 2, 2, _INV_A ** 2),))))
_add(IdentityRecord(
    "SPECIAL.LI3.ALPHA", "Li3(1/alpha^2) = sum alpha^(-2k)/k^3", "trilogarithm at 1/alpha^2",
    lambda _: Lhs((_polylog_part(lambda ctx: _alpha(ctx) ** -2, 3, _INV_A ** 2),))))
_add(IdentityRecord(
    "SPECIAL.CAMPBELL", "Li2(1/alpha^3) - Li2(beta^3)", "two-term relation at alpha^-3",
    lambda _: Lhs((_polylog_part(lambda ctx: _alpha(ctx) ** -3, 2, _INV_A ** 3),
                   _polylog_part(lambda ctx: _beta(ctx) ** 3, 2, _INV_A ** 3, -1)))))
_add(IdentityRecord(
    "SPECIAL.LI2.HALF", "Li2(1/2) = sum 1/(2^k k^2)", "dilogarithm at 1/2",
    lambda _: _single(exact_terms(lambda k: (1, 2 ** k * k * k), "1/(2^k k^2)"), Geometric(Fraction(1, 2)))))
_add(IdentityRecord(
    "SPECIAL.LI3.HALF", "Li3(1/2) = sum 1/(2^k k^3)", "trilogarithm at 1/2",
    lambda _: _single(exact_terms(lambda k: (1, 2 ** k * k ** 3), "1/(2^k k^3)"), Geometric(Fraction(1, 2)))))


# ---------------------------------------------------------------------------
# series in powers of 1/alpha

_ALPHA_SERIES = {
    # id: (power of 1/alpha per k, denominator, text)
    1: (2, lambda k: 4 * k * k - 1, "1/(alpha^(2k)(2k-1)(2k+1))"),
    2: (2, lambda k: _den(k, 1), "1/(alpha^(2k)(2k-1)(2k)(2k+1))"),
    3: (2, lambda k: _den(k, 2), "1/(alpha^(2k)(2k-1)(2k)^2(2k+1))"),
    4: (1, lambda k: 4 * k * k - 1, "1/(alpha^k(2k-1)(2k+1))"),
    5: (1, lambda k: _den(k, 1), "1/(alpha^k(2k-1)(2k)(2k+1))"),
    6: (1, lambda k: _den(k, 2), "1/(alpha^k(2k-1)(2k)^2(2k+1))"),
    7: (2, lambda k: _den(k, 3), "1/(alpha^(2k)(2k-1)(2k)^3(2k+1))"),
}

for _i, (_pw, _dn, _text) in _ALPHA_SERIES.items():
    _add(IdentityRecord(
        f"ALPHA.{_i}", "sum " + _text, "F(z,p) at z = 1/alpha and z = 1/sqrt(alpha)",
        (lambda pw, dn, text: lambda _: _single(*_power_series(
            lambda ctx: _alpha(ctx) ** -pw, dn, ratio_bound(_INV_A ** pw), text)))(_pw, _dn, _text)))


# ---------------------------------------------------------------------------
# two-term dilogarithm relations, summed as the printed pair Li2(x) + Li2(y)

def _dilog_pair(i: int, r: Optional[int] = None) -> Lhs:
    x0, y0 = (float(v) for v in dilog_two_args(i, r, _DOMAIN_CTX))
    parts = []
    for which, approx in ((0, x0), (1, y0)):
        base = (lambda w: lambda ctx: dilog_two_args(i, r, ctx)[w])(which)
        parts.append(_polylog_part(base, 2, abs(approx)))
    return Lhs(tuple(parts))


_DILOG_TEXT = {
    21: "Li2(alpha/2) + Li2(beta/2)", 22: "Li2(alpha^3/5) + Li2(beta^3/5)",
    23: "Li2(alpha^r/L_r) + Li2(beta^r/L_r), r even", 24: "Li2(alpha^r/(sqrt5 F_r)) + Li2(-beta^r/(sqrt5 F_r)), r odd",
    25: "Li2(alpha^2/4) + Li2(beta^2/4)", 26: "Li2(alpha/3) + Li2(beta/3)",
}

for _i in (21, 22, 25, 26):
    _add(IdentityRecord(f"DILOG.TWO.{_i}", _DILOG_TEXT[_i], "golden-section two-term dilogarithm relation",
                        (lambda i: lambda _: _dilog_pair(i))(_i)))
_add(IdentityRecord(
    "DILOG.TWO.23", _DILOG_TEXT[23], "golden-section two-term dilogarithm relation",
    lambda a: _dilog_pair(23, a["r"]),
    schema=(_int("r", "even r >= 0", lambda v: 0 <= v <= 40 and v % 2 == 0),), defaults=_grid(r=[0, 2, 4])))
_add(IdentityRecord(
    "DILOG.TWO.24", _DILOG_TEXT[24], "golden-section two-term dilogarithm relation",
    lambda a: _dilog_pair(24, a["r"]),
    schema=(_int("r", "odd r >= 1", lambda v: 0 < v <= 41 and v % 2 == 1),), defaults=_grid(r=[1, 3])))

PQ = (_int("p", "integer p", lambda v: -40 <= v <= 40), _int("q", "integer q", lambda v: -40 <= v <= 40))


def _refl_lhs(i: int):
    def build(a) -> Lhs:
        p, q = a["p"], a["q"]
        x0, y0 = (float(v) for v in refl_args(i, p, q, _DOMAIN_CTX))
        parts = tuple(_polylog_part((lambda w: lambda ctx: refl_args(i, p, q, ctx)[w])(w), 2, v)
                      for w, v in ((0, x0), (1, y0)))
        return Lhs(parts)
    return build


def _refl_joint(i: int):
    def check(a) -> Optional[str]:
        if not refl_domain(i, a["p"], a["q"], _DOMAIN_CTX):
            return f"reflection identity {i}: both arguments must lie in (0,1) at (p,q)=({a['p']},{a['q']})"
        return None
    return check


_SWEEP = [(1, 2), (2, 2), (2, 4), (3, 2)]
_REFL_TEXT = {
    1: "Li2(F_p alpha^q/F_(p+q)) + Li2(F_q beta^p/F_(p+q))",
    2: "Li2(F_q alpha^p/F_(p+q)) + Li2(F_p beta^q/F_(p+q))",
    3: "Li2(L_p alpha^q/L_(p+q)) + Li2(-F_q sqrt5 beta^p/L_(p+q))",
    4: "Li2(L_p beta^q/L_(p+q)) + Li2(F_q sqrt5 alpha^p/L_(p+q))",
}
for _i in range(1, 5):
    _add(IdentityRecord(
        f"DILOG.REFL.{_i}", _REFL_TEXT[_i], "reflection formula with golden-section shift identities",
        _refl_lhs(_i), schema=PQ,
        defaults=tuple({"p": p, "q": q} for p, q in _SWEEP if refl_domain(_i, p, q, _DOMAIN_CTX)),
        joint=_refl_joint(_i)))


# ---------------------------------------------------------------------------
# Lucas restatements and the Fibonacci/Lucas reflection series

def _lucas_lhs(num: Callable[[int], int], base: int, ratio: float, text: str, den_extra=lambda k: k * k) -> Lhs:
    gen = exact_terms(lambda k: (num(k), base ** k * den_extra(k)), text)
    return _single(gen, Geometric(_midpoint_ratio(ratio)))


def _restate4(a) -> Lhs:
    r = a["r"]
    fr = fib(r)

    def term(k):
        even = Fraction(lucas(2 * r * k), fr ** (2 * k) * 5 ** k * (2 * k) ** 2)
        odd = Fraction(fib(r * (2 * k - 1)), fr ** (2 * k - 1) * 5 ** (k - 1) * (2 * k - 1) ** 2)
        return even + odd

    ratio = ALPHA_FLOAT ** (2 * r) / (5 * fr * fr)
    return _single(exact_terms(term, "L_2rk/(F_r^2k 5^k (2k)^2) + F_r(2k-1)/(F_r^(2k-1) 5^(k-1) (2k-1)^2)"),
                   Geometric(_midpoint_ratio(ratio)))


def _restate3(a) -> Lhs:
    r = a["r"]
    lr = lucas(r)
    return _lucas_lhs(lambda k: lucas(r * k), lr, ALPHA_FLOAT ** r / lr, "L_rk/(L_r^k k^2)")


_add(IdentityRecord("LUCAS.RESTATE.1", "sum L_k/(2^k k^2)", "Lucas form of the alpha/2 relation",
                    lambda _: _lucas_lhs(lucas, 2, ALPHA_FLOAT / 2, "L_k/(2^k k^2)")))
_add(IdentityRecord("LUCAS.RESTATE.2", "sum L_3k/(5^k k^2)", "Lucas form of the alpha^3/5 relation",
                    lambda _: _lucas_lhs(lambda k: lucas(3 * k), 5, ALPHA_FLOAT ** 3 / 5, "L_3k/(5^k k^2)")))
_add(IdentityRecord("LUCAS.RESTATE.3", "sum L_rk/(L_r^k k^2), r even", "Lucas form of the alpha^r/L_r relation",
                    _restate3, schema=(_int("r", "even r >= 0", lambda v: 0 <= v <= 40 and v % 2 == 0),),
                    defaults=_grid(r=[0, 2, 4])))
_add(IdentityRecord("LUCAS.RESTATE.4",
                    "sum L_2rk/(F_r^(2k) 5^k (2k)^2) + sum F_r(2k-1)/(F_r^(2k-1) 5^(k-1) (2k-1)^2), r odd",
                    "Lucas/Fibonacci form of the alpha^r/(sqrt5 F_r) relation", _restate4,
                    schema=(_int("r", "odd r >= 1", lambda v: 0 < v <= 41 and v % 2 == 1),), defaults=_grid(r=[1, 3])))
_add(IdentityRecord("LUCAS.RESTATE.5", "sum L_2k/(4^k k^2)", "Lucas form of the alpha^2/4 relation",
                    lambda _: _lucas_lhs(lambda k: lucas(2 * k), 4, ALPHA_FLOAT ** 2 / 4, "L_2k/(4^k k^2)")))
_add(IdentityRecord("LUCAS.RESTATE.6", "sum L_k/(3^k k^2)", "Lucas form of the alpha/3 relation",
                    lambda _: _lucas_lhs(lucas, 3, ALPHA_FLOAT / 3, "L_k/(3^k k^2)")))


def _id1_terms(p: int, q: int, den_extra: Callable[[int], int]):
    fp, fq, fpq = fib(p), fib(q), fib(p + q)
    ratio = max(fp * ALPHA_FLOAT ** q, fq * ALPHA_FLOAT ** p) / fpq
    gen = exact_terms(lambda k: (fp ** k * lucas(q * k) + fq ** k * lucas(p * k), fpq ** k * den_extra(k)),
                      "(F_p^k L_qk + F_q^k L_pk)/(F_(p+q)^k d(k))")
    return gen, Geometric(_midpoint_ratio(ratio))


def _id2_parts(p: int, q: int) -> tuple:
    lp, fq, lpq = lucas(p), fib(q), lucas(p + q)
    r1 = lp * ALPHA_FLOAT ** q / lpq
    r2 = (fq * 5 ** 0.5 * ALPHA_FLOAT ** p / lpq) ** 2
    g1 = exact_terms(lambda k: (lp ** k * lucas(k * q), lpq ** k * k * k), "L_p^k L_kq/(L_(p+q)^k k^2)")
    g2 = exact_terms(lambda k: (fq ** (2 * k) * 5 ** k * lucas(2 * k * p), lpq ** (2 * k) * (2 * k) ** 2),
                     "F_q^2k 5^k L_2kp/(L_(p+q)^2k (2k)^2)")
    g3 = exact_terms(lambda k: (fq ** (2 * k - 1) * 5 ** k * fib((2 * k - 1) * p), lpq ** (2 * k - 1) * (2 * k - 1) ** 2),
                     "F_q^(2k-1) 5^k F_(2k-1)p/(L_(p+q)^(2k-1) (2k-1)^2)")
    return (SeriesPart(Fraction(1), g1, Geometric(_midpoint_ratio(r1))),
            SeriesPart(Fraction(1), g2, Geometric(_midpoint_ratio(r2))),
            SeriesPart(Fraction(1), g3, Geometric(_midpoint_ratio(r2))))


def _id1_joint(a):
    p, q = a["p"], a["q"]
    if not (p > 0 and q > 0 and p % 2 == 0 and q % 2 == 0):
        return "p and q must be positive even integers"
    return None


def _id2_joint(a):
    p, q = a["p"], a["q"]
    if not (p > 0 and q > 0 and p % 2 == 1 and q % 2 == 0):
        return "p must be a positive odd and q a positive even integer"
    if not (refl_domain(3, p, q, _DOMAIN_CTX) and refl_domain(4, p, q, _DOMAIN_CTX)):
        return "all series ratios must lie in (0,1)"
    return None


PQ_POS = (_int("p", "positive p", lambda v: 0 < v <= 40), _int("q", "positive q", lambda v: 0 < v <= 40))
_add(IdentityRecord(
    "FIBLUC.ID1", "sum (F_p^k L_qk + F_q^k L_pk)/(F_(p+q)^k k^2), p, q even", "reflection identities 1 and 2 combined",
    lambda a: _single(*_id1_terms(a["p"], a["q"], lambda k: k * k)), schema=PQ_POS,
    defaults=({"p": 2, "q": 2}, {"p": 2, "q": 4}), joint=_id1_joint))
_add(IdentityRecord(
    "FIBLUC.ID2", "three Lucas/Fibonacci series, p odd, q even", "reflection identities 3 and 4 combined",
    lambda a: Lhs(_id2_parts(a["p"], a["q"])), schema=PQ_POS,
    defaults=({"p": 1, "q": 2}, {"p": 3, "q": 2}), joint=_id2_joint))
_add(IdentityRecord(
    "FIBLUC.ID1.S22", "sum L_2k/(3^k k^2)", "first combined identity at p = q = 2",
    lambda _: _lucas_lhs(lambda k: lucas(2 * k), 3, ALPHA_FLOAT ** 2 / 3, "L_2k/(3^k k^2)")))
_add(IdentityRecord(
    "FIBLUC.ID2.S12", "sum L_2k/(4^k k^2) + sum 5^k L_2k/(4^(2k)(2k)^2) + sum 5^k F_(2k-1)/(4^(2k-1)(2k-1)^2)",
    "second combined identity at p = 1, q = 2", lambda _: Lhs(_id2_parts(1, 2))))


# ---------------------------------------------------------------------------
# Lucas-weighted F(z,2)

def _q(k):
    return _den(k, 2)


_add(IdentityRecord(
    "RAM.31", "sum L_k/(2^(k+2)(2k-1)k^2(2k+1))", "Lucas-weighted F(z,2), z^2 = alpha/2 and beta/2",
    lambda _: _single(exact_terms(lambda k: (lucas(k), 2 ** (k + 2) * (4 * k * k - 1) * k * k), "L_k/(2^(k+2)(2k-1)k^2(2k+1))"),
                      Geometric(_midpoint_ratio(ALPHA_FLOAT / 2)))))
_add(IdentityRecord(
    "RAM.32", "sum L_3k/(5^k (2k-1)(2k)^2(2k+1))", "Lucas-weighted F(z,2), z^2 = alpha^3/5 and beta^3/5",
    lambda _: _single(exact_terms(lambda k: (lucas(3 * k), 5 ** k * _q(k)), "L_3k/(5^k (2k-1)(2k)^2(2k+1))"),
                      Geometric(_midpoint_ratio(ALPHA_FLOAT ** 3 / 5))),
    note=_PROMOTED))
_add(IdentityRecord(
    "RAM.33", "sum L_rk/(L_r^k (2k-1)(2k)^2(2k+1)), r even", "Lucas-weighted F(z,2), z^2 = alpha^r/L_r",
    lambda a: _single(exact_terms(lambda k, r=a["r"]: (lucas(r * k), lucas(r) ** k * _q(k)), "L_rk/(L_r^k Q(k))"),
                      Geometric(_midpoint_ratio(ALPHA_FLOAT ** a["r"] / lucas(a["r"])))),
    schema=(_int("r", "even r >= 0", lambda v: 0 <= v <= 40 and v % 2 == 0),), defaults=_grid(r=[0, 2, 4])))
_add(IdentityRecord(
    "RAM.34", "sum L_2k/(5^k (4k-1)(4k)^2(4k+1)) + sum F_(2k-1)/(5^(k-1)(4k-3)(4k-2)^2(4k-1))",
    "Lucas/Fibonacci-weighted F(z,2), z^2 = alpha/sqrt5 and -beta/sqrt5",
    lambda _: Lhs((
        SeriesPart(Fraction(1), exact_terms(lambda k: (lucas(2 * k), 5 ** k * (16 * k * k - 1) * (4 * k) ** 2),
                                            "L_2k/(5^k (4k-1)(4k)^2(4k+1))"),
                   Geometric(_midpoint_ratio(ALPHA_FLOAT ** 2 / 5))),
        SeriesPart(Fraction(1), exact_terms(lambda k: (fib(2 * k - 1), 5 ** (k - 1) * (4 * k - 3) * (4 * k - 2) ** 2 * (4 * k - 1)),
                                            "F_(2k-1)/(5^(k-1)(4k-3)(4k-2)^2(4k-1))"),
                   Geometric(_midpoint_ratio(ALPHA_FLOAT ** 2 / 5))))),
    note=_PROMOTED))
_add(IdentityRecord(
    "RAM.35", "sum L_2k/(4^(k+1)(2k-1)k^2(2k+1))", "Lucas-weighted F(z,2), z = alpha/2 and beta/2",
    lambda _: _single(exact_terms(lambda k: (lucas(2 * k), 4 ** (k + 1) * (4 * k * k - 1) * k * k), "L_2k/(4^(k+1)(2k-1)k^2(2k+1))"),
                      Geometric(_midpoint_ratio(ALPHA_FLOAT ** 2 / 4)))))


def _ram61_joint(a):
    if not ram61_domain(a["p"], a["q"], _DOMAIN_CTX):
        return "p and q must be positive even integers with all arctanh radicands in (0,1)"
    return None


_add(IdentityRecord(
    "RAM61", "sum (F_p^k L_qk + F_q^k L_pk)/(F_(p+q)^k (2k-1)(2k)^2(2k+1)), p, q even",
    "Fibonacci/Lucas reflection series weighted as F(z,2)",
    lambda a: _single(*_id1_terms(a["p"], a["q"], _q)), schema=PQ_POS,
    defaults=({"p": 2, "q": 2}, {"p": 2, "q": 4}), joint=_ram61_joint, status=Status.AS_PRINTED,
    note="printed form disagrees with the series; kept as printed"))


# ---------------------------------------------------------------------------
# binomial weights

def _binomial_lhs(top_m: int, z2: Fraction | RealParam, den: Callable[[int], int], text: str) -> Lhs:
    """sum C(2k, top_m) w^k / den(k) with w = z^2; the first non-zero term is at k = ceil(top_m/2)."""
    start = max(1, (top_m + 1) // 2)
    if isinstance(z2, RealParam):
        w_bound = ratio_bound(z2.approx() ** 2)
    else:
        w_bound = Fraction(z2)
    target = (1 + w_bound) / 2
    # C(2k+2,m)/C(2k,m) = (2k+2)(2k+1)/((2k+2-m)(2k+1-m)) decreases to 1; den(k)/den(k+1) < 1
    n0 = start
    while 2 * n0 + 1 - top_m < 1 or w_bound * Fraction((2 * n0 + 2) * (2 * n0 + 1),
                                                         (2 * n0 + 2 - top_m) * (2 * n0 + 1 - top_m)) > target:
        n0 += 1
    weight = lambda k: comb(2 * k, top_m)
    if isinstance(z2, RealParam):
        return _single(*_z2_series(z2, den, text, start, weight, n0, target))
    return _single(*_rational_power_series(z2, den, text, start, weight, n0, target))


M_Z = (M2, Z_UNIT)
_BINOM_GRID = _grid(m=[2, 3, 4], z=["0.3", "1/sqrt(5)"])
_K2_DEN = lambda k: (4 * k * k - 1) * k * k

_add(IdentityRecord(
    "BINOM.LEMMA", "sum C(2k,m) z^(2k)/((2k-1)(2k)(2k+1))", "m-th derivative of F(z,1)",
    lambda a: _binomial_lhs(a["m"], a["z"], lambda k: _den(k, 1), "C(2k,m) z^(2k)/T(k)"),
    schema=M_Z, defaults=_BINOM_GRID, note=_PROMOTED))
_add(IdentityRecord(
    "BINOM.K2", "sum C(2k,m) z^(2k)/((2k-1)k^2(2k+1))", "m-th derivative of 4F(z,2)",
    lambda a: _binomial_lhs(a["m"], a["z"], _K2_DEN, "C(2k,m) z^(2k)/((2k-1)k^2(2k+1))"),
    schema=M_Z, defaults=_BINOM_GRID, note=_PROMOTED))
_add(IdentityRecord(
    "BINOM.S5A", "sum C(2k,m)/(5^k (2k-1)(2k)(2k+1))", "binomial lemma at z = 1/sqrt5",
    lambda a: _binomial_lhs(a["m"], Fraction(1, 5), lambda k: _den(k, 1), "C(2k,m)/(5^k T(k))"),
    schema=(M2,), defaults=_grid(m=[2, 3, 4, 5]), note=_PROMOTED))
_add(IdentityRecord(
    "BINOM.S5B", "sum 4^k C(2k,m)/(5^k (2k-1)(2k)(2k+1))", "binomial lemma at z = 2/sqrt5",
    lambda a: _binomial_lhs(a["m"], Fraction(4, 5), lambda k: _den(k, 1), "4^k C(2k,m)/(5^k T(k))"),
    schema=(M2,), defaults=_grid(m=[2, 3, 4, 5]), note=_PROMOTED))
_add(IdentityRecord(
    "BINOM.B59", "sum 5^k C(2k,m)/(9^k (2k-1)(2k)(2k+1))", "binomial lemma at z = sqrt5/3 with the A(m,j) table",
    lambda a: _binomial_lhs(a["m"], Fraction(5, 9), lambda k: _den(k, 1), "5^k C(2k,m)/(9^k T(k))"),
    schema=(M2,), defaults=_grid(m=[2, 3, 4, 5]), status=Status.AS_PRINTED,
    note="printed form disagrees with the series; kept as printed"))
_add(IdentityRecord(
    "BINOM.K2.S5", "sum C(2k,m)/(5^k (2k-1)k^2(2k+1))", "derivative of 4F(z,2) at z = 1/sqrt5",
    lambda a: _binomial_lhs(a["m"], Fraction(1, 5), _K2_DEN, "C(2k,m)/(5^k (2k-1)k^2(2k+1))"),
    schema=(M2,), defaults=_grid(m=[2, 3, 4, 5]), note=_PROMOTED))

N_M = (_int("n", "positive even n", lambda v: 0 < v <= 40 and v % 2 == 0), _int("m", "m >= 1", lambda v: 1 <= v <= 20))
_FL_BINOM_DEFAULTS = ({"n": 2, "m": 1}, {"n": 2, "m": 2}, {"n": 4, "m": 1})


def _fl_binom(offset: int):
    def build(a) -> Lhs:
        n, m = a["n"], a["m"]
        w = Fraction(5 * fib(n) ** 2, lucas(n) ** 2)
        return _binomial_lhs(2 * m + offset, w, lambda k: _den(k, 1), "F_n^(2k) 5^k C(2k,j)/(L_n^(2k) T(k))")
    return build


_add(IdentityRecord(
    "BINOM.FL.E", "sum F_n^(2k) 5^k C(2k,2m)/(L_n^(2k)(2k-1)(2k)(2k+1)), n even", "even-order binomial Fibonacci/Lucas series",
    _fl_binom(0), schema=N_M, defaults=_FL_BINOM_DEFAULTS, note=_PROMOTED))
_add(IdentityRecord(
    "BINOM.FL.O", "sum F_n^(2k) 5^k C(2k,2m+1)/(L_n^(2k)(2k-1)(2k)(2k+1)), n even", "odd-order binomial Fibonacci/Lucas series",
    _fl_binom(1), schema=N_M, defaults=_FL_BINOM_DEFAULTS, note=_PROMOTED))


# ---------------------------------------------------------------------------
# elementary constants of the decomposed form and the decomposition itself

_TELE = {t.name: t for t in telescoping_constants()}
for _i, (_name, _text) in enumerate((
        ("harmonic_odd_product", "sum 1/(k(2k+1))"),
        ("alternating_odd_product", "sum (-1)^k/((2k-1)(2k+1))"),
        ("alternating_weighted_odd_product", "sum (-1)^k k/((2k-1)(2k+1))")), 1):
    _t = _TELE[_name]
    _add(IdentityRecord(
        f"TELE.{_i}", _text, "telescoping constants of the partial-fraction route",
        (lambda t: lambda _: _single(t.generator, t.tail))(_t), width=_t.target_width))


def _pafrac_lhs(a) -> Lhs:
    pf = partial_fraction(a["p"])
    return _single(exact_terms(pf.evaluate, "partial fractions of 1/((2k-1)k^p(2k+1))"),
                   IntegralMonotone(a["p"] + 2, Fraction(1, 3), nonnegative=True))


_add(IdentityRecord(
    "PAFRAC", "sum over k of the partial fractions of 1/((2k-1)k^p(2k+1))", "2^p F(1,p) before telescoping",
    _pafrac_lhs, schema=(_int("p", "integer p >= 2", lambda v: 2 <= v <= 30),), defaults=_grid(p=[2, 3, 4, 5]),
    width=ALTERNATING_WIDTH))
