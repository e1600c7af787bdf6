"""Closed-form right-hand sides, addressable by catalog id."""

from __future__ import annotations

import inspect
from typing import Callable, Mapping

from ..errors import DomainError, ParamDomain, UnknownIdentity
from ..numeric import PrecisionContext, make_context
from ..special import SpecialValueId, special_value
from . import binomial, golden
from .theorem import (PiMultiple, f_at_1, f_at_i, f_at_i_eta, f_at_i_zeta, f_closed, f_closed_specialized,
                      g_closed, mod4_a, mod4_b, mod6_a, mod6_b, pafrac_rhs, trig_bernoulli_closed,
                      trig_cos_closed, trig_sin_closed)

__all__ = [
    "PiMultiple", "f_closed", "f_closed_specialized", "g_closed", "f_at_1", "f_at_i", "f_at_i_eta",
    "f_at_i_zeta", "trig_cos_closed", "trig_sin_closed", "trig_bernoulli_closed", "mod4_a", "mod4_b",
    "mod6_a", "mod6_b", "pafrac_rhs", "catalog_rhs", "rhs_ids",
]


def _special(vid: SpecialValueId) -> Callable:
    return lambda ctx: special_value(vid, ctx)


_RHS: dict[str, Callable] = {
    "RAMA.PHI2": golden.rama_phi2,
    "RAMA.PHI4": golden.rama_phi4,
    "RAMA.PHI2ALT": golden.rama_phi2_alt,
    "RAMA.PHI3ALT": golden.rama_phi3_alt,
    "THM1": lambda ctx, z, p: f_closed(z, p, ctx),
    "THM1.G": lambda ctx, z, p: g_closed(z, p, ctx),
    "TRIG.COS": lambda ctx, x, p: trig_cos_closed(x, p, ctx),
    "TRIG.SIN": lambda ctx, x, p: trig_sin_closed(x, p, ctx),
    "TRIG.BERN": lambda ctx, x, p, form: trig_bernoulli_closed(x, p, form, ctx),
    "MOD4.A": lambda ctx, p: mod4_a(p, ctx),
    "MOD4.B": lambda ctx, p: mod4_b(p, ctx),
    "MOD6.A": lambda ctx, p: mod6_a(p, ctx),
    "MOD6.B": lambda ctx, p: mod6_b(p, ctx),
    "FL.EVEN": lambda ctx, n: golden.fl_even(n, ctx),
    "FL.ODD": lambda ctx, n: golden.fl_odd(n, ctx),
    "FL.WEIGHTED.L": lambda ctx, r, s: golden.fl_weighted_l(r, s, ctx),
    "FL.WEIGHTED.F": lambda ctx, r, s: golden.fl_weighted_f(r, s, ctx),
    "FL.SHIFT.L": lambda ctx, s: golden.fl_shift_l(s, ctx),
    "FL.SHIFT.F": lambda ctx, s: golden.fl_shift_f(s, ctx),
    "SPECIAL.LI2.1": _special(SpecialValueId.LI2_MINUS1),
    "SPECIAL.LI2.2": _special(SpecialValueId.LI2_MINUS_ALPHA),
    "SPECIAL.LI2.3": _special(SpecialValueId.LI2_MINUS_BETA),
    "SPECIAL.LI2.4": _special(SpecialValueId.LI2_BETA_SQ),
    "SPECIAL.LI2.HALF": _special(SpecialValueId.LI2_HALF),
    "SPECIAL.LI3.HALF": _special(SpecialValueId.LI3_HALF),
    "SPECIAL.LI3.ALPHA": _special(SpecialValueId.LI3_INV_ALPHA_SQ),
    "SPECIAL.CAMPBELL": _special(SpecialValueId.CAMPBELL_ALPHA3),
    "DILOG.TWO.23": lambda ctx, r: golden.dilog_two(23, r, ctx),
    "DILOG.TWO.24": lambda ctx, r: golden.dilog_two(24, r, ctx),
    "LUCAS.RESTATE.3": lambda ctx, r: golden.lucas_restate(3, r, ctx),
    "LUCAS.RESTATE.4": lambda ctx, r: golden.lucas_restate(4, r, ctx),
    "FIBLUC.ID1": lambda ctx, p, q: golden.fibluc_id1(p, q, ctx),
    "FIBLUC.ID2": lambda ctx, p, q: golden.fibluc_id2(p, q, ctx),
    "FIBLUC.ID1.S22": golden.fibluc_id1_s22,
    "FIBLUC.ID2.S12": golden.fibluc_id2_s12,
    "RAM.33": lambda ctx, r: golden.ram3(33, r, ctx),
    "RAM61": lambda ctx, p, q: golden.ram61(p, q, ctx),
    "BINOM.LEMMA": lambda ctx, m, z: binomial.binom_lemma(m, z, ctx),
    "BINOM.K2": lambda ctx, m, z: binomial.binom_k2(m, z, ctx),
    "BINOM.S5A": lambda ctx, m: binomial.binom_s5a(m, ctx),
    "BINOM.S5B": lambda ctx, m: binomial.binom_s5b(m, ctx),
    "BINOM.B59": lambda ctx, m: binomial.binom_b59(m, ctx),
    "BINOM.K2.S5": lambda ctx, m: binomial.binom_k2_s5(m, ctx),
    "BINOM.FL.E": lambda ctx, n, m: binomial.binom_fl_even(n, m, ctx),
    "BINOM.FL.O": lambda ctx, n, m: binomial.binom_fl_odd(n, m, ctx),
    "PAFRAC": lambda ctx, p: pafrac_rhs(p, ctx),
    "TELE.1": lambda ctx: 2 - 2 * ctx.ln(2),
    "TELE.2": lambda ctx: (2 - ctx.pi) / 4,
    "TELE.3": lambda ctx: ctx.mpf(-0.25),
}

for _p in range(7):
    _RHS[f"COR1.{_p}"] = (lambda p: lambda ctx: f_at_1(p, ctx))(_p)
    _RHS[f"COR2.{_p}"] = (lambda p: lambda ctx: f_at_i(p, ctx))(_p)
for _i in range(1, 7):
    _RHS[f"PARTICULAR.{_i}"] = (lambda i: lambda ctx: golden.particular(i, ctx))(_i)
for _i in range(1, 4):
    _RHS[f"COR3.{_i}"] = (lambda i: lambda ctx: golden.cor3(i, ctx))(_i)
    _RHS[f"SQRT5.{_i}"] = (lambda i: lambda ctx: golden.sqrt5(i, ctx))(_i)
for _i in range(1, 8):
    _RHS[f"ALPHA.{_i}"] = (lambda i: lambda ctx: golden.alpha_series(i, ctx))(_i)
for _i in (21, 22, 25, 26):
    _RHS[f"DILOG.TWO.{_i}"] = (lambda i: lambda ctx: golden.dilog_two(i, None, ctx))(_i)
for _i in (1, 2, 5, 6):
    _RHS[f"LUCAS.RESTATE.{_i}"] = (lambda i: lambda ctx: golden.lucas_restate(i, None, ctx))(_i)
for _i in range(1, 5):
    _RHS[f"DILOG.REFL.{_i}"] = (lambda i: lambda ctx, p, q: golden.dilog_refl(i, p, q, ctx))(_i)
for _i in (31, 32, 34, 35):
    _RHS[f"RAM.{_i}"] = (lambda i: lambda ctx: golden.ram3(i, None, ctx))(_i)

# printed specializations addressable on their own
_ALIASES: dict[str, tuple[str, dict]] = {
    "DILOG.TWO.23_1": ("DILOG.TWO.23", {"r": 2}),
    "DILOG.TWO.24_1": ("DILOG.TWO.24", {"r": 1}),
}


def rhs_ids() -> list[str]:
    return sorted(list(_RHS) + list(_ALIASES))


def catalog_rhs(identity: str, params: Mapping | None = None, ctx: PrecisionContext | None = None):
    """Evaluate the right-hand side registered under ``identity``.

    ``params`` holds numeric values (int, float, Fraction, mpf, PiMultiple or a
    form name); they are passed through to the evaluator unchanged.
    """
    ctx = ctx or make_context()
    params = dict(params or {})
    if identity in _ALIASES:
        target, fixed = _ALIASES[identity]
        if params and params != fixed:
            raise ParamDomain(f"{identity} takes no parameters")
        identity, params = target, dict(fixed)
    try:
        fn = _RHS[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None
    try:
        inspect.signature(fn).bind(ctx, **params)
    except TypeError as exc:
        raise ParamDomain(f"{identity}: {exc}") from None
    try:
        return fn(ctx, **params)
    except ParamDomain:
        raise
    except DomainError as exc:
        raise ParamDomain(f"{identity}: {exc}") from None
