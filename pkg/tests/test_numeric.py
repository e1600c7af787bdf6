from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ramaseries.numeric import (Bracket, DomainError, combine, const_pi, elementary, machin_pi, make_context,
                                to_decimal, to_fraction)

PI_50 = "3.1415926535897932384626433832795028841971693993751"


def test_make_context_echoes_precision():
    assert make_context(256).prec_bits == 256
    assert make_context(64).prec_bits == 64


def test_make_context_rejects_low_precision():
    with pytest.raises(ValueError):
        make_context(32)


def test_default_precision_is_256(monkeypatch):
    monkeypatch.delenv("RAMASERIES_PREC_BITS", raising=False)
    assert make_context().prec_bits == 256


def test_env_overrides_precision(monkeypatch):
    monkeypatch.setenv("RAMASERIES_PREC_BITS", "320")
    assert make_context().prec_bits == 320
    monkeypatch.setenv("RAMASERIES_PREC_BITS", "many")
    with pytest.raises(ValueError):
        make_context()


def test_elementary_basic(ctx):
    assert elementary("ln", 1, ctx=ctx) == 0
    assert elementary("sqrt", 4, ctx=ctx) == 2
    assert abs(elementary("atan", 1, ctx=ctx) - const_pi(ctx) / 4) <= ctx.mpf(2) ** -254


def test_elementary_domain_errors(ctx):
    with pytest.raises(DomainError):
        elementary("ln", 0, ctx=ctx)
    with pytest.raises(DomainError):
        elementary("ln", -2, ctx=ctx)
    with pytest.raises(DomainError):
        elementary("div", 1, 0, ctx=ctx)


def test_pi_digits_and_independent_series(ctx):
    assert to_decimal(const_pi(ctx), 50) == PI_50
    # Machin's arctan series is an independent route to pi
    assert abs(machin_pi(300) - const_pi(ctx)) <= ctx.mpf(2) ** -254 * 4
    assert abs(4 * ctx.atan(1) - const_pi(ctx)) <= ctx.mpf(2) ** -254 * 4


def test_bracket_examples():
    assert Bracket(1, 2).contains(1.5)
    assert Bracket(0, 0).width() == 0
    s = combine(Bracket(1, 2), Bracket(3, 4), "+")
    assert (s.lo, s.hi) == (4, 6)


def test_bracket_rejects_reversed():
    with pytest.raises(ValueError):
        Bracket(2, 1)


def test_contains_is_exact():
    b = Bracket(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**60))
    assert b.contains(Fraction(1, 3) + Fraction(1, 10**61))
    assert not b.contains(Fraction(1, 3) + Fraction(2, 10**60))


floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


@settings(max_examples=1000)
@given(floats, floats, floats, floats, st.floats(0, 1), st.floats(0, 1))
def test_bracket_sum_contains_sums(a, b, c, d, s, t):
    A = Bracket(min(a, b), max(a, b))
    B = Bracket(min(c, d), max(c, d))
    x = to_fraction(A.lo) + (to_fraction(A.hi) - to_fraction(A.lo)) * Fraction(s)
    y = to_fraction(B.lo) + (to_fraction(B.hi) - to_fraction(B.lo)) * Fraction(t)
    assert combine(A, B, "+").contains(x + y)
    assert combine(A, B, "-").contains(x - y)
    assert combine(A, B, "*").contains(x * y)


@given(floats, floats, st.fractions(min_value=-100, max_value=100, max_denominator=1000))
def test_bracket_scale_contains(a, b, c):
    A = Bracket(min(a, b), max(a, b))
    assert A.scale(c).contains(to_fraction(A.lo) * c)
    assert A.scale(c).contains(to_fraction(A.hi) * c)


@pytest.mark.parametrize("bits", [64, 256, 512])
def test_exp_ln_round_trip(bits):
    ctx = make_context(bits)
    tol = ctx.mpf(2) ** (-bits + 8)
    for e in range(-30, 31):
        x = ctx.mpf(10) ** (ctx.mpf(e) / 10)
        assert abs(ctx.exp(ctx.ln(x)) - x) <= tol * x


def test_determinism(ctx):
    a = [elementary(k, ctx.mpf("0.7"), ctx=ctx) for k in ("ln", "sqrt", "exp", "atan", "sin", "cos")]
    b = [elementary(k, ctx.mpf("0.7"), ctx=ctx) for k in ("ln", "sqrt", "exp", "atan", "sin", "cos")]
    assert [x._mpf_ for x in a] == [x._mpf_ for x in b]


def test_decimal_round_trip(ctx):
    x = ctx.sqrt(2)
    text = to_decimal(x, ctx.prec_bits // 3 + 2)
    back = make_context(ctx.prec_bits).mpf(text)
    assert abs(back - x) <= abs(x) * ctx.mpf(2) ** (-ctx.prec_bits + 2)
    assert mpmath.mpf(text) != 0
