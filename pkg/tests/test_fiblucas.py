import pytest
from hypothesis import given, strategies as st

from ramaseries.fiblucas import INDEX_CAP, binet_fib, binet_lucas, check_basic_identities, fib, hoggatt, lucas
from ramaseries.numeric import make_context

FIB_100 = 354224848179261915075


def test_small_values():
    assert fib(10) == 55 and lucas(10) == 123
    assert lucas(0) == 2 and lucas(1) == 1
    assert fib(-4) == -3
    assert fib(100) == FIB_100


def test_index_cap():
    with pytest.raises(ValueError):
        fib(INDEX_CAP + 1)
    with pytest.raises(TypeError):
        lucas(2.0)


@given(st.integers(-500, 500))
def test_recurrence(n):
    assert fib(n) == fib(n - 1) + fib(n - 2)
    assert lucas(n) == lucas(n - 1) + lucas(n - 2)


@pytest.mark.parametrize("n", range(1, 501))
def test_negative_index_rules(n):
    assert fib(-n) == (-1) ** (n - 1) * fib(n)
    assert lucas(-n) == (-1) ** n * lucas(n)


@given(st.integers(-300, 300))
def test_basic_identities_exact(n):
    assert check_basic_identities(n) == [0] * len(check_basic_identities(n))


def test_basic_identity_examples():
    assert lucas(5) ** 2 == 121 == 5 * fib(5) ** 2 - 4
    assert fib(12) // fib(6) == lucas(6) == 18
    assert all(r == 0 for r in check_basic_identities(1))


@pytest.mark.parametrize("n", range(1, 65))
def test_binet(ctx, n):
    alpha = (1 + ctx.sqrt(5)) / 2
    tol = ctx.mpf(2) ** (-ctx.prec_bits + 16) * alpha ** n
    assert abs(fib(n) - binet_fib(n, ctx)) <= tol
    assert abs(lucas(n) - binet_lucas(n, ctx)) <= tol


@pytest.mark.parametrize("p,q", [(1, 1), (3, 2), (2, 4), (-3, 5), (7, -2), (0, 6)])
def test_hoggatt(ctx, p, q):
    assert hoggatt(p, q, ctx).max() <= ctx.mpf(2) ** (-ctx.prec_bits + 16)


def test_hoggatt_examples():
    ctx = make_context(256)
    assert hoggatt(3, 2, ctx).max() <= 1e-70
    assert hoggatt(2, 4, ctx).max() <= 1e-70
