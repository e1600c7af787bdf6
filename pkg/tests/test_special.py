from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from ramaseries.closed_forms.golden import dilog_two, dilog_two_args
from ramaseries.numeric import DomainError, const_pi, make_context
from ramaseries.oracle import (AlternatingLeibniz, Geometric, IntegralMonotone, exact_terms, ratio_bound,
                               real_terms, sum_bracket)
from ramaseries.special import (SpecialValueId, arctan, arctanh, bernoulli_number, bernoulli_poly, clausen_cl,
                                clausen_gl, eta, eta_bracket, gl_bernoulli, gl_bernoulli_pi_multiple, golden,
                                polylog, polylog_unit, special_value, special_value_polylog, zeta, zeta_bracket)

# independent 60-digit values (plain mpmath at 200 bits)
ZETA3 = "1.20205690315959428539973816151144999076498629234049888179227"
ZETA5 = "1.03692775514336992633136548645703416805708091950191281197419"
LI2_HALF = "0.582240526465012505902656320159680108744198474806126425434347"
ATANH_03 = "0.309519604203111715474067349061069437584091607589172963979828"
LI3_BETA_SQ = "0.402683962952109021159959448182511142219733807379383950169087"

TIGHT = 2 ** -240


def test_arctanh_examples(ctx):
    assert arctanh(0, ctx) == 0
    s2 = ctx.sqrt(2)
    assert abs(arctanh(1 / s2, ctx) - ctx.ln(1 + s2)) <= TIGHT
    assert abs(arctanh(ctx.mpf("0.3"), ctx) - ctx.mpf(ATANH_03)) <= 1e-58


def test_arctanh_matches_maclaurin(ctx):
    z = Fraction(3, 10)
    partial = sum(Fraction(z ** (2 * j + 1)) / (2 * j + 1) for j in range(50))
    tail = float(z) ** 101 / (101 * (1 - 0.09))
    assert abs(arctanh(ctx.mpf(z), ctx) - ctx.mpf(partial)) <= tail


def test_arctanh_domain(ctx):
    for z in (1, -1, 1.5):
        with pytest.raises(DomainError):
            arctanh(z, ctx)


def test_arctan(ctx):
    assert arctan(0, ctx) == 0
    assert abs(arctan(1, ctx) - const_pi(ctx) / 4) <= TIGHT
    x = ctx.mpf("0.7")
    assert abs(arctan(x, ctx) + arctan(1 / x, ctx) - const_pi(ctx) / 2) <= TIGHT


def test_polylog_examples(ctx):
    pi = const_pi(ctx)
    assert abs(polylog(1, ctx.mpf(0.5), ctx) - ctx.ln(2)) <= TIGHT
    assert abs(polylog(2, -1, ctx) + pi ** 2 / 12) <= TIGHT
    assert abs(polylog(2, ctx.mpf(0.5), ctx) - (zeta(2, ctx) - ctx.ln(2) ** 2) / 2) <= TIGHT
    assert abs(polylog(2, ctx.mpf(0.5), ctx) - ctx.mpf(LI2_HALF)) <= 1e-58


def test_polylog_domain(ctx):
    with pytest.raises(DomainError):
        polylog(2, 1.01, ctx)
    with pytest.raises(DomainError):
        polylog(1, 1, ctx)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("z", ["0.3", "-0.6", "0.8", "0.97", "-0.99"])
def test_polylog_matches_oracle(ctx, n, z):
    zq = Fraction(z)
    gen = exact_terms(lambda k: (zq.numerator ** k, zq.denominator ** k * k ** n), "z^k/k^n")
    br = sum_bracket(gen, Geometric(abs(zq)), Fraction(1, 10**40), ctx=ctx)
    assert br.bracket.contains(polylog(n, ctx.mpf(zq), ctx))


def test_zeta_examples(ctx):
    pi = const_pi(ctx)
    assert abs(zeta(2, ctx) - pi ** 2 / 6) <= TIGHT
    assert abs(zeta(4, ctx) - pi ** 4 / 90) <= TIGHT
    assert abs(zeta(3, ctx) - ctx.mpf(ZETA3)) <= 1e-58
    assert abs(zeta(5, ctx) - ctx.mpf(ZETA5)) <= 1e-58
    with pytest.raises(DomainError):
        zeta(1, ctx)


def test_zeta3_certified_to_1e40(ctx):
    br = zeta_bracket(3, ctx)
    assert br.width() <= 1e-40
    assert br.distance(ctx.mpf(ZETA3)) <= 1e-58
    assert br.contains(zeta(3, ctx))
    # the Leibniz bracket of eta(3) and the zeta relation agree
    eb = sum_bracket(exact_terms(lambda k: ((-1) ** (k - 1), k ** 3)), AlternatingLeibniz(), Fraction(1, 10**9), ctx=ctx)
    assert eb.bracket.scale(Fraction(4, 3)).contains(zeta(3, ctx))


def test_zeta4_against_direct_sum(ctx):
    gen = exact_terms(lambda k: (1, k ** 4))
    br = sum_bracket(gen, IntegralMonotone(4, 1, nonnegative=True), Fraction(1, 10**12), ctx=ctx)
    assert br.bracket.contains(zeta(4, ctx))


def test_eta_examples(ctx):
    assert eta(1, ctx) == ctx.ln(2)
    assert abs(eta(2, ctx) - const_pi(ctx) ** 2 / 12) <= TIGHT
    assert abs(eta(5, ctx) - (1 - ctx.mpf(2) ** -4) * zeta(5, ctx)) <= TIGHT
    with pytest.raises(DomainError):
        eta(0, ctx)


@pytest.mark.parametrize("n", range(2, 11))
def test_eta_zeta_relation(ctx, n):
    assert abs(eta(n, ctx) - (1 - ctx.mpf(2) ** (1 - n)) * zeta(n, ctx)) <= ctx.mpf(2) ** (-ctx.prec_bits + 10)
    assert eta_bracket(n, ctx).contains(eta(n, ctx))


def test_clausen_examples(ctx):
    pi = const_pi(ctx)
    assert abs(clausen_cl(3, pi, ctx) + Fraction(3, 4) * zeta(3, ctx)) <= TIGHT
    assert abs(clausen_cl(3, pi / 2, ctx) + ctx.mpf(2) ** -3 * (1 - ctx.mpf(2) ** -2) * zeta(3, ctx)) <= TIGHT
    assert clausen_gl(1, pi, ctx) == 0
    assert abs(gl_bernoulli(2, pi, ctx) + pi ** 2 / 12) <= TIGHT
    assert abs(gl_bernoulli(1, pi / 2, ctx) - pi / 4) <= TIGHT
    assert abs(gl_bernoulli(3, pi, ctx)) <= TIGHT
    with pytest.raises(DomainError):
        clausen_cl(2, 0, ctx)
    with pytest.raises(DomainError):
        clausen_gl(2, 2 * pi, ctx)


QS = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("q", QS)
def test_gl_bernoulli_agreement(ctx, n, q):
    x = const_pi(ctx) * q
    assert abs(clausen_gl(n, x, ctx) - gl_bernoulli(n, x, ctx)) <= 1e-30
    assert abs(gl_bernoulli_pi_multiple(n, q, ctx) - gl_bernoulli(n, x, ctx)) <= TIGHT


@pytest.mark.parametrize("n,width", [(2, Fraction(1, 10**5)), (3, Fraction(1, 10**10)), (4, Fraction(1, 10**12))])
@pytest.mark.parametrize("q", QS)
def test_clausen_against_trig_series(ctx, n, q, width):
    period = 2 * q.denominator
    x = const_pi(ctx) * q
    cos_t = [ctx.cos(j * x) for j in range(period)]
    sin_t = [ctx.sin(j * x) for j in range(period)]
    mag = lambda k, c: c.mpf(Fraction(1, k ** n))
    tail = IntegralMonotone(n, 1)
    cb = sum_bracket(real_terms(lambda k, c: cos_t[k % period] / k ** n, "cos(kx)/k^n", magnitude=mag), tail, width, ctx=ctx)
    sb = sum_bracket(real_terms(lambda k, c: sin_t[k % period] / k ** n, "sin(kx)/k^n", magnitude=mag), tail, width, ctx=ctx)
    li = polylog_unit(n, x, ctx)
    assert cb.bracket.contains(li.real)
    assert sb.bracket.contains(li.imag)
    cos_fn, sin_fn = (clausen_gl, clausen_cl) if n % 2 == 0 else (clausen_cl, clausen_gl)
    assert cb.bracket.contains(cos_fn(n, x, ctx))
    assert sb.bracket.contains(sin_fn(n, x, ctx))


def test_bernoulli_examples(ctx):
    assert bernoulli_number(0) == 1
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_poly(1, Fraction(3, 7)) == Fraction(3, 7) - Fraction(1, 2)
    assert bernoulli_poly(3, Fraction(1, 4)) == Fraction(3, 64)
    for n in range(12):
        assert bernoulli_poly(n, Fraction(0)) == bernoulli_number(n)


def test_bernoulli_memo_is_thread_safe():
    with ThreadPoolExecutor(8) as pool:
        values = list(pool.map(bernoulli_number, [64] * 32 + list(range(65))))
    assert len(set(values[:32])) == 1
    assert values[32 + 64] == values[0]


def test_special_value_examples(ctx):
    pi = const_pi(ctx)
    alpha, _ = golden(ctx)
    la = ctx.ln(alpha)
    assert abs(special_value(SpecialValueId.LI2_BETA_SQ, ctx) - (pi ** 2 / 15 - la ** 2)) <= TIGHT
    assert abs(special_value("LI3_INV_ALPHA_SQ", ctx) - ctx.mpf(LI3_BETA_SQ)) <= 1e-58
    assert abs(special_value(SpecialValueId.CAMPBELL_ALPHA3, ctx) - (pi ** 2 / 12 - Fraction(3, 2) * la ** 2)) <= TIGHT
    with pytest.raises(KeyError):
        special_value("NOT_A_VALUE", ctx)


@pytest.mark.parametrize("vid", list(SpecialValueId))
def test_special_values_match_polylog(ctx, vid):
    assert abs(special_value(vid, ctx) - special_value_polylog(vid, ctx)) <= 2 ** -230


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("z", ["0.2", "0.5", "0.8"])
def test_polylog_derivative_ladder(n, z):
    ctx = make_context(320)
    z = ctx.mpf(z)
    h = ctx.mpf(10) ** -10
    d = (polylog(n, z + h, ctx) - polylog(n, z - h, ctx)) / (2 * h)
    assert abs(d - polylog(n - 1, z, ctx) / z) <= 100 * h ** 2


def test_reflection_formula(ctx):
    alpha, beta = golden(ctx)
    pi2_6 = const_pi(ctx) ** 2 / 6
    for x in (ctx.mpf("0.2"), ctx.mpf("0.4"), 1 / alpha, beta ** 2):
        r = polylog(2, x, ctx) + polylog(2, 1 - x, ctx) + ctx.ln(x) * ctx.ln(1 - x) - pi2_6
        assert abs(r) <= 1e-40


@pytest.mark.parametrize("i", [21, 25, 26])
def test_two_term_relation(ctx, i):
    x, y = dilog_two_args(i, None, ctx)
    assert abs(polylog(2, x, ctx) + polylog(2, y, ctx) - dilog_two(i, None, ctx)) <= 1e-40


def test_golden(ctx):
    alpha, beta = golden(ctx)
    assert abs(alpha * beta + 1) <= TIGHT
    assert abs(alpha + beta - 1) <= TIGHT
    assert abs(alpha - beta - ctx.sqrt(5)) <= TIGHT
    assert abs(alpha ** 2 - alpha - 1) <= TIGHT
    assert str(alpha).startswith("1.6180339887")
