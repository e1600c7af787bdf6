"""Acceptance gate: one test per primary criterion, each recording a PASS/FAIL line."""

import time
from fractions import Fraction

from ramaseries.catalog import Status, instantiations, verify
from ramaseries.closed_forms import f_at_1, f_at_i, f_closed, g_closed
from ramaseries.closed_forms.golden import particular
from ramaseries.fiblucas import binet_fib, binet_lucas, fib, hoggatt, lucas
from ramaseries.numeric import elementary, make_context
from ramaseries.oracle import AlternatingLeibniz, Geometric, exact_terms, sum_bracket
from ramaseries.special import clausen_gl, eta, gl_bernoulli, polylog, zeta, zeta_bracket

PREC = 256


def _run(pattern, **kw):
    return [verify(i, p, precision=PREC, **kw) for i, p in instantiations(pattern)]


def _fmt(r):
    params = ",".join(f"{k}={v}" for k, v in r.params.items())
    return f"{r.id}({params})" if params else r.id


def test_constants_absolute_class(criterion):
    results, slow = [], []
    for identity in ("RAMA.PHI2", "RAMA.PHI4", "RAMA.PHI2ALT", "RAMA.PHI3ALT"):
        t0 = time.perf_counter()
        res = verify(identity, precision=PREC, max_terms=2_000_000)
        if time.perf_counter() - t0 > 30:
            slow.append(identity)
        results.append(res)
    bad = [_fmt(r) for r in results if not (r.contained and r.residual == 0 and r.bracket.width() <= 1e-6)]
    ok = not bad and not slow
    criterion("constants sum 1/((2k-1)(2k)(2k+1)) and companions at width 1e-6, <= 30 s each", ok,
              f"failed {bad} slow {slow}" if not ok else "")
    assert ok


def test_boundary_tables(criterion):
    ctx = make_context(PREC)
    bad = []
    for p in range(7):
        r1 = verify(f"COR1.{p}", precision=PREC, target_width=Fraction(1, 10**6))
        ri = verify(f"COR2.{p}", precision=PREC, target_width=Fraction(1, 10**12))
        if not (r1.contained and r1.bracket.width() <= 1e-6):
            bad.append(_fmt(r1))
        if not (ri.contained and ri.bracket.width() <= 1e-12):
            bad.append(_fmt(ri))
    # listed particular values as expressions against the general parity forms
    general = [f_at_1(1, ctx), f_at_i(1, ctx), f_at_1(2, ctx), f_at_i(2, ctx), f_at_1(3, ctx), f_at_i(3, ctx)]
    for i, g in enumerate(general, 1):
        if abs(particular(i, ctx) - g) > 1e-50:
            bad.append(f"PARTICULAR.{i} expression")
    bad += [_fmt(r) for r in _run("PARTICULAR.*") if not r.contained]
    criterion("F(1,p) and F(i,p) tables p=0..6 plus the six listed values", not bad, f"failed {bad}" if bad else "")
    assert not bad


def test_master_grid(criterion):
    t0 = time.perf_counter()
    bad = []
    for z in ("0.1", "0.3", "0.5", "0.7", "0.9"):
        for p in range(7):
            r = verify("THM1", {"z": z, "p": p}, precision=PREC, target_width=Fraction(1, 10**40))
            if not (r.contained and r.bracket.width() <= 1e-40):
                bad.append(_fmt(r))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 60
    criterion("F(z,p) grid 5 x 7 at width 1e-40 in <= 60 s", ok, f"{elapsed:.1f}s" + (f" failed {bad}" if bad else ""))
    assert ok


def test_cross_form(criterion):
    ctx = make_context(PREC)
    worst = 0
    for z in ("0.04", "0.25", "0.49"):
        zz = ctx.mpf(z)
        for p in range(6):
            worst = max(worst, abs(g_closed(zz, p, ctx) - 2**p * f_closed(ctx.sqrt(zz), p, ctx)))
    ok = worst <= ctx.mp.ldexp(1, -240)
    criterion("G(z,p) = 2^p F(sqrt z, p) within 2^-240", ok, f"max deviation {ctx.mp.nstr(worst, 3)}")
    assert ok


def test_half_power_series(criterion):
    results = _run("COR3.*")
    bad = [_fmt(r) for r in results if not (r.contained and r.bracket.width() <= 1e-30)]
    criterion("F(1/sqrt2, p) series p=1..3 at width 1e-30", not bad, f"failed {bad}" if bad else "")
    assert not bad


def test_dilogarithm_suite(criterion):
    ctx = make_context(PREC)
    results = _run("SPECIAL.*") + _run("DILOG.TWO.*") + _run("DILOG.REFL.*")
    bad = [_fmt(r) for r in results if not (r.contained and r.residual <= 1e-40)]
    loose = [_fmt(r) for r in results if r.bracket.width() > 1e-40]
    # the alternating Li2(-1) series is also certified through the geometric Li2(1/2) series
    half = sum_bracket(exact_terms(lambda k: (1, 2**k * k * k), "1/(2^k k^2)"), Geometric(Fraction(1, 2)),
                       Fraction(1, 10**45), ctx=ctx)
    li2_m1 = -ctx.ln(2) ** 2 / 2 - (half.bracket.lo + half.bracket.hi) / 2
    geometric_ok = abs(li2_m1 + ctx.pi**2 / 12) <= 1e-40
    zb = zeta_bracket(3, ctx)
    z3_ok = zb.width() <= 1e-40 and zb.contains(zeta(3, ctx))
    ok = not bad and geometric_ok and z3_ok and all(i.startswith("SPECIAL.LI2.1") for i in loose)
    criterion("dilogarithm and trilogarithm values, two-term relations and reflection identities to residual 1e-40",
              ok, f"{len(results)} entries" + (f" failed {bad}" if bad else "") + (f" alternating {loose}" if loose else ""))
    assert ok


def test_fibonacci_lucas_series(criterion):
    results = []
    for pattern in ("LUCAS.RESTATE.*", "ALPHA.*", "FL.EVEN", "FL.ODD", "FL.WEIGHTED.*", "FL.SHIFT.*", "RAM.3*",
                    "FIBLUC.*", "RAM61"):
        results += _run(pattern)
    bad = [_fmt(r) for r in results if not r.contained and r.status is Status.MUST_PASS]
    printed = [r for r in results if not r.contained and r.status is Status.AS_PRINTED]
    digits_ok = all(len(r.to_json()["residual"].lstrip("-0.").replace(".", "").split("e")[0]) >= 6 for r in printed)
    report = "; ".join(f"{_fmt(r)} residual {r.to_json(12)['residual']}" for r in printed)
    ok = not bad and digits_ok
    criterion("Lucas/Fibonacci restatements, golden-power series, sweeps and reflection series", ok,
              (f"failed {bad} " if bad else "") + (f"as printed: {report}" if report else ""))
    assert ok


def test_binomial_identities(criterion):
    bad = []
    for m in (2, 3, 4):
        for z in ("0.3", "1/sqrt(5)"):
            r = verify("BINOM.LEMMA", {"m": m, "z": z}, precision=PREC, target_width=Fraction(1, 10**30))
            if not (r.contained and r.bracket.width() <= 1e-30):
                bad.append(_fmt(r))
    special = []
    for pattern in ("BINOM.S5A", "BINOM.S5B", "BINOM.B59", "BINOM.K2.S5", "BINOM.FL.*"):
        special += _run(pattern)
    bad += [_fmt(r) for r in special if not r.contained and r.status is Status.MUST_PASS]
    printed = [f"{_fmt(r)} residual {r.to_json(12)['residual']}" for r in special if not r.contained]
    criterion("binomial-weighted series and their sqrt5 specializations", not bad,
              (f"failed {bad} " if bad else "") + (f"as printed: {'; '.join(printed)}" if printed else ""))
    assert not bad


def test_property_spot_checks(criterion):
    ctx = make_context(PREC)
    checks = {}
    # oracle refinement: coarser and finer brackets nest around the same value
    gen = exact_terms(lambda k: ((-1) ** (k + 1), k * k), "(-1)^(k+1)/k^2")
    coarse = sum_bracket(gen, AlternatingLeibniz(), Fraction(1, 10**4), ctx=ctx).bracket
    fine = sum_bracket(gen, AlternatingLeibniz(), Fraction(1, 10**8), ctx=ctx).bracket
    checks["refinement"] = coarse.overlaps(fine) and fine.contains(ctx.pi**2 / 12)
    # elementary round trips
    checks["exp/ln"] = all(
        abs(elementary("ln", elementary("exp", x, ctx=ctx), ctx=ctx) - x) <= max(1, abs(x)) * ctx.mp.ldexp(1, -PREC + 8)
        for x in map(ctx.mpf, ("-20", "-1.5", "0.001", "3", "40")))
    # Binet and Hoggatt residuals
    checks["binet"] = all(abs(binet_fib(n, ctx) - fib(n)) <= abs(fib(n)) * ctx.mp.ldexp(1, -PREC + 8) + 1e-60
                          and abs(binet_lucas(n, ctx) - lucas(n)) <= lucas(n) * ctx.mp.ldexp(1, -PREC + 8)
                          for n in range(0, 80, 7))
    checks["hoggatt"] = all(hoggatt(p, q, ctx).max() <= 1e-50 for p in range(1, 8) for q in range(1, 8))
    # eta and zeta
    checks["eta-zeta"] = all(abs(eta(n, ctx) - (1 - ctx.mpf(2) ** (1 - n)) * zeta(n, ctx)) <= 1e-70
                             for n in range(2, 11))
    # Glaisher functions against Bernoulli polynomials
    checks["gl-bernoulli"] = all(abs(clausen_gl(n, ctx.mpf(x), ctx) - gl_bernoulli(n, ctx.mpf(x), ctx)) <= 1e-60
                                 for n in (2, 3, 4, 5) for x in ("0.3", "1.7", "4"))
    # z d/dz Li_n = Li_(n-1)
    hp = make_context(320)
    h = hp.mpf(10) ** -10
    checks["polylog ladder"] = all(
        abs((polylog(n, hp.mpf(z) + h, hp) - polylog(n, hp.mpf(z) - h, hp)) / (2 * h)
            - polylog(n - 1, hp.mpf(z), hp) / hp.mpf(z)) <= 100 * h**2
        for n in (2, 3, 4) for z in ("0.2", "-0.6", "0.9"))
    failed = [k for k, v in checks.items() if not v]
    criterion("property spot checks (full suites in the other test modules)", not failed,
              f"failed {failed}" if failed else ", ".join(checks))
    assert not failed
