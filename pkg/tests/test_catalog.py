import json
from fractions import Fraction

import pytest

from ramaseries.catalog import (IdentityRecord, Status, get, instantiations, list_identities, run_suite,
                                verify)
from ramaseries.closed_forms.golden import refl_domain
from ramaseries.errors import ParamDomain, UnknownIdentity
from ramaseries.numeric import make_context

PREC = 256


def _strip_timing(report: dict) -> str:
    report = dict(report)
    report.pop("started_at", None)
    report["entries"] = [{k: v for k, v in e.items() if k != "elapsed_seconds"} for e in report["entries"]]
    return json.dumps(report, sort_keys=True)


# ---------------------------------------------------------------------------
# registry

def test_filter_counts():
    assert len(list_identities("COR1.*")) == 7
    assert len(list_identities("DILOG.TWO.*")) == 6
    assert len(list_identities()) >= 60
    assert len(instantiations()) >= 60


def test_listing_is_sorted_and_deterministic():
    ids = [r.id for r in list_identities()]
    assert ids == sorted(ids)
    assert ids == [r.id for r in list_identities()]


@pytest.mark.parametrize("group", [
    "RAMA.PHI2", "RAMA.PHI4", "RAMA.PHI2ALT", "RAMA.PHI3ALT", "COR1.0", "COR2.6", "PARTICULAR.1", "PARTICULAR.6",
    "COR3.1", "SQRT5.3", "TRIG.COS", "TRIG.SIN", "TRIG.BERN", "MOD4.A", "MOD4.B", "MOD6.A", "MOD6.B", "FL.EVEN",
    "FL.ODD", "FL.WEIGHTED.L", "FL.WEIGHTED.F", "FL.SHIFT.L", "FL.SHIFT.F", "SPECIAL.LI2.1", "SPECIAL.LI2.4",
    "SPECIAL.LI3.ALPHA", "SPECIAL.CAMPBELL", "ALPHA.1", "ALPHA.7", "DILOG.TWO.21", "DILOG.TWO.26", "DILOG.REFL.1",
    "DILOG.REFL.4", "LUCAS.RESTATE.1", "LUCAS.RESTATE.6", "FIBLUC.ID1", "FIBLUC.ID2", "RAM.31", "RAM.35", "RAM61",
    "BINOM.LEMMA", "BINOM.S5A", "BINOM.S5B", "BINOM.B59", "BINOM.FL.E", "BINOM.FL.O", "BINOM.K2", "BINOM.K2.S5",
    "TELE.1", "TELE.3", "PAFRAC"])
def test_groups_registered(group):
    rec = get(group)
    assert isinstance(rec, IdentityRecord)
    assert rec.anchor
    assert rec.defaults


def test_every_record_parses_its_defaults():
    for rec in list_identities():
        for d in rec.defaults:
            rec.parse(d)


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        get("NO.SUCH.ID")
    with pytest.raises(UnknownIdentity):
        verify("NO.SUCH.ID")


@pytest.mark.parametrize("identity,params", [
    ("THM1", {"z": "1", "p": 1}),
    ("THM1", {"z": "1/2"}),
    ("THM1", {"z": "1/2", "p": 1, "q": 3}),
    ("THM1", {"z": "1/2", "p": -1}),
    ("THM1", {"z": "banana", "p": 1}),
    ("FL.EVEN", {"n": 3}),
    ("FL.ODD", {"n": 2}),
    ("BINOM.S5A", {"m": 1}),
    ("PAFRAC", {"p": 1}),
    ("TRIG.COS", {"x": "2", "p": 1}),
    ("TRIG.COS", {"x": "2*pi", "p": 1}),
    ("TRIG.BERN", {"x": "pi", "p": 1, "form": "tan"}),
    ("RAM61", {"p": 3, "q": 2}),
    ("COR1.1", {"p": 1}),
])
def test_param_domain(identity, params):
    with pytest.raises(ParamDomain):
        verify(identity, params, precision=PREC)


# ---------------------------------------------------------------------------
# verification

def test_phi2_example():
    ctx = make_context(PREC)
    res = verify("RAMA.PHI2", precision=PREC)
    assert res.contained and res.residual == 0
    assert res.bracket.contains(ctx.ln(2) - ctx.mpf(0.5))
    assert res.bracket.width() <= 1e-6


def test_dilog_two_21_example():
    ctx = make_context(PREC)
    res = verify("DILOG.TWO.21", precision=PREC)
    a = (1 + ctx.sqrt(5)) / 2
    assert res.contained
    assert abs(res.rhs_value - (ctx.pi**2 / 12 + 2 * ctx.ln(a) ** 2 - ctx.ln(2) ** 2)) < 1e-70
    assert res.bracket.width() <= 1e-40


def test_custom_real_param():
    res = verify("THM1", {"z": "1/sqrt(5)", "p": 3}, precision=PREC)
    assert res.contained
    assert res.params == {"p": 3, "z": "1/sqrt(5)"} or res.params == {"z": "1/sqrt(5)", "p": 3}


def test_explicit_width_and_precision():
    res = verify("COR3.2", precision=320, target_width=Fraction(1, 10**50))
    assert res.contained
    assert res.precision_bits == 320
    assert res.bracket.width() <= 1e-50


def test_contained_implies_zero_residual():
    for identity, params in instantiations("COR3.*") + instantiations("SQRT5.*"):
        res = verify(identity, params, precision=PREC)
        assert res.contained == (res.residual == 0)


def test_result_json_digits():
    res = verify("TELE.1", precision=PREC)
    js = res.to_json()
    for key in ("id", "params", "status", "contained", "bracket_lo", "bracket_hi", "rhs", "residual",
                "terms_used", "elapsed_seconds"):
        assert key in js
    digits = sum(ch.isdigit() for ch in js["rhs"].lstrip("-0."))
    assert digits >= 40


def test_run_suite_particular():
    report = run_suite("PARTICULAR.*", precision=PREC)
    assert len(report.entries) == 6
    assert all(e["contained"] for e in report.entries)
    assert report.exit_code == 0


def test_run_suite_tele():
    report = run_suite("TELE.*", precision=PREC)
    assert len(report.entries) == 3
    assert all(e["contained"] for e in report.entries)
    assert report.summary == {"total": 3, "passed": 3, "failed": 0, "as_printed_discrepancies": 0}


def test_run_suite_deterministic_across_jobs():
    serial = run_suite("COR3.*", precision=PREC, jobs=1)
    parallel = run_suite("COR3.*", precision=PREC, jobs=2)
    assert _strip_timing(serial.to_json()) == _strip_timing(parallel.to_json())
    ids = [(e["id"], json.dumps(e["params"], sort_keys=True)) for e in serial.entries]
    assert ids == sorted(ids)


def test_run_suite_order_is_by_params():
    report = run_suite("FL.EVEN", precision=PREC)
    assert [e["params"]["n"] for e in report.entries] == [2, 4, 6, 8]


@pytest.mark.parametrize("identity,params", [
    ("PARTICULAR.2", {}), ("COR3.1", {}), ("SQRT5.2", {}), ("DILOG.TWO.21", {}), ("THM1", {"z": "1/2", "p": 2}),
    ("FL.EVEN", {"n": 4}), ("ALPHA.3", {}), ("COR2.3", {}), ("LUCAS.RESTATE.2", {}),
])
def test_halving_width_keeps_verdict(identity, params):
    base = verify(identity, params, precision=PREC)
    assert base.status is Status.MUST_PASS and base.contained
    halved = verify(identity, params, precision=PREC, target_width=base.target_width / 2)
    assert halved.contained
    assert halved.bracket.width() <= float(base.target_width / 2)


# ---------------------------------------------------------------------------
# parameter sweeps

@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_fl_even_sweep(n):
    assert verify("FL.EVEN", {"n": n}, precision=PREC).contained


@pytest.mark.parametrize("n", [1, 3, 5])
def test_fl_odd_sweep(n):
    assert verify("FL.ODD", {"n": n}, precision=PREC).contained


@pytest.mark.parametrize("i", range(1, 5))
@pytest.mark.parametrize("p,q", [(1, 2), (2, 2), (2, 4), (3, 2)])
def test_refl_sweep(i, p, q):
    identity = f"DILOG.REFL.{i}"
    if refl_domain(i, p, q, make_context(128)):
        assert verify(identity, {"p": p, "q": q}, precision=PREC).contained
        assert {"p": p, "q": q} in get(identity).defaults
    else:
        with pytest.raises(ParamDomain):
            verify(identity, {"p": p, "q": q}, precision=PREC)


@pytest.mark.parametrize("identity", ["BINOM.S5A", "BINOM.S5B"])
@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_binomial_golden_sweeps(identity, m):
    assert verify(identity, {"m": m}, precision=PREC).contained


def test_as_printed_residual_reported():
    report = run_suite("RAM61", precision=PREC)
    assert report.exit_code == 0
    for e in report.entries:
        assert e["status"] == Status.AS_PRINTED.value
        if not e["contained"]:
            assert e in report.as_printed_discrepancies
            mantissa = e["residual"].lstrip("-0.").split("e")[0].replace(".", "")
            assert len(mantissa) >= 6
            assert float(e["residual"]) > 0


def test_full_suite_must_pass():
    report = run_suite(precision=PREC)
    assert report.summary["total"] >= 60
    assert [e for e in report.entries if "error" in e] == []
    assert report.failures == []
    assert report.exit_code == 0
    assert {e["id"] for e in report.as_printed_discrepancies} <= {"RAM61", "BINOM.B59"}
