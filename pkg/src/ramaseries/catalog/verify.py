"""Verification of catalog identities: certified LHS bracket vs. closed-form RHS."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Mapping, Optional

from ..numeric import Bracket, make_context, to_decimal
from ..oracle import sum_combination
from .params import canonical, sort_key
from .records import IdentityRecord, Status, get, list_identities

MIN_DECIMAL_DIGITS = 40
# radius assigned to irrational constants evaluated at working precision
OFFSET_RADIUS_BITS = 20


def default_precision() -> int:
    """Working precision from $RAMASERIES_PREC_BITS, else the library default."""
    return make_context().prec_bits


@dataclass
class VerificationResult:
    id: str
    params: dict
    status: Status
    bracket: Bracket
    rhs_value: object
    contained: bool
    residual: object
    terms_used: int
    elapsed_seconds: float
    converged: bool
    target_width: Fraction
    precision_bits: int

    @property
    def passed(self) -> bool:
        return self.contained or self.status is Status.AS_PRINTED

    def to_json(self, digits: Optional[int] = None) -> dict:
        digits = digits or max(MIN_DECIMAL_DIGITS, self.precision_bits // 3)
        return {
            "id": self.id,
            "params": self.params,
            "status": self.status.value,
            "contained": self.contained,
            "bracket_lo": to_decimal(self.bracket.lo, digits),
            "bracket_hi": to_decimal(self.bracket.hi, digits),
            "rhs": to_decimal(self.rhs_value, digits),
            "residual": to_decimal(self.residual, digits),
            "terms_used": self.terms_used,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
            "converged": self.converged,
        }


def verify(identity: str, params: Optional[Mapping] = None, *, precision: Optional[int] = None,
           target_width=None, max_terms: int = 2_000_000) -> VerificationResult:
    """Bracket the left-hand series of ``identity`` and test the closed form against it.

    ``params`` may hold raw strings or numbers; they are validated against the
    record's schema.  The result is ``contained`` when the right-hand side lies
    in the certified bracket.
    """
    rec: IdentityRecord = get(identity)
    parsed = rec.parse(params)
    bits = precision or default_precision()
    ctx = make_context(bits)
    width = Fraction(target_width) if target_width is not None else rec.target_width(parsed)
    start = time.perf_counter()
    lhs = rec.lhs(parsed)
    combined = sum_combination(lhs.parts, width, max_terms, ctx, lhs.constant)
    bracket = combined.bracket
    if lhs.offset is not None:
        off = lhs.offset(ctx)
        bracket = bracket + Bracket.around(off, abs(off) * ctx.mpf(2) ** (-ctx.prec_bits + OFFSET_RADIUS_BITS)
                                           + ctx.mpf(2) ** (-ctx.prec_bits))
    rhs = rec.rhs(parsed, ctx)
    elapsed = time.perf_counter() - start
    contained = bracket.contains(rhs)
    residual = ctx.mpf(0) if contained else bracket.distance(rhs)
    return VerificationResult(
        id=rec.id, params=canonical(parsed), status=rec.status, bracket=bracket, rhs_value=rhs,
        contained=contained, residual=residual, terms_used=combined.terms_used, elapsed_seconds=elapsed,
        converged=combined.converged, target_width=width, precision_bits=bits)


# ---------------------------------------------------------------------------
# suites

def instantiations(pattern: Optional[str] = None) -> list[tuple[str, dict]]:
    """Every (id, canonical params) pair of the default instantiations, ordered."""
    out = []
    for rec in list_identities(pattern):
        parsed = sorted((rec.parse(d) for d in rec.defaults), key=sort_key)
        out.extend((rec.id, canonical(p)) for p in parsed)
    return out


def _run_one(job) -> dict:
    identity, params, precision, target_width, max_terms = job
    try:
        res = verify(identity, params, precision=precision, target_width=target_width, max_terms=max_terms)
        entry = res.to_json()
    except Exception as exc:  # reported per entry, never aborts the suite
        rec = get(identity)
        entry = {"id": identity, "params": params, "status": rec.status.value, "contained": False,
                 "error": f"{type(exc).__name__}: {exc}"}
    return entry


@dataclass
class SuiteReport:
    version: str
    precision_bits: int
    started_at: str
    entries: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e["contained"] and e["status"] == Status.MUST_PASS.value]

    @property
    def as_printed_discrepancies(self) -> list:
        return [e for e in self.entries if not e["contained"] and e["status"] == Status.AS_PRINTED.value]

    @property
    def summary(self) -> dict:
        total = len(self.entries)
        return {
            "total": total,
            "passed": sum(1 for e in self.entries if e["contained"]),
            "failed": len(self.failures),
            "as_printed_discrepancies": len(self.as_printed_discrepancies),
        }

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def to_json(self) -> dict:
        return {"version": self.version, "precision_bits": self.precision_bits, "started_at": self.started_at,
                "summary": self.summary, "entries": self.entries}


def run_suite(pattern: Optional[str] = None, *, precision: Optional[int] = None, jobs: int = 1,
              target_width=None, max_terms: int = 2_000_000) -> SuiteReport:
    """Verify every default instantiation matching ``pattern``.

    Entries come back in (id, params) order whatever the number of jobs.
    """
    from .. import __version__

    bits = precision or default_precision()
    started = datetime.now(timezone.utc).isoformat(timespec="seconds")
    work = [(i, p, bits, target_width, max_terms) for i, p in instantiations(pattern)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_run_one, work))
    else:
        entries = [_run_one(w) for w in work]
    return SuiteReport(__version__, bits, started, entries)
