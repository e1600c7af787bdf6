"""The identity catalog and its verification runner."""

from .params import ParamSpec, RealParam, canonical, parse_angle, parse_params
from .records import IdentityRecord, Lhs, Status, get, list_identities
from .verify import SuiteReport, VerificationResult, default_precision, instantiations, run_suite, verify

__all__ = [
    "IdentityRecord", "Lhs", "ParamSpec", "RealParam", "Status", "SuiteReport", "VerificationResult",
    "canonical", "default_precision", "get", "instantiations", "list_identities", "parse_angle",
    "parse_params", "run_suite", "verify",
]
