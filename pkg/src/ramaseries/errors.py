"""Exception types shared across the package."""

from .numeric import DomainError


class UnknownIdentity(LookupError):
    """No catalog entry or closed form is registered under the given id."""


class ParamDomain(DomainError):
    """Parameters are missing, malformed or outside an identity's domain."""


__all__ = ["DomainError", "UnknownIdentity", "ParamDomain"]
